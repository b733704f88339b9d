#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "macbinom/partition.hpp"

#include <vector>

using namespace macbinom;

TEST_CASE("parse and render") {
    CHECK(Partition::parse("3,1,1").parts() == std::vector<int>{3, 1, 1});
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse(" 2 , 1 ").parts() == std::vector<int>{2, 1});
    CHECK(Partition::parse("3,1,0,0").parts() == std::vector<int>{3, 1});
    CHECK(Partition::parse("2,1").to_string() == "2,1");
    CHECK(Partition().to_string() == "");
    CHECK_THROWS_AS(Partition::parse("1,3"), parse_error);
    CHECK_THROWS_AS(Partition::parse("2,,1"), parse_error);
    CHECK_THROWS_AS(Partition::parse("a"), parse_error);
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), parse_error);
    CHECK_THROWS_AS(Partition(std::vector<int>{-1}), parse_error);
}

TEST_CASE("basic statistics") {
    Partition p = Partition::parse("3,1");
    CHECK(p.size() == 4);
    CHECK(p.length() == 2);
    CHECK(p.part(1) == 3);
    CHECK(p.part(5) == 0);
    CHECK(p.conjugate() == Partition::parse("2,1,1"));
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.conj_part(1) == 2);
    CHECK(p.conj_part(3) == 1);
    CHECK(Partition::parse("2,1").n_stat() == 1);
    CHECK(Partition::parse("1,1,1").n_stat() == 3);
    CHECK(Partition::parse("3,1").contains(Partition::parse("2,1")));
    CHECK_FALSE(Partition::parse("3,1").contains(Partition::parse("1,1,1")));
}

TEST_CASE("hooks") {
    Partition lam = Partition::parse("3,1");
    HookData h = hook_data(lam, {1, 1});
    CHECK(h.arm == 2);
    CHECK(h.leg == 1);
    CHECK(h.coarm == 0);
    CHECK(h.coleg == 0);
    HookData h2 = hook_data(lam, {1, 3});
    CHECK(h2.arm == 0);
    CHECK(h2.leg == 0);
    CHECK(h2.coarm == 2);
    CHECK(boxes_of(lam).size() == 4);
    CHECK_THROWS_AS(hook_data(lam, {2, 2}), contract_error);
}

TEST_CASE("complement in a box") {
    CHECK(complement(3, 2, Partition::parse("2")) == Partition::parse("3,1"));
    CHECK(complement(2, 2, Partition::parse("2,2")).empty());
    CHECK(complement(2, 2, Partition()) == Partition::parse("2,2"));
    CHECK_THROWS_AS(complement(1, 1, Partition::parse("2")), contract_error);
}

TEST_CASE("box moves") {
    Partition p = Partition::parse("2,2,1");
    CHECK(p.removable_rows() == std::vector<int>{2, 3});
    CHECK(p.addable_rows() == std::vector<int>{1, 3, 4});
    CHECK(p.add_box(1) == Partition::parse("3,2,1"));
    CHECK(p.remove_box(3) == Partition::parse("2,2"));
    CHECK_THROWS_AS(p.add_box(2), contract_error);
    CHECK_THROWS_AS(p.remove_box(1), contract_error);
}

TEST_CASE("enumeration order: size, then descending lex") {
    std::vector<Partition> got = enumerate_partitions(3, 2);
    std::vector<Partition> want = {Partition(),
                                   Partition::parse("1"),
                                   Partition::parse("2"),
                                   Partition::parse("1,1"),
                                   Partition::parse("3"),
                                   Partition::parse("2,1")};
    CHECK(got == want);
    CHECK(enumerate_partitions(0, 3) == std::vector<Partition>{Partition()});
    CHECK(enumerate_partitions(4, 1).size() == 5);
}

TEST_CASE("corner points around an addable row") {
    // nu = (2), star row 2: star sits at (2,1); the remaining concave corner
    // is (0,2), the convex corner (1,2).
    CornerPoints cp = corner_points(Partition::parse("2"), 2);
    CHECK(cp.star == std::pair<int, int>(2, 1));
    REQUIRE(cp.inner.size() == 1);
    CHECK(cp.inner[0] == std::pair<int, int>(0, 2));
    REQUIRE(cp.outer.size() == 1);
    CHECK(cp.outer[0] == std::pair<int, int>(1, 2));

    // empty partition, the single addable row
    CornerPoints cp0 = corner_points(Partition(), 1);
    CHECK(cp0.star == std::pair<int, int>(1, 1));
    CHECK(cp0.inner.empty());
    CHECK(cp0.outer.empty());

    CHECK_THROWS_AS(corner_points(Partition::parse("2"), 3), contract_error);
}

TEST_CASE("reverse tableaux enumeration") {
    // shape (2,1) with entries <= 2: rows weakly decreasing, columns
    // strictly decreasing leaves exactly (2,2)/(1) and (2,1)/(1).
    std::vector<ReverseTableau> ts = enumerate_reverse_tableaux(Partition::parse("2,1"), 2);
    CHECK(ts.size() == 2);
    for (const ReverseTableau& T : ts) {
        CHECK(T.entry(1, 1) == 2);
        CHECK(T.entry(2, 1) == 1);
    }
    // chain: S_1 = full shape, S_2 = boxes with entry >= 2, S_3 empty
    std::vector<Partition> ch = ts[0].chain(2);
    REQUIRE(ch.size() == 3);
    CHECK(ch[0] == Partition::parse("2,1"));
    CHECK(ch[2].empty());
}

TEST_CASE("standard tableau counts") {
    CHECK(dim_standard(Partition::parse("2,1")) == 2);
    CHECK(dim_standard(Partition::parse("3,2")) == 5);
    CHECK(dim_standard(Partition::parse("2,2"), Partition::parse("1")) == 2);
    CHECK(dim_standard(Partition()) == 1);
    CHECK(dim_standard(Partition::parse("1"), Partition::parse("2")) == 0);
    CHECK(multinomial3(5, 2, 2) == 30);
    CHECK(multinomial3(4, 2, 2) == 6);
    CHECK(multinomial3(3, 0, 0) == 1);
}
