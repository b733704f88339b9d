#ifndef MACBINOM_PARTITION_HPP
#define MACBINOM_PARTITION_HPP

// Partitions and the diagram combinatorics the whole engine runs on: hooks,
// conjugates, complements in a box, concave-corner walks, reverse tableaux,
// standard-tableau counts.
//
// Matrix convention: row index i grows downward, column index j to the
// right, both 1-based.  Corner points live on the integer grid where a box
// (i, j) occupies x in [i-1, i], y in [j-1, j].

#include <string>
#include <vector>

#include "macbinom/numeric.hpp"

namespace macbinom {

class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "3,1,1"; the empty string is the empty partition.  Trailing zeros are
    // accepted and stripped.
    static Partition parse(const std::string& s);

    const std::vector<int>& parts() const { return p_; }
    int length() const { return static_cast<int>(p_.size()); }
    int size() const;                       // |lambda|
    int part(int i) const;                  // 1-based, 0 beyond length
    bool empty() const { return p_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;   // mu subset of this
    int conj_part(int j) const;                 // lambda'_j

    // n(lambda) = sum (i-1) lambda_i.
    long n_stat() const;

    // Rows i with lambda_i > lambda_{i+1} (a box can be removed).
    std::vector<int> removable_rows() const;
    // Rows i with lambda_{i-1} > lambda_i (a box can be added), i = 1..l+1.
    std::vector<int> addable_rows() const;

    Partition add_box(int row) const;
    Partition remove_box(int row) const;

    bool operator==(const Partition& o) const { return p_ == o.p_; }
    bool operator<(const Partition& o) const { return p_ < o.p_; }

    std::string to_string() const;

  private:
    std::vector<int> p_;
};

struct Box {
    int row = 0, col = 0;  // 1-based
};

struct HookData {
    int arm = 0, coarm = 0, leg = 0, coleg = 0;
};

// Box must lie inside lambda.
HookData hook_data(const Partition& lambda, Box s);

// All boxes of lambda in row-major order.
std::vector<Box> boxes_of(const Partition& lambda);

// Complement of lambda in the b x n box: (b - lambda_n, ..., b - lambda_1).
// Requires lambda_1 <= b and l(lambda) <= n.
Partition complement(int b, int n, const Partition& lambda);

// Every partition with |lambda| <= max_size and l(lambda) <= max_parts,
// ordered by size, then descending lexicographically within a size.
std::vector<Partition> enumerate_partitions(int max_size, int max_parts);

// Concave corner points of nu on the integer grid, with the inner corner of
// the addable row star_row excluded and the star placed at (star_row,
// nu_{star_row} + 1).  star_row must be an addable row of nu.
struct CornerPoints {
    std::vector<std::pair<int, int>> inner;  // (x, y)
    std::vector<std::pair<int, int>> outer;
    std::pair<int, int> star;
};
CornerPoints corner_points(const Partition& nu, int star_row);

// Reverse tableau: entries in 1..n, weakly decreasing along rows, strictly
// decreasing down columns.
class ReverseTableau {
  public:
    ReverseTableau(const Partition& shape, std::vector<int> entries)
        : shape_(shape), e_(std::move(entries)) {}

    const Partition& shape() const { return shape_; }
    int entry(int row, int col) const;  // 1-based

    // The flag of partitions S_r = {s : T(s) >= r}, r = 1..n+1 (S_{n+1} is
    // empty); S_r / S_{r+1} is the horizontal strip of entries equal to r.
    std::vector<Partition> chain(int n) const;

  private:
    Partition shape_;
    std::vector<int> e_;  // row-major
};

std::vector<ReverseTableau> enumerate_reverse_tableaux(const Partition& shape, int n);

// Number of standard tableaux of the skew shape lambda/mu (mu may be empty);
// 0 when mu is not contained in lambda.
Int dim_standard(const Partition& lambda, const Partition& mu);

inline Int dim_standard(const Partition& lambda) { return dim_standard(lambda, Partition()); }

// Multinomial |beta|! / (|lambda|! |nu|! (|beta|-|lambda|-|nu|)!).
Int multinomial3(int total, int k1, int k2);

}  // namespace macbinom

#endif
