#include "macbinom/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <utility>
#include <vector>

#include "macbinom/parse.hpp"
#include "macbinom/vars.hpp"

namespace macbinom {

namespace {

using ordered_json = nlohmann::ordered_json;

Monomial x_part(const Monomial& m) {
    Monomial r;
    for (int i = vars::X0; i < vars::kMax; ++i) r.set(i, m.exp(i));
    return r;
}

}  // namespace

std::string field_json_string(const FieldElement& f) {
    bool has_x = false;
    for (int i = vars::X0; i < vars::kMax && !has_x; ++i) has_x = f.uses(i);

    ordered_json j;
    if (!has_x) {
        j["value"] = f.to_string();
        return j.dump();
    }

    for (int i = vars::X0; i < vars::kMax; ++i)
        if (f.den().uses(i))
            throw contract_error("cannot serialize: denominator depends on x");

    // Group numerator terms by their x-monomial; the coefficient of each
    // group is a ground-field element (reduced against the denominator).
    std::vector<std::pair<Monomial, Poly>> groups;
    for (const Poly::Term& t : f.num().terms()) {
        Monomial xm = x_part(t.m);
        Poly piece = Poly::term(t.c, t.m / xm);
        if (!groups.empty() && groups.back().first == xm) {
            groups.back().second += piece;
        } else {
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const auto& g) { return g.first == xm; });
            if (it == groups.end())
                groups.emplace_back(xm, piece);
            else
                it->second += piece;
        }
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return mono_after(a.first, b.first); });

    ordered_json vars_list = ordered_json::array();
    for (int i = 0; i < vars::kMax; ++i)
        if (f.uses(i)) vars_list.push_back(vars::name(i));
    j["vars"] = std::move(vars_list);

    ordered_json terms = ordered_json::array();
    for (const auto& [xm, coeff_num] : groups) {
        ordered_json mono = ordered_json::object();
        for (int i = vars::X0; i < vars::kMax; ++i)
            if (xm.exp(i) != 0) mono[vars::name(i)] = xm.exp(i);
        FieldElement c(coeff_num, f.den());
        ordered_json term;
        term["monomial"] = std::move(mono);
        term["coeff"] = {{"num", c.num().to_string()}, {"den", c.den().to_string()}};
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

FieldElement field_from_json_string(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    if (j.contains("value")) {
        if (!j["value"].is_string()) throw parse_error("\"value\" must be a string");
        return parse_field_expression(j["value"].get<std::string>());
    }
    if (!j.contains("terms") || !j["terms"].is_array())
        throw parse_error("expected \"value\" or \"terms\"");
    FieldElement total;
    for (const auto& term : j["terms"]) {
        if (!term.contains("monomial") || !term.contains("coeff"))
            throw parse_error("term needs \"monomial\" and \"coeff\"");
        Monomial xm;
        for (auto it = term["monomial"].begin(); it != term["monomial"].end(); ++it) {
            int id = vars::id_of(it.key());
            if (id < 0 || !vars::is_x(id))
                throw parse_error("monomial key is not an x variable: " + it.key());
            if (!it.value().is_number_integer())
                throw parse_error("monomial exponent must be an integer");
            xm.set(id, it.value().get<int>());
        }
        const auto& cj = term["coeff"];
        if (!cj.contains("num") || !cj.contains("den") || !cj["num"].is_string() ||
            !cj["den"].is_string())
            throw parse_error("coeff needs string \"num\" and \"den\"");
        FieldElement c = parse_field_expression(cj["num"].get<std::string>()) /
                         parse_field_expression(cj["den"].get<std::string>());
        total += c * FieldElement(Poly::term(Rat(1), xm));
    }
    return total;
}

}  // namespace macbinom
