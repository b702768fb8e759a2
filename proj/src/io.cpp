#include "cvforms/io.hpp"

#include <stdexcept>

namespace cvf {

namespace {

json one_based(const std::vector<std::vector<int>>& groups) {
    json out = json::array();
    for (const auto& g : groups) {
        json row = json::array();
        for (int v : g) row.push_back(v + 1);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
    try {
        Polynomial p(j.at("nvars").get<int>());
        for (const auto& t : j.at("terms")) {
            Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
            c.canonicalize();
            p.add_term(t.at("exp").get<ExponentVector>(), c);
        }
        return p;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
}

json to_json(const CvForm& f) { return {{"entries", f.entries()}}; }

json to_json(const RowBlock& rb) {
    return {{"sign", rb.total_sign},
            {"blocks", rb.blocks},
            {"var_partition", one_based(rb.var_partition)},
            {"text", to_string(rb)}};
}

json to_json(const Expansion& ex) {
    json terms = json::array();
    for (const auto& rb : ex.terms) terms.push_back(to_json(rb));
    return {{"nvars", ex.factor.nvars},
            {"vanishes", ex.factor.vanishes},
            {"vandermonde_blocks", one_based(ex.factor.vandermonde_blocks)},
            {"terms", std::move(terms)}};
}

json to_json(const Ribbon& r) {
    json boxes = json::array();
    for (const Box& b : r.boxes()) boxes.push_back({b.row, b.col});
    return {{"boxes", std::move(boxes)}};
}

json to_json(const SkewTableau& t) {
    json j = to_json(t.ribbon);
    j["filling"] = t.filling;
    return j;
}

json to_json(const BasisElement& e, bool with_type) {
    json j = to_json(e.form);
    if (with_type) j["type"] = type_of(e.form).entries;
    j["class"] = ribbon_to_class(e.tableau.ribbon).entries;
    j["degree"] = degree(e.form);
    j["tableau"] = to_json(e.tableau);
    return j;
}

json to_json(const Basis& b) {
    const bool backward = b.reading_order == backward_reading(b.n);
    json forms = json::array();
    for (const auto& e : b.elements) forms.push_back(to_json(e, backward));
    json j{{"N", b.n}, {"reading_order", b.reading_order}, {"forms", std::move(forms)}};
    j["d"] = b.degree ? json(*b.degree) : json(nullptr);
    return j;
}

Ribbon ribbon_from_json(const json& j) {
    try {
        std::vector<Box> boxes;
        for (const auto& b : j.at("boxes")) {
            if (!b.is_array() || b.size() != 2) throw std::invalid_argument("box must be [row, col]");
            boxes.push_back(Box{b[0].get<int>(), b[1].get<int>()});
        }
        return Ribbon(std::move(boxes));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed ribbon JSON: ") + e.what());
    }
}

SkewTableau tableau_from_json(const json& j) {
    try {
        SkewTableau t{ribbon_from_json(j), j.at("filling").get<std::vector<int>>()};
        if (!is_standard(t)) throw std::invalid_argument("tableau filling is not standard");
        return t;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed tableau JSON: ") + e.what());
    }
}

}  // namespace cvf
