#include "fqm/json_io.hpp"

#include "fqm/number_theory.hpp"

namespace fqm {

json zz_to_json(const ZZ& n) {
    if (n.fits_slong_p()) return json(n.get_si());
    return json(n.get_str());
}

ZZ zz_from_json(const json& j) {
    if (j.is_number_integer()) return ZZ(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) {
        ZZ n;
        if (n.set_str(j.get<std::string>(), 10) != 0)
            throw invalid_input("bad integer literal: " + j.dump());
        return n;
    }
    throw invalid_input("expected an integer, got " + j.dump());
}

json fqm_to_json(const Fqm& m) {
    json orders = json::array(), q = json::array(), b = json::array();
    for (int i = 0; i < m.rank(); ++i) {
        orders.push_back(zz_to_json(m.orders()[i]));
        q.push_back(m.q_gen(i).str());
        json row = json::array();
        for (int j = 0; j < m.rank(); ++j) row.push_back(m.b_gen(i, j).str());
        b.push_back(std::move(row));
    }
    return json{{"orders", orders}, {"q", q}, {"b", b}};
}

Fqm fqm_from_json(const json& j) {
    if (!j.is_object() || !j.contains("orders") || !j.contains("q") || !j.contains("b"))
        throw invalid_input("module JSON must have \"orders\", \"q\" and \"b\"");
    std::vector<ZZ> orders;
    for (const auto& d : j.at("orders")) orders.push_back(zz_from_json(d));
    std::vector<QZ> q;
    for (const auto& s : j.at("q")) q.push_back(QZ::parse(s.get<std::string>()));
    std::vector<std::vector<QZ>> b;
    for (const auto& row : j.at("b")) {
        std::vector<QZ> r;
        for (const auto& s : row) r.push_back(QZ::parse(s.get<std::string>()));
        b.push_back(std::move(r));
    }
    return Fqm::from_presentation(std::move(orders), std::move(q), std::move(b));
}

json component_to_json(const JordanComponent& c) {
    switch (c.tag) {
        case JordanComponent::Tag::A:
            return json{{"tag", "A"}, {"p", zz_to_json(c.p)}, {"r", c.r}, {"a", zz_to_json(c.a)}};
        case JordanComponent::Tag::B:
            return json{{"tag", "B"}, {"r", c.r}};
        default:
            return json{{"tag", "C"}, {"r", c.r}};
    }
}

JordanComponent component_from_json(const json& j) {
    if (!j.is_object() || !j.contains("tag") || !j.contains("r"))
        throw invalid_input("component JSON must have \"tag\" and \"r\"");
    const std::string tag = j.at("tag").get<std::string>();
    const int r = j.at("r").get<int>();
    if (r < 1) throw invalid_input("component r must be >= 1");
    if (tag == "A") {
        if (!j.contains("p") || !j.contains("a"))
            throw invalid_input("A component needs \"p\" and \"a\"");
        ZZ p = zz_from_json(j.at("p"));
        if (!is_prime(p)) throw invalid_input("component p must be prime");
        return JordanComponent::A(p, r, zz_from_json(j.at("a")));
    }
    if (tag == "B") return JordanComponent::B(r);
    if (tag == "C") return JordanComponent::C(r);
    throw invalid_input("unknown component tag \"" + tag + "\"");
}

json components_to_json(const std::vector<JordanComponent>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back(component_to_json(c));
    return a;
}

std::vector<JordanComponent> components_from_json(const json& j) {
    if (!j.is_array()) throw invalid_input("expected an array of components");
    std::vector<JordanComponent> out;
    for (const auto& c : j) out.push_back(component_from_json(c));
    return out;
}

json lattice_to_json(const Lattice& l) {
    json rows = json::array();
    for (int i = 0; i < l.rank(); ++i) {
        json row = json::array();
        for (int j = 0; j < l.rank(); ++j) row.push_back(zz_to_json(l.gram().at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"gram", rows}};
}

Lattice lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gram")) throw invalid_input("lattice JSON must have \"gram\"");
    const json& rows = j.at("gram");
    if (!rows.is_array()) throw invalid_input("\"gram\" must be an array of rows");
    const int n = static_cast<int>(rows.size());
    ZMat g(n, n);
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
            throw invalid_input("\"gram\" must be square");
        for (int c = 0; c < n; ++c) g.at(i, c) = zz_from_json(rows[i][c]);
    }
    return Lattice(std::move(g));
}

json element_to_json(const Element& e) {
    json a = json::array();
    for (const auto& c : e.coeffs) a.push_back(zz_to_json(c));
    return a;
}

}  // namespace fqm
