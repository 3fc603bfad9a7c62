#include "fqm/oracle.hpp"

#include <algorithm>
#include <map>

namespace fqm {

std::vector<ZZ> elementary_divisors(const Fqm& m) {
    SnfResult s = smith_normal_form(ZMat::diagonal(m.orders()));
    std::vector<ZZ> out;
    for (int i = 0; i < m.rank(); ++i)
        if (s.d.at(i, i) != 1) out.push_back(s.d.at(i, i));
    return out;
}

namespace {

struct CandidateTable {
    // elements of m2 grouped by (order, Q value), each group in
    // lexicographic element order
    std::map<std::pair<ZZ, QZ>, std::vector<Element>> buckets;
};

CandidateTable build_table(const Fqm& m) {
    CandidateTable t;
    m.for_each_element([&](const std::vector<ZZ>& coords, const QZ& q) {
        Element e{coords};
        t.buckets[{m.element_order(e), q}].push_back(std::move(e));
    });
    return t;
}

bool search(const Fqm& m1, const Fqm& m2, const CandidateTable& table, int depth,
            std::vector<Element>& images) {
    const int k = m1.rank();
    if (depth == k) return subgroup_order(m2, images) == m2.order();
    auto it = table.buckets.find({m1.orders()[depth], m1.q_gen(depth)});
    if (it == table.buckets.end()) return false;
    for (const Element& y : it->second) {
        bool ok = true;
        for (int j = 0; j < depth && ok; ++j)
            ok = m2.eval_b(y, images[j]) == m1.b_gen(depth, j);
        if (!ok) continue;
        images.push_back(y);
        if (search(m1, m2, table, depth + 1, images)) return true;
        images.pop_back();
    }
    return false;
}

}  // namespace

IsoResult iso_oracle(const Fqm& m1, const Fqm& m2, long budget) {
    if (m1.order() != m2.order()) return {IsoVerdict::no, {}};
    if (elementary_divisors(m1) != elementary_divisors(m2)) return {IsoVerdict::no, {}};
    if (m1.order() > budget) return {IsoVerdict::unknown, {}};
    // histogram comparison by plain enumeration prunes most non-isomorphic
    // pairs before the generator search
    if (q_histogram(m1, budget) != q_histogram(m2, budget)) return {IsoVerdict::no, {}};
    CandidateTable table = build_table(m2);
    std::vector<Element> images;
    if (search(m1, m2, table, 0, images)) return {IsoVerdict::yes, std::move(images)};
    return {IsoVerdict::no, {}};
}

bool invariants_match(const Fqm& m1, const Fqm& m2, long budget) {
    if (elementary_divisors(m1) != elementary_divisors(m2)) return false;
    if (sigma_exact(m1) != sigma_exact(m2)) return false;
    if (m1.order() <= budget && m2.order() <= budget)
        if (q_histogram(m1, budget) != q_histogram(m2, budget)) return false;
    return true;
}

}  // namespace fqm
