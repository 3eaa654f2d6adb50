#pragma once

// Test-only reference computations, kept independent of the library code
// paths they are used to check.

#include "weylface/weight_sets.hpp"
#include "weylface/weyl.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace weylface::oracle {

// Closes the set {+-alpha_i} under every simple reflection with no
// positivity restriction along the way, then returns the positive half.
// Independent of the closure used inside build_root_system, which only ever
// walks inside the positive cone.
inline std::set<QVec, bool (*)(const QVec&, const QVec&)> reflection_closure_positive(
    const RootSystem& rs) {
    std::set<QVec, bool (*)(const QVec&, const QVec&)> all(vec_less);
    std::vector<QVec> queue;
    for (const auto& a : rs.simple_roots) {
        for (const QVec& v : {a.coords, vec_neg(a.coords)}) {
            if (all.insert(v).second) queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        QVec v = queue.back();
        queue.pop_back();
        for (int i = 0; i < rs.rank; ++i) {
            // s_i(v) = v - v_i alpha_i
            QVec img = vec_sub(v, vec_scale(v[size_t(i)], rs.simple_roots[size_t(i)].coords));
            if (all.insert(img).second) queue.push_back(img);
        }
    }
    std::set<QVec, bool (*)(const QVec&, const QVec&)> positive(vec_less);
    for (const auto& v : all) {
        QVec a = mat_vec(rs.cartan_inverse, v);
        bool nonneg = true;
        for (const auto& c : a)
            if (c < Rat(0)) nonneg = false;
        if (nonneg) positive.insert(v);
    }
    return positive;
}

// Weight support of V(lambda) through the multiplicity recursion: a weight
// is exactly a lattice point with positive computed multiplicity. This is a
// genuinely different characterization from dominance saturation.
inline std::set<Weight> freudenthal_support(const RootSystem& rs, const Weight& lambda) {
    Subset all = Subset::full(rs.rank);
    Weight weyl_rho = rho_of_subset(rs, all);

    // dominant candidates below lambda, in the integer root box
    Weight lowest = antidominant_representative(rs, all, lambda).first;
    QVec box_coords = alpha_coordinates(rs, lambda - lowest);
    std::vector<long> box;
    for (const auto& c : box_coords) box.push_back(long(c.num()));

    std::vector<Weight> cands;
    std::vector<long> c(size_t(rs.rank), 0);
    for (;;) {
        Weight mu = lambda;
        for (int i = 0; i < rs.rank; ++i)
            if (c[size_t(i)] != 0) mu = mu - Rat(c[size_t(i)]) * rs.simple_roots[size_t(i)];
        if (mu.is_dominant_integral()) cands.push_back(mu);
        size_t pos = 0;
        while (pos < c.size() && c[pos] == box[pos]) {
            c[pos] = 0;
            ++pos;
        }
        if (pos == c.size()) break;
        ++c[pos];
    }
    // order by increasing depth below lambda
    std::sort(cands.begin(), cands.end(), [&](const Weight& a, const Weight& b) {
        Rat ha, hb;
        for (const auto& v : alpha_coordinates(rs, lambda - a)) ha += v;
        for (const auto& v : alpha_coordinates(rs, lambda - b)) hb += v;
        if (ha != hb) return ha < hb;
        return a < b;
    });

    std::map<Weight, Rat> mult;
    auto mult_at = [&](const Weight& nu) -> Rat {
        Weight dom = dominant_representative(rs, all, nu).first;
        auto it = mult.find(dom);
        return it == mult.end() ? Rat(0) : it->second;
    };
    Rat lam_norm = inner_product(rs, lambda + weyl_rho, lambda + weyl_rho);
    for (const auto& mu : cands) {
        if (mu == lambda) {
            mult.emplace(mu, Rat(1));
            continue;
        }
        Rat numerator;
        for (const auto& root : rs.positive_roots) {
            QVec budget = alpha_coordinates(rs, lambda - mu);
            for (long k = 1;; ++k) {
                bool inside = true;
                for (int i = 0; i < rs.rank; ++i) {
                    Rat left = budget[size_t(i)] - Rat(k) * Rat(root.alpha[size_t(i)]);
                    if (left < Rat(0)) inside = false;
                }
                if (!inside) break;
                Weight nu = mu + Rat(k) * root.omega;
                Rat m = mult_at(nu);
                if (!m.is_zero()) numerator += Rat(2) * m * inner_product(rs, nu, root.omega);
            }
        }
        Rat denom = lam_norm - inner_product(rs, mu + weyl_rho, mu + weyl_rho);
        if (denom.is_zero()) throw std::logic_error("vanishing denominator in the multiplicity recursion");
        mult.emplace(mu, numerator / denom);
    }

    std::set<Weight> support;
    for (const auto& [mu, m] : mult) {
        if (m.is_zero()) continue;
        if (m < Rat(0) || !m.is_integer())
            throw std::logic_error("multiplicity recursion produced a non-integer value");
        for (const auto& w : weyl_orbit(rs, all, mu)) support.insert(w);
    }
    return support;
}

// The J-dominant orbit element found by exhaustive orbit search; asserts
// uniqueness before returning.
inline Weight dominant_by_orbit(const RootSystem& rs, const Subset& j, const Weight& nu) {
    std::vector<Weight> hits;
    for (const auto& w : weyl_orbit(rs, j, nu)) {
        bool dominant = true;
        for (int i : j.members())
            if (w.coords[size_t(i)] < Rat(0)) dominant = false;
        if (dominant) hits.push_back(w);
    }
    if (hits.size() != 1) throw std::logic_error("J-dominant orbit element is not unique");
    return hits.front();
}

} // namespace weylface::oracle
