#include "weylface/root_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace weylface {

namespace {

// d_i = (alpha_i, alpha_i)/2, fixed by d_1 = 1 on each diagram component and
// propagated along bonds so that d_i c_ij = d_j c_ji.
QVec compute_symmetrizers(const std::vector<std::vector<long>>& c) {
    int n = int(c.size());
    QVec d = zero_vec(n);
    std::vector<bool> seen(size_t(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[size_t(start)]) continue;
        d[size_t(start)] = 1;
        seen[size_t(start)] = true;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int i = queue.back();
            queue.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j || c[size_t(i)][size_t(j)] == 0 || seen[size_t(j)]) continue;
                d[size_t(j)] = d[size_t(i)] * Rat(c[size_t(i)][size_t(j)]) / Rat(c[size_t(j)][size_t(i)]);
                seen[size_t(j)] = true;
                queue.push_back(j);
            }
        }
    }
    return d;
}

std::vector<std::vector<int>> find_components(const std::vector<std::vector<long>>& c) {
    int n = int(c.size());
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(size_t(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[size_t(start)]) continue;
        std::vector<int> comp;
        std::vector<int> queue{start};
        seen[size_t(start)] = true;
        while (!queue.empty()) {
            int i = queue.back();
            queue.pop_back();
            comp.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (i != j && c[size_t(i)][size_t(j)] != 0 && !seen[size_t(j)]) {
                    seen[size_t(j)] = true;
                    queue.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Closes the simple roots under simple reflections inside the positive cone.
// Roots are tracked by simple-root coordinates; the pairing with coroot i is
// read off the Cartan matrix.
std::vector<std::vector<long>> close_positive_roots(const std::vector<std::vector<long>>& c) {
    int n = int(c.size());
    std::map<std::vector<long>, bool> known;
    std::vector<std::vector<long>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(size_t(n), 0);
        e[size_t(i)] = 1;
        known.emplace(e, true);
        queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
        auto b = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            long pairing = 0;
            for (int j = 0; j < n; ++j) pairing += c[size_t(i)][size_t(j)] * b[size_t(j)];
            auto img = b;
            img[size_t(i)] -= pairing;
            bool nonneg = std::all_of(img.begin(), img.end(), [](long x) { return x >= 0; });
            if (nonneg && !known.count(img)) {
                known.emplace(img, true);
                queue.push_back(std::move(img));
            }
        }
    }
    std::vector<std::vector<long>> roots;
    roots.reserve(known.size());
    for (auto& [r, _] : known) roots.push_back(r);
    // sort by height then lexicographically, so simple roots come first
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        long ha = 0, hb = 0;
        for (long x : a) ha += x;
        for (long x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return roots;
}

} // namespace

RootSystem build_root_system(const CartanType& t) {
    RootSystem rs{t, t.rank, cartan_matrix(t), {}, {}, {}, {}, {}, {}, {}};
    const int n = rs.rank;
    const auto& c = rs.cartan;

    rs.symmetrizers = compute_symmetrizers(c);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(rs.symmetrizers[size_t(i)] * Rat(c[size_t(i)][size_t(j)]) ==
                  rs.symmetrizers[size_t(j)] * Rat(c[size_t(j)][size_t(i)])))
                throw std::logic_error("Cartan matrix is not symmetrizable");

    rs.sym_form.assign(size_t(n), QVec(size_t(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.sym_form[size_t(i)][size_t(j)] = rs.symmetrizers[size_t(i)] * Rat(c[size_t(i)][size_t(j)]);

    auto minors = leading_principal_minors(rs.sym_form);
    for (const auto& m : minors)
        if (!(Rat(0) < m)) throw std::logic_error("symmetrized Cartan form is not positive definite");

    QMat cq(static_cast<size_t>(n), QVec(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cq[size_t(i)][size_t(j)] = Rat(c[size_t(i)][size_t(j)]);
    rs.cartan_inverse = invert_matrix(cq);

    // (omega_i, omega_j) = d_i * (C^{-1})_{ij}
    rs.fundamental_weight_gram.assign(size_t(n), QVec(size_t(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.fundamental_weight_gram[size_t(i)][size_t(j)] =
                rs.symmetrizers[size_t(i)] * rs.cartan_inverse[size_t(i)][size_t(j)];

    for (int j = 0; j < n; ++j) {
        QVec col(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) col[size_t(i)] = Rat(c[size_t(i)][size_t(j)]);
        rs.simple_roots.emplace_back(std::move(col));
    }

    for (auto& alpha : close_positive_roots(c)) {
        QVec omega(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            Rat v;
            for (int j = 0; j < n; ++j) v += Rat(c[size_t(i)][size_t(j)]) * Rat(alpha[size_t(j)]);
            omega[size_t(i)] = v;
        }
        rs.positive_roots.push_back(PositiveRoot{Weight(std::move(omega)), alpha});
    }
    if (int(rs.positive_roots.size()) != positive_root_count(t))
        throw std::logic_error("positive-root closure produced the wrong count for " + t.str());

    rs.diagram_components = find_components(c);
    return rs;
}

Rat inner_product(const RootSystem& rs, const QVec& a, const QVec& b) {
    if (int(a.size()) != rs.rank || int(b.size()) != rs.rank)
        throw std::invalid_argument("inner product: rank mismatch");
    Rat s;
    for (int i = 0; i < rs.rank; ++i) {
        if (a[size_t(i)].is_zero()) continue;
        for (int j = 0; j < rs.rank; ++j)
            s += a[size_t(i)] * b[size_t(j)] * rs.fundamental_weight_gram[size_t(i)][size_t(j)];
    }
    return s;
}

Rat inner_product(const RootSystem& rs, const Weight& mu, const Weight& nu) {
    return inner_product(rs, mu.coords, nu.coords);
}

QVec alpha_coordinates(const RootSystem& rs, const Weight& mu) {
    return mat_vec(rs.cartan_inverse, mu.coords);
}

Weight weight_from_alpha(const RootSystem& rs, const QVec& alpha_coords) {
    QVec omega(static_cast<size_t>(rs.rank));
    for (int i = 0; i < rs.rank; ++i) {
        Rat v;
        for (int j = 0; j < rs.rank; ++j)
            v += Rat(rs.cartan[size_t(i)][size_t(j)]) * alpha_coords[size_t(j)];
        omega[size_t(i)] = v;
    }
    return Weight(std::move(omega));
}

bool in_nonneg_root_span(const RootSystem& rs, const Weight& mu, const Subset& within) {
    QVec a = alpha_coordinates(rs, mu);
    for (int i = 0; i < rs.rank; ++i) {
        if (within.contains(i)) {
            if (!a[size_t(i)].is_nonneg_integer()) return false;
        } else {
            if (!a[size_t(i)].is_zero()) return false;
        }
    }
    return true;
}

Subset support(const Weight& mu) {
    Subset s = Subset::empty(mu.rank());
    for (int i = 0; i < mu.rank(); ++i)
        if (!mu.coords[size_t(i)].is_zero()) s = s.with(i);
    return s;
}

Subset integral_dominant_indices(const Weight& mu) {
    Subset s = Subset::empty(mu.rank());
    for (int i = 0; i < mu.rank(); ++i)
        if (mu.coords[size_t(i)].is_nonneg_integer()) s = s.with(i);
    return s;
}

Subset component_closure(const RootSystem& rs, const Weight& mu) {
    Subset supp = support(mu);
    Subset out = Subset::empty(rs.rank);
    for (const auto& comp : rs.diagram_components) {
        bool meets = std::any_of(comp.begin(), comp.end(), [&](int i) { return supp.contains(i); });
        if (meets)
            for (int i : comp) out = out.with(i);
    }
    return out;
}

std::vector<PositiveRoot> positive_roots_in(const RootSystem& rs, const Subset& j) {
    std::vector<PositiveRoot> out;
    for (const auto& r : rs.positive_roots) {
        bool inside = true;
        for (int i = 0; i < rs.rank; ++i)
            if (r.alpha[size_t(i)] != 0 && !j.contains(i)) inside = false;
        if (inside) out.push_back(r);
    }
    return out;
}

std::vector<PositiveRoot> positive_roots_outside(const RootSystem& rs, const Subset& j) {
    std::vector<PositiveRoot> out;
    for (const auto& r : rs.positive_roots) {
        bool inside = true;
        for (int i = 0; i < rs.rank; ++i)
            if (r.alpha[size_t(i)] != 0 && !j.contains(i)) inside = false;
        if (!inside) out.push_back(r);
    }
    return out;
}

Weight fundamental_weight(const RootSystem& rs, int i) {
    QVec v(static_cast<size_t>(rs.rank));
    v[size_t(i)] = 1;
    return Weight(std::move(v));
}

Weight simple_root(const RootSystem& rs, int i) { return rs.simple_roots[size_t(i)]; }

Weight zero_weight(const RootSystem& rs) { return Weight(zero_vec(rs.rank)); }

Weight rho_of_subset(const RootSystem& rs, const Subset& j) {
    QVec v(static_cast<size_t>(rs.rank));
    for (int i : j.members()) v[size_t(i)] = 1;
    return Weight(std::move(v));
}

} // namespace weylface
