#include "weylface/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylface {

namespace {

size_t ambient_dim(const VPolyhedron& p) {
    if (!p.points.empty()) return p.points[0].size();
    if (!p.rays.empty()) return p.rays[0].size();
    return 0;
}

// Feasibility of x = sum r_s points_s + sum t_u rays_u, sum r_s = 1, all >= 0.
LPResult membership_lp(const std::vector<QVec>& points, const std::vector<QVec>& rays,
                       const QVec& x, const QVec* objective = nullptr) {
    size_t np = points.size(), nr = rays.size(), d = x.size();
    LPProblem p = LPProblem::with_cols(int(np + nr));
    if (objective) p.objective = *objective;
    for (size_t row = 0; row < d; ++row) {
        QVec coeffs(np + nr);
        for (size_t s = 0; s < np; ++s) coeffs[s] = points[s][row];
        for (size_t u = 0; u < nr; ++u) coeffs[np + u] = rays[u][row];
        p.add_row(std::move(coeffs), Rel::eq, x[row]);
    }
    if (np > 0) {
        QVec ones(np + nr);
        for (size_t s = 0; s < np; ++s) ones[s] = 1;
        p.add_row(std::move(ones), Rel::eq, Rat(1));
    }
    return lp_solve(p);
}

} // namespace

std::optional<QVec> conv_contains(const std::vector<QVec>& points, const QVec& x) {
    if (points.empty()) throw std::invalid_argument("conv_contains: empty generating set");
    LPResult r = membership_lp(points, {}, x);
    if (!r.feasible()) return std::nullopt;
    return r.witness;
}

bool cone_contains(const std::vector<QVec>& rays, const QVec& x) {
    if (vec_is_zero(x)) return true;  // empty combination
    if (rays.empty()) return false;
    return membership_lp({}, rays, x).feasible();
}

bool conv_cone_contains(const std::vector<QVec>& points, const std::vector<QVec>& rays,
                        const QVec& x) {
    if (points.empty()) return false;  // conv of nothing is empty
    return membership_lp(points, rays, x).feasible();
}

bool relint_contains(const std::vector<QVec>& generators, const QVec& x) {
    if (generators.empty()) throw std::invalid_argument("relint_contains: empty generating set");
    // max r_u subject to a convex representation of x; x is interior iff
    // every generator can be given positive weight.
    for (size_t u = 0; u < generators.size(); ++u) {
        QVec obj(generators.size());
        obj[u] = 1;
        LPResult r = membership_lp(generators, {}, x, &obj);
        if (!r.optimal() || !(Rat(0) < r.value)) return false;
    }
    return true;
}

std::pair<std::vector<size_t>, Rat> maximizer_indices(const std::vector<Rat>& values) {
    if (values.empty()) throw std::invalid_argument("maximizer over empty set");
    Rat best = values[0];
    for (const auto& v : values)
        if (best < v) best = v;
    std::vector<size_t> arg;
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i] == best) arg.push_back(i);
    return {arg, best};
}

std::pair<std::vector<QVec>, Rat> maximizer_subset(const std::vector<QVec>& xs,
                                                   const LinearFunctional& phi) {
    std::vector<Rat> values;
    values.reserve(xs.size());
    for (const auto& x : xs) values.push_back(phi.eval(x));
    auto [idx, best] = maximizer_indices(values);
    std::vector<QVec> arg;
    arg.reserve(idx.size());
    for (size_t i : idx) arg.push_back(xs[i]);
    return {arg, best};
}

std::vector<QVec> vertices(const VPolyhedron& p) {
    std::vector<QVec> pts = p.points;
    std::sort(pts.begin(), pts.end(), vec_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<QVec> out;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<QVec> others;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!conv_cone_contains(others, p.rays, pts[i])) out.push_back(pts[i]);
    }
    return out;
}

std::vector<QVec> extremal_rays(const VPolyhedron& p) {
    std::vector<QVec> prim;
    for (const auto& r : p.rays) {
        if (vec_is_zero(r)) continue;
        prim.push_back(primitive_integer_vector(r));
    }
    std::sort(prim.begin(), prim.end(), vec_less);
    prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
    std::vector<QVec> out;
    for (size_t i = 0; i < prim.size(); ++i) {
        std::vector<QVec> others;
        for (size_t j = 0; j < prim.size(); ++j)
            if (j != i) others.push_back(prim[j]);
        if (!cone_contains(others, prim[i])) out.push_back(prim[i]);
    }
    return out;
}

bool is_face(const VPolyhedron& p, const VPolyhedron& f) {
    if (f.points.empty()) throw std::invalid_argument("is_face: face candidate needs at least one point");
    size_t d = ambient_dim(p);

    for (const auto& q : f.points)
        if (!conv_cone_contains(p.points, p.rays, q))
            throw std::domain_error("is_face: candidate point lies outside the polyhedron");
    for (const auto& r : f.rays)
        if (!cone_contains(p.rays, r))
            throw std::domain_error("is_face: candidate ray lies outside the recession cone");

    // A separating functional for generator g: phi constant (= c) on f,
    // vanishing on f's rays, supporting on all of p, with phi(g) pushed
    // strictly below c. Variables: phi (d, free), c (free), plus the gap.
    auto separable = [&](const QVec* point, const QVec* ray) {
        LPProblem lp = LPProblem::with_cols(int(d) + 1);
        lp.nonneg.assign(d + 1, false);
        auto phi_row = [&](const QVec& v, Rat c_coeff) {
            QVec row(d + 1);
            for (size_t j = 0; j < d; ++j) row[j] = v[j];
            row[d] = std::move(c_coeff);
            return row;
        };
        for (const auto& q : f.points) lp.add_row(phi_row(q, Rat(-1)), Rel::eq, Rat(0));
        for (const auto& r : f.rays) lp.add_row(phi_row(r, Rat(0)), Rel::eq, Rat(0));
        for (const auto& q : p.points) lp.add_row(phi_row(q, Rat(-1)), Rel::le, Rat(0));
        for (const auto& r : p.rays) lp.add_row(phi_row(r, Rat(0)), Rel::le, Rat(0));
        QVec gap;
        if (point) {
            gap = phi_row(*point, Rat(-1));  // phi(g) - c, want it negative
        } else {
            gap = phi_row(*ray, Rat(0));
        }
        lp.objective = vec_neg(gap);
        lp.add_row(std::move(gap), Rel::ge, Rat(-1));  // scale normalization
        LPResult r = lp_solve(lp);
        return r.optimal() && Rat(0) < r.value;
    };

    for (const auto& q : p.points) {
        if (conv_cone_contains(f.points, f.rays, q)) continue;  // forced into the maximizer
        if (!separable(&q, nullptr)) return false;
    }
    for (const auto& r : p.rays) {
        if (cone_contains(f.rays, r)) continue;
        if (!separable(nullptr, &r)) return false;
    }
    return true;
}

} // namespace weylface
