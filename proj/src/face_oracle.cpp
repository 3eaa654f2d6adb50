#include "weylface/face_oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace weylface {

bool operator<(const OracleFace& a, const OracleFace& b) {
    if (a.vertex_set.size() != b.vertex_set.size()) return a.vertex_set.size() < b.vertex_set.size();
    if (a.ray_set.size() != b.ray_set.size()) return a.ray_set.size() < b.ray_set.size();
    for (size_t i = 0; i < a.vertex_set.size(); ++i) {
        if (vec_less(a.vertex_set[i], b.vertex_set[i])) return true;
        if (vec_less(b.vertex_set[i], a.vertex_set[i])) return false;
    }
    for (size_t i = 0; i < a.ray_set.size(); ++i) {
        if (vec_less(a.ray_set[i], b.ray_set[i])) return true;
        if (vec_less(b.ray_set[i], a.ray_set[i])) return false;
    }
    return false;
}

namespace {

struct Gen {
    const QVec* vec;
    bool is_ray;
};

// Orthonormal-free basis of the direction space of a face: differences of
// vertices against the first one, plus the rays.
std::vector<QVec> direction_basis(const OracleFace& f) {
    std::vector<QVec> dirs;
    for (size_t i = 1; i < f.vertex_set.size(); ++i)
        dirs.push_back(vec_sub(f.vertex_set[i], f.vertex_set[0]));
    for (const auto& r : f.ray_set) dirs.push_back(r);
    // reduce to an independent subset
    std::vector<QVec> basis;
    QMat rows;
    for (auto& d : dirs) {
        rows.push_back(d);
        if (matrix_rank(rows) == int(basis.size()) + 1)
            basis.push_back(d);
        else
            rows.pop_back();
    }
    return basis;
}

// Faces of f cut out by hyperplanes spanned by generator subsets. Facets of
// f are guaranteed to appear; lower faces may appear too, which is harmless.
std::vector<OracleFace> subface_candidates(const OracleFace& f) {
    std::vector<OracleFace> out;
    std::vector<QVec> basis = direction_basis(f);
    int d = int(basis.size());
    if (d == 0) return out;

    std::vector<Gen> gens;
    for (const auto& v : f.vertex_set) gens.push_back({&v, false});
    for (const auto& r : f.ray_set) gens.push_back({&r, true});
    size_t ng = gens.size();

    std::set<QVec, bool (*)(const QVec&, const QVec&)> seen_normals(vec_less);

    // choose an anchor vertex plus d-1 further generators
    std::vector<size_t> pick(size_t(d - 1));
    auto try_candidate = [&](size_t anchor, const std::vector<size_t>& rest) {
        const QVec& base = *gens[anchor].vec;
        QMat dirs;
        for (size_t gi : rest) {
            if (gens[gi].is_ray)
                dirs.push_back(*gens[gi].vec);
            else
                dirs.push_back(vec_sub(*gens[gi].vec, base));
        }
        // normal nu = basis^T z orthogonal to all chosen directions
        QMat system;
        for (const auto& u : dirs) {
            QVec row(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) row[size_t(j)] = dot(u, basis[size_t(j)]);
            system.push_back(std::move(row));
        }
        // also need nu expressed in ambient coordinates: nu = sum z_j basis_j.
        // The Gram of the basis is nonsingular, so nu != 0 iff z != 0.
        std::vector<QVec> null;
        if (system.empty()) {
            if (d != 1) return;
            null.push_back(QVec{Rat(1)});
        } else {
            null = nullspace(system);
        }
        if (null.size() != 1) return;  // not a hyperplane in the face
        QVec nu(basis[0].size());
        for (int j = 0; j < d; ++j) nu = vec_add(nu, vec_scale(null[0][size_t(j)], basis[size_t(j)]));
        if (vec_is_zero(nu)) return;
        nu = primitive_integer_vector(nu);
        for (const QVec& signed_nu : {nu, vec_neg(nu)}) {
            if (seen_normals.count(signed_nu)) continue;
            seen_normals.insert(signed_nu);
            bool supported = true;
            for (const auto& r : f.ray_set)
                if (Rat(0) < dot(signed_nu, r)) supported = false;
            if (!supported) continue;
            std::vector<Rat> vals;
            for (const auto& v : f.vertex_set) vals.push_back(dot(signed_nu, v));
            auto [arg, best] = maximizer_indices(vals);
            OracleFace g;
            for (size_t idx : arg) g.vertex_set.push_back(f.vertex_set[idx]);
            for (const auto& r : f.ray_set)
                if (dot(signed_nu, r).is_zero()) g.ray_set.push_back(r);
            if (g.vertex_set.size() == f.vertex_set.size() && g.ray_set.size() == f.ray_set.size())
                continue;  // improper
            out.push_back(std::move(g));
        }
    };

    for (size_t anchor = 0; anchor < ng; ++anchor) {
        if (gens[anchor].is_ray) continue;
        // iterate (d-1)-subsets of the other generators
        std::vector<size_t> others;
        for (size_t i = 0; i < ng; ++i)
            if (i != anchor) others.push_back(i);
        if (d == 1) {
            try_candidate(anchor, {});
            continue;
        }
        if (others.size() + 1 < size_t(d)) continue;
        std::vector<size_t> idx(size_t(d - 1));
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        for (;;) {
            std::vector<size_t> rest;
            for (size_t i : idx) rest.push_back(others[i]);
            try_candidate(anchor, rest);
            // next combination
            int pos = int(idx.size()) - 1;
            while (pos >= 0 && idx[size_t(pos)] == others.size() - idx.size() + size_t(pos)) --pos;
            if (pos < 0) break;
            ++idx[size_t(pos)];
            for (size_t i = size_t(pos) + 1; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return out;
}

} // namespace

std::vector<OracleFace> all_faces_oracle(const VPolyhedron& p) {
    if (p.points.empty()) throw std::invalid_argument("face oracle needs a nonempty polyhedron");
    OracleFace whole;
    whole.vertex_set = vertices(p);
    whole.ray_set = extremal_rays(p);
    std::sort(whole.vertex_set.begin(), whole.vertex_set.end(), vec_less);
    std::sort(whole.ray_set.begin(), whole.ray_set.end(), vec_less);

    std::set<OracleFace> found;
    std::vector<OracleFace> queue{whole};
    found.insert(whole);
    while (!queue.empty()) {
        OracleFace f = std::move(queue.back());
        queue.pop_back();
        for (auto& g : subface_candidates(f)) {
            std::sort(g.vertex_set.begin(), g.vertex_set.end(), vec_less);
            std::sort(g.ray_set.begin(), g.ray_set.end(), vec_less);
            if (found.insert(g).second) queue.push_back(std::move(g));
        }
    }
    return std::vector<OracleFace>(found.begin(), found.end());
}

} // namespace weylface
