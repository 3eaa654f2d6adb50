#include "weylface/faces.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace weylface {

namespace {

void require_gvm_inputs(const RootSystem& rs, const Weight& lambda, const Subset& j) {
    if (lambda.rank() != rs.rank) throw std::invalid_argument("lambda has the wrong rank");
    if (j.rank != rs.rank) throw std::invalid_argument("subset has the wrong rank");
}

void require_nonzero_dominant(const RootSystem& rs, const Weight& lambda) {
    if (lambda.rank() != rs.rank) throw std::invalid_argument("lambda has the wrong rank");
    if (!lambda.is_dominant_integral())
        throw std::domain_error("lambda must be dominant integral, got " + lambda.str());
    if (lambda.is_zero()) throw std::domain_error("lambda must be nonzero");
}

bool word_in_subgroup(const WeylWord& w, const Subset& j) {
    return std::all_of(w.letters.begin(), w.letters.end(), [&](int i) { return j.contains(i); });
}

} // namespace

VPolyhedron gvm_hull(const RootSystem& rs, const Weight& lambda, const Subset& j) {
    require_gvm_inputs(rs, lambda, j);
    WeightSet finite = finite_part_weights(rs, lambda, j);
    VPolyhedron p;
    p.points = finite.coord_vectors();
    for (const auto& r : positive_roots_outside(rs, j))
        p.rays.push_back(primitive_integer_vector(vec_neg(r.omega.coords)));
    return p;
}

namespace {

CanonicalFace build_face(const RootSystem& rs, const Subset& j, const FaceDescriptor& d,
                         const WeightSet& finite) {
    Subset overlap = d.i0.intersect(j);
    VPolyhedron raw;
    for (const auto& mu : finite.elements) raw.points.push_back(apply_weyl(rs, d.w, mu).coords);
    for (const auto& r : positive_roots_in(rs, d.i0)) {
        if (in_nonneg_root_span(rs, r.omega, overlap)) continue;  // inside the I0 cap J subsystem
        Weight img = apply_weyl(rs, d.w, r.omega);
        raw.rays.push_back(primitive_integer_vector(vec_neg(img.coords)));
    }
    CanonicalFace face;
    for (auto& v : vertices(raw)) face.vertex_set.emplace_back(std::move(v));
    face.ray_set = extremal_rays(raw);
    std::sort(face.vertex_set.begin(), face.vertex_set.end());
    std::sort(face.ray_set.begin(), face.ray_set.end(), vec_less);
    face.descriptors.push_back(d);
    return face;
}

} // namespace

CanonicalFace face_from_descriptor(const RootSystem& rs, const Weight& lambda, const Subset& j,
                                   const FaceDescriptor& d) {
    require_gvm_inputs(rs, lambda, j);
    if (!word_in_subgroup(d.w, j))
        throw std::domain_error("descriptor word uses a generator outside J = " + j.str());
    WeightSet finite = finite_part_weights(rs, lambda, d.i0.intersect(j));
    return build_face(rs, j, d, finite);
}

std::vector<CanonicalFace> enumerate_faces(const RootSystem& rs, const Weight& lambda,
                                           const Subset& j, long bound) {
    auto group = weyl_subgroup(rs, j, bound);
    std::map<std::pair<std::vector<Weight>, std::vector<QVec>>, CanonicalFace,
             bool (*)(const std::pair<std::vector<Weight>, std::vector<QVec>>&,
                      const std::pair<std::vector<Weight>, std::vector<QVec>>&)>
        by_key([](const auto& a, const auto& b) {
            if (a.first != b.first) return std::lexicographical_compare(
                a.first.begin(), a.first.end(), b.first.begin(), b.first.end());
            return std::lexicographical_compare(a.second.begin(), a.second.end(),
                                                b.second.begin(), b.second.end(), vec_less);
        });
    // memoize finite parts: they depend only on I0 cap J
    std::map<std::uint32_t, WeightSet> finite_cache;
    auto finite_for = [&](const Subset& overlap) -> const WeightSet& {
        auto it = finite_cache.find(overlap.mask);
        if (it == finite_cache.end())
            it = finite_cache.emplace(overlap.mask, finite_part_weights(rs, lambda, overlap)).first;
        return it->second;
    };
    for (const auto& w : group) {
        for (const auto& i0 : all_subsets(rs.rank)) {
            FaceDescriptor d{w, i0};
            CanonicalFace face = build_face(rs, j, d, finite_for(i0.intersect(j)));
            auto key = std::make_pair(face.vertex_set, face.ray_set);
            auto it = by_key.find(key);
            if (it == by_key.end())
                by_key.emplace(std::move(key), std::move(face));
            else
                it->second.descriptors.push_back(d);
        }
    }
    std::vector<CanonicalFace> out;
    for (auto& [_, f] : by_key) {
        std::sort(f.descriptors.begin(), f.descriptors.end(),
                  [](const FaceDescriptor& a, const FaceDescriptor& b) {
                      if (a.w.letters != b.w.letters) return a.w.letters < b.w.letters;
                      return a.i0.mask < b.i0.mask;
                  });
        out.push_back(std::move(f));
    }
    return out;
}

GVMWeights face_weights(const RootSystem& rs, const Weight& lambda, const Subset& j,
                        const FaceDescriptor& d) {
    require_gvm_inputs(rs, lambda, j);
    if (!word_in_subgroup(d.w, j))
        throw std::domain_error("descriptor word uses a generator outside J = " + j.str());
    Subset overlap = d.i0.intersect(j);
    WeightSet finite = finite_part_weights(rs, lambda, overlap);
    std::vector<Weight> moved;
    for (const auto& mu : finite.elements) moved.push_back(apply_weyl(rs, d.w, mu));
    GVMWeights out;
    out.finite_part = WeightSet(std::move(moved), Provenance::finite_part, rs.rank);
    out.lambda = lambda;
    out.j = j;
    for (const auto& r : positive_roots_in(rs, d.i0)) {
        if (in_nonneg_root_span(rs, r.omega, overlap)) continue;
        Weight img = apply_weyl(rs, d.w, r.omega);
        // w fixes the complement of the J-positive system, so the image is
        // again a positive root; record it with its root coordinates.
        QVec a = alpha_coordinates(rs, img);
        std::vector<long> alpha;
        for (const auto& c : a) {
            if (!c.is_nonneg_integer())
                throw std::logic_error("transported ray root left the positive system");
            alpha.push_back(long(c.num()));
        }
        out.ray_roots.push_back(PositiveRoot{img, std::move(alpha)});
    }
    std::sort(out.ray_roots.begin(), out.ray_roots.end(),
              [](const PositiveRoot& a, const PositiveRoot& b) { return a.alpha < b.alpha; });
    return out;
}

FaceEqualityResult faces_equal(const RootSystem& rs, const Weight& lambda, const Subset& i1,
                               const Subset& i2) {
    require_nonzero_dominant(rs, lambda);
    FaceEqualityResult res;
    WeightSet t1 = truncated_weights(rs, lambda, i1);
    WeightSet t2 = truncated_weights(rs, lambda, i2);
    res.truncations_equal = (t1 == t2);
    res.rho_equal = (rho(t1) == rho(t2));
    res.orbits_equal = (weyl_orbit(rs, i1, lambda) == weyl_orbit(rs, i2, lambda));
    if (res.truncations_equal != res.rho_equal || res.rho_equal != res.orbits_equal)
        throw std::logic_error("face equality criteria disagree for lambda=" + lambda.str() +
                               ", I1=" + i1.str() + ", I2=" + i2.str());
    res.equal = res.truncations_equal;
    return res;
}

WeightSet maximizer_face(const RootSystem& rs, const Weight& lambda, const Weight& nu) {
    require_nonzero_dominant(rs, lambda);
    Subset all = Subset::full(rs.rank);
    auto [nu_dom, w] = dominant_representative(rs, all, nu);
    Subset active = all.minus(support(nu_dom));
    WeightSet truncated = truncated_weights(rs, lambda, active);
    WeylWord w_inv = w.inverse();
    std::vector<Weight> moved;
    for (const auto& mu : truncated.elements) moved.push_back(apply_weyl(rs, w_inv, mu));
    WeightSet result(std::move(moved), Provenance::ad_hoc, rs.rank);

    WeightSet direct = maximizer_weights(rs, simple_module_weights(rs, lambda), nu);
    if (result != direct)
        throw std::logic_error("maximizer closed form disagrees with direct argmax for nu=" + nu.str());
    return result;
}

bool truncation_is_proper(const RootSystem& rs, const Weight& lambda, const Subset& j) {
    require_nonzero_dominant(rs, lambda);
    bool by_components = !component_closure(rs, lambda).subset_of(j);

    WeightSet full = simple_module_weights(rs, lambda);
    WeightSet truncated = truncated_weights(rs, lambda, j);
    bool by_sets = (truncated != full);

    Weight rho_j = rho(truncated);
    Rat best = inner_product(rs, rho_j, full.elements.front());
    for (const auto& mu : full.elements) {
        Rat v = inner_product(rs, rho_j, mu);
        if (best < v) best = v;
    }
    bool by_max = Rat(0) < best;

    if (by_components != by_sets || by_sets != by_max)
        throw std::logic_error("proper-truncation criteria disagree for lambda=" + lambda.str() +
                               ", J=" + j.str());
    return by_components;
}

Weight face_center(const RootSystem& rs, const Weight& lambda, const Subset& j) {
    require_nonzero_dominant(rs, lambda);
    WeightSet truncated = truncated_weights(rs, lambda, j);
    if (truncated.elements.empty()) throw std::logic_error("truncation unexpectedly empty");
    Weight center = Rat(1, Rat::int128(truncated.size())) * rho(truncated);
    for (int i : j.members())
        if (!inner_product(rs, center, rs.simple_roots[size_t(i)]).is_zero())
            throw std::logic_error("face center is not W_J-invariant");
    if (!conv_contains(truncated.coord_vectors(), center.coords))
        throw std::logic_error("face center fell outside the face hull");
    return center;
}

QVec solve_center_system(const RootSystem& rs, const Weight& lambda, const Subset& j) {
    if (j.is_empty()) throw std::domain_error("center system needs a nonempty J");
    if (!lambda.is_dominant_integral())
        throw std::domain_error("lambda must be dominant integral, got " + lambda.str());
    auto idx = j.members();
    QMat m(idx.size(), QVec(idx.size()));
    QVec rhs(idx.size());
    for (size_t a = 0; a < idx.size(); ++a) {
        for (size_t b = 0; b < idx.size(); ++b)
            m[a][b] = rs.sym_form[size_t(idx[b])][size_t(idx[a])];  // (alpha_{j_b}, alpha_{i_a})
        rhs[a] = inner_product(rs, lambda, rs.simple_roots[size_t(idx[a])]);
    }
    auto sol = solve_linear(m, rhs);
    if (!sol) throw std::logic_error("symmetrized Cartan subsystem was singular");
    return *sol;
}

} // namespace weylface
