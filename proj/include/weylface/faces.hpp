#pragma once

#include "weylface/polyhedron.hpp"
#include "weylface/weight_sets.hpp"

#include <vector>

namespace weylface {

/// Names a face of the weight polyhedron of (lambda, J): a Weyl element of
/// the J-subgroup together with a subset of simple-root indices.
struct FaceDescriptor {
    WeylWord w;
    Subset i0;
};

/// A face in canonical form -- vertex set plus primitive extremal rays --
/// together with every descriptor found to produce it. Two faces are equal
/// exactly when their vertex and ray sets are equal.
struct CanonicalFace {
    std::vector<Weight> vertex_set;  // sorted
    std::vector<QVec> ray_set;       // sorted, primitive
    std::vector<FaceDescriptor> descriptors;

    bool same_face(const CanonicalFace& o) const {
        return vertex_set == o.vertex_set && ray_set == o.ray_set;
    }
};

/// V-representation of conv(wt M(lambda, J)): the finite parabolic part as
/// points, the negated non-J positive roots as ray directions.
VPolyhedron gvm_hull(const RootSystem& rs, const Weight& lambda, const Subset& j);

/// Builds the face named by (w, I0): points w(finite part over I0 cap J),
/// rays w(-(positive roots of I0 outside I0 cap J)), then canonicalizes.
/// Requires w to be a word in the generators of J.
CanonicalFace face_from_descriptor(const RootSystem& rs, const Weight& lambda, const Subset& j,
                                   const FaceDescriptor& d);

/// All faces of the weight polyhedron of (lambda, J), obtained by running
/// every descriptor in W_J x 2^I and deduplicating canonical forms.
std::vector<CanonicalFace> enumerate_faces(const RootSystem& rs, const Weight& lambda,
                                           const Subset& j,
                                           long bound = weyl_enumeration_bound());

/// The weights lying on the face named by d, as a finite part plus
/// subtracted ray roots (the ray list is empty precisely when the face is a
/// polytope, e.g. whenever J = I).
GVMWeights face_weights(const RootSystem& rs, const Weight& lambda, const Subset& j,
                        const FaceDescriptor& d);

/// Three equivalent equality tests for truncation faces, all computed and
/// cross-asserted: equality of the truncated weight sets, of their weight
/// sums, and of the orbit vertex sets.
struct FaceEqualityResult {
    bool equal = false;
    bool truncations_equal = false;
    bool rho_equal = false;
    bool orbits_equal = false;
};

FaceEqualityResult faces_equal(const RootSystem& rs, const Weight& lambda, const Subset& i1,
                               const Subset& i2);

/// The maximizer of (nu, -) in wt V(lambda), computed by the closed form
/// (move nu to the dominant chamber, truncate away its support, move back)
/// and cross-checked against the direct argmax.
WeightSet maximizer_face(const RootSystem& rs, const Weight& lambda, const Weight& nu);

/// Whether wt V_J(lambda) is strictly smaller than wt V(lambda). Decided by
/// the component criterion and cross-asserted against set inequality and
/// the positivity of the truncation sum functional.
bool truncation_is_proper(const RootSystem& rs, const Weight& lambda, const Subset& j);

/// The unique W_J-invariant point of conv(wt V_J(lambda)): the average of
/// the truncated weights.
Weight face_center(const RootSystem& rs, const Weight& lambda, const Subset& j);

/// Solves sum_{j in J} x_j (alpha_j, alpha_i) = (lambda, alpha_i) for i in J.
/// The solution lists, in the order of J's members, the coefficients x_j =
/// a_j / |wt V_J(lambda)| with face_center = lambda - sum x_j alpha_j.
QVec solve_center_system(const RootSystem& rs, const Weight& lambda, const Subset& j);

} // namespace weylface
