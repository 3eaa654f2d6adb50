#pragma once

#include "weylface/lp.hpp"

#include <optional>
#include <vector>

namespace weylface {

/// V-representation of a rational polyhedron: conv(points) + cone(rays).
/// Rays are kept in primitive integer form (gcd-1 integer entries, sign
/// preserved); points must be nonempty for a nonempty polyhedron.
struct VPolyhedron {
    std::vector<QVec> points;
    std::vector<QVec> rays;

    static VPolyhedron polytope(std::vector<QVec> pts) { return VPolyhedron{std::move(pts), {}}; }
};

/// Convex-combination membership. On success returns the coefficients of a
/// representation x = sum r_s p_s with sum r_s = 1, r >= 0; the witness is a
/// basic LP solution, so at most dim+1 coefficients are nonzero.
std::optional<QVec> conv_contains(const std::vector<QVec>& points, const QVec& x);

/// Nonnegative-combination membership (the empty combination gives 0).
bool cone_contains(const std::vector<QVec>& rays, const QVec& x);

/// Membership in conv(points) + cone(rays).
bool conv_cone_contains(const std::vector<QVec>& points, const std::vector<QVec>& rays,
                        const QVec& x);

/// Rational relative-interior test for conv(U), U finite: x lies inside iff
/// for every generator u there is a convex representation of x putting
/// positive weight on u. (For finite rational generator sets this matches
/// the two-sided segment definition of the relative interior.)
bool relint_contains(const std::vector<QVec>& generators, const QVec& x);

/// Exact argmax of a linear functional given by precomputed values:
/// returns the indices attaining the maximum and the maximum itself.
std::pair<std::vector<size_t>, Rat> maximizer_indices(const std::vector<Rat>& values);

/// A linear functional x -> (normal, x). With a Gram matrix attached the
/// pairing is the ambient inner product; without one it is the raw dot
/// product on coordinates.
struct LinearFunctional {
    QVec normal;
    const QMat* gram = nullptr;

    Rat eval(const QVec& x) const {
        if (!gram) return dot(normal, x);
        Rat s;
        for (size_t i = 0; i < normal.size(); ++i) {
            if (normal[i].is_zero()) continue;
            for (size_t j = 0; j < x.size(); ++j) s += normal[i] * x[j] * (*gram)[i][j];
        }
        return s;
    }
};

/// The subset of xs attaining the maximum of phi, with the maximum value.
std::pair<std::vector<QVec>, Rat> maximizer_subset(const std::vector<QVec>& xs,
                                                   const LinearFunctional& phi);

/// Vertices of P: the points that cannot be written inside the hull of the
/// remaining generators. Duplicate-free.
std::vector<QVec> vertices(const VPolyhedron& p);

/// Extremal rays of the recession cone, in primitive form, duplicate-free.
std::vector<QVec> extremal_rays(const VPolyhedron& p);

/// Decides whether f (given by generators that must lie in p) is a face of
/// p, i.e. either all of p or the exact maximizer set of some supporting
/// functional. Throws std::domain_error when f is not contained in p.
bool is_face(const VPolyhedron& p, const VPolyhedron& f);

} // namespace weylface
