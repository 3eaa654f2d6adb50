#pragma once

#include "weylface/cartan.hpp"
#include "weylface/linalg.hpp"
#include "weylface/subset.hpp"
#include "weylface/weight.hpp"

#include <vector>

namespace weylface {

/// A positive root, carried in both coordinate systems: ordinary weight
/// coordinates and nonnegative-integer simple-root coordinates.
struct PositiveRoot {
    Weight omega;             // fundamental-weight coordinates
    std::vector<long> alpha;  // simple-root coordinates
};

/// Immutable data of a finite root system: Cartan matrix (column convention),
/// symmetrized form, simple and positive roots, and the Gram matrix of the
/// fundamental weights. Built once by build_root_system and shared freely.
struct RootSystem {
    CartanType type;
    int rank;
    std::vector<std::vector<long>> cartan;  // column j = alpha_j in omega-coordinates
    QMat cartan_inverse;
    QVec symmetrizers;                      // d_i = (alpha_i, alpha_i)/2
    QMat sym_form;                          // (alpha_i, alpha_j)
    QMat fundamental_weight_gram;           // (omega_i, omega_j)
    std::vector<Weight> simple_roots;
    std::vector<PositiveRoot> positive_roots;
    std::vector<std::vector<int>> diagram_components;  // connected components, 0-based
};

RootSystem build_root_system(const CartanType& t);

/// W-invariant inner product in fundamental-weight coordinates.
Rat inner_product(const RootSystem& rs, const Weight& mu, const Weight& nu);
Rat inner_product(const RootSystem& rs, const QVec& a, const QVec& b);

/// Simple-root coordinates of a weight (exact rationals).
QVec alpha_coordinates(const RootSystem& rs, const Weight& mu);

/// Weight from simple-root coordinates.
Weight weight_from_alpha(const RootSystem& rs, const QVec& alpha_coords);

/// True when mu lies in the nonnegative-integer span of the simple roots
/// indexed by within (all other coordinates must vanish).
bool in_nonneg_root_span(const RootSystem& rs, const Weight& mu, const Subset& within);

/// Indices with nonzero coordinate.
Subset support(const Weight& mu);

/// Indices where the coordinate is a nonnegative integer.
Subset integral_dominant_indices(const Weight& mu);

/// Union of the Dynkin-diagram components meeting the support of mu.
Subset component_closure(const RootSystem& rs, const Weight& mu);

/// Positive roots whose simple-root support lies inside J.
std::vector<PositiveRoot> positive_roots_in(const RootSystem& rs, const Subset& j);

/// Positive roots outside the J-generated subsystem.
std::vector<PositiveRoot> positive_roots_outside(const RootSystem& rs, const Subset& j);

Weight fundamental_weight(const RootSystem& rs, int i);
Weight simple_root(const RootSystem& rs, int i);
Weight zero_weight(const RootSystem& rs);

/// Sum of the fundamental weights indexed by J.
Weight rho_of_subset(const RootSystem& rs, const Subset& j);

} // namespace weylface
