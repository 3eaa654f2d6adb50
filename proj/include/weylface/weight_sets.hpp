#pragma once

#include "weylface/root_system.hpp"
#include "weylface/weyl.hpp"

#include <string>
#include <vector>

namespace weylface {

enum class Provenance { simple_module, finite_part, truncation, ad_hoc };

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& s);

/// A finite set of weights, deduplicated and kept sorted so that equality
/// is element-wise comparison and output is deterministic.
struct WeightSet {
    std::vector<Weight> elements;
    Provenance provenance = Provenance::ad_hoc;
    int rank = 0;

    WeightSet() = default;
    WeightSet(std::vector<Weight> elems, Provenance prov, int n);

    size_t size() const { return elements.size(); }
    bool contains(const Weight& w) const;
    bool is_subset_of(const WeightSet& o) const;

    friend bool operator==(const WeightSet& a, const WeightSet& b) { return a.elements == b.elements; }
    friend bool operator!=(const WeightSet& a, const WeightSet& b) { return !(a == b); }

    std::vector<QVec> coord_vectors() const;
};

/// Weight support of the simple highest-weight module V(lambda); lambda must
/// be dominant integral. Computed by dominance saturation: mu is a weight
/// exactly when lambda - mu is a nonnegative integer root combination and the
/// dominant representative of mu still sits below lambda.
WeightSet simple_module_weights(const RootSystem& rs, const Weight& lambda);

/// The finite weight set of the parabolic part: the weights reachable from
/// lambda inside the J-subsystem. Requires lambda to take nonnegative
/// integer values on the J-coroots; coordinates outside J ride along
/// unchanged and may be arbitrary rationals.
WeightSet finite_part_weights(const RootSystem& rs, const Weight& lambda, const Subset& j);

/// Weight description of the highest-weight module attached to (lambda, J):
/// the finite parabolic part minus arbitrary nonnegative integer
/// combinations of the positive roots outside the J-subsystem.
struct GVMWeights {
    WeightSet finite_part;
    std::vector<PositiveRoot> ray_roots;
    Weight lambda;
    Subset j;
};

GVMWeights gvm_weights(const RootSystem& rs, const Weight& lambda, const Subset& j);

/// Exact membership test for the (generally infinite) weight set described
/// by gw, by bounded search over the ray-root coefficients.
bool gvm_contains(const RootSystem& rs, const GVMWeights& gw, const Weight& mu);

/// wt V(lambda) cut to the weights reachable using only the simple roots in
/// i0: { mu : lambda - mu in Z_+ span of { alpha_i : i in i0 } }.
WeightSet truncated_weights(const RootSystem& rs, const Weight& lambda, const Subset& i0);

/// Unnormalized sum of the members (zero for the empty set).
Weight rho(const WeightSet& y);

/// Argmax of (nu, -) inside a weight set, under the ambient inner product.
WeightSet maximizer_weights(const RootSystem& rs, const WeightSet& x, const Weight& nu);

} // namespace weylface
