#pragma once

#include "weylface/weight_sets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylface {

/// A concrete violation of the combination criterion: coefficients m (over
/// Y) and r (over X, in element order) with equal sums, where some element
/// outside Y carries positive weight -- or, for positivity failures, with
/// the Y-side sum exceeding the X-side sum.
struct WeakFaceCounterexample {
    std::optional<Weight> violator;  // the x outside Y with r_x > 0 (weak failures)
    QVec m_coeffs;                   // aligned with Y.elements
    QVec r_coeffs;                   // aligned with X.elements
};

struct WeakFaceVerdict {
    bool is_weak = false;
    bool is_positive = false;
    std::optional<WeakFaceCounterexample> counterexample;
};

/// verified recomputes each verdict along an independent second route and
/// asserts agreement (per-generator LPs for weakness, the 0-adjunction
/// characterization for positivity). fast answers from one LP per question.
enum class WeakCheck { fast, verified };

/// Weak-face test by exact LP: Y (a subset of X) is weak when no equal-sum
/// nonnegative combination identity sum m_y y = sum r_x x can place positive
/// weight outside Y. Normalizing both sums to 1 loses nothing because the
/// identity is jointly homogeneous in (m, r).
WeakFaceVerdict is_weak_face(const RootSystem& rs, const WeightSet& x, const WeightSet& y,
                             WeakCheck mode = WeakCheck::fast);

/// Weak-face test plus the positivity condition: with sum m_y = 1, the
/// minimum achievable sum r_x must be at least 1.
WeakFaceVerdict is_positive_weak_face(const RootSystem& rs, const WeightSet& x, const WeightSet& y,
                                      WeakCheck mode = WeakCheck::fast);

/// Cap on brute-force subset enumeration (2^|X| subsets, each an LP test).
inline constexpr int kWeakFaceBruteBound = 16;

/// All nonempty weak faces of X, produced twice -- once by subset brute
/// force, once as the trace of each geometric face of conv(X) -- and
/// asserted identical before returning. Throws when |X| exceeds the bound,
/// suggesting the sampled verification mode.
std::vector<WeightSet> enumerate_weak_faces(const RootSystem& rs, const WeightSet& x,
                                            int bound = kWeakFaceBruteBound);

/// Outcome of a verification sweep over one instance.
struct TheoremReport {
    std::string theorem;
    std::string instance;
    long long subsets_checked = 0;
    std::vector<std::string> violations;
    bool hypothesis_excluded = false;

    bool ok() const { return violations.empty(); }
};

/// Checks, for every nonempty proper subset Y of a W-stable weight set,
/// that the three characterizations agree: weak face, positive weak face,
/// and trace of a proper geometric face. Inputs with weight set {0} take
/// the hypothesis-excluded branch. Sets larger than the brute-force bound
/// are checked on all geometric faces plus seeded random subsets.
TheoremReport verify_weak_face_equivalence(const RootSystem& rs, const WeightSet& module_weights,
                                           int bound = kWeakFaceBruteBound, unsigned seed = 1);

/// Checks, for every nonempty subset Y of wt V(lambda), the equivalence of:
/// being a transported truncation w(wt V_I0(lambda)), being a weak face,
/// and being the argmax of the functional paired with its own weight sum --
/// plus dominance and positive maximum for proper Y.
TheoremReport verify_truncation_maximizers(const RootSystem& rs, const Weight& lambda,
                                           int bound = kWeakFaceBruteBound, unsigned seed = 1);

} // namespace weylface
