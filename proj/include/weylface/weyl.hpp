#pragma once

#include "weylface/root_system.hpp"

#include <utility>
#include <vector>

namespace weylface {

/// An element of the Weyl group, stored as a word in simple reflections.
/// letters are 0-based generator indices, applied right to left. Two words
/// represent the same element exactly when their actions agree; comparisons
/// of elements always go through the action matrix, never the letters.
struct WeylWord {
    std::vector<int> letters;
    Subset allowed_indices;  // smallest J the word is known to live in

    static WeylWord identity(const Subset& j) { return WeylWord{{}, j}; }
    int length() const { return int(letters.size()); }
    bool is_identity() const { return letters.empty(); }

    /// The inverse element (simple reflections are involutions).
    WeylWord inverse() const {
        WeylWord w = *this;
        std::reverse(w.letters.begin(), w.letters.end());
        return w;
    }
};

/// Image of mu under the word (rightmost letter acts first). The identity
/// word returns mu unchanged.
Weight apply_weyl(const RootSystem& rs, const WeylWord& w, const Weight& mu);

/// Action on fundamental-weight coordinates as an integer matrix; this is
/// the canonical form used for element equality.
QMat weyl_action_matrix(const RootSystem& rs, const WeylWord& w);

/// Default cap on Weyl subgroup enumeration; the environment variable
/// WEYLFACE_MAX_WEYL overrides it.
long weyl_enumeration_bound();

/// Enumerates W_J, one canonical shortest word per element, identity first,
/// then by increasing length (ties broken by generator order). Throws when
/// the subgroup exceeds the bound, reporting the partial count.
std::vector<WeylWord> weyl_subgroup(const RootSystem& rs, const Subset& j,
                                    long bound = weyl_enumeration_bound());

/// The longest element of W_J: the unique element sending every positive
/// root of the J-subsystem to a negative one.
WeylWord longest_element(const RootSystem& rs, const Subset& j,
                         long bound = weyl_enumeration_bound());

/// The unique J-dominant element nu' of the orbit W_J(nu), together with a
/// word w in W_J such that w(nu) = nu'.
std::pair<Weight, WeylWord> dominant_representative(const RootSystem& rs, const Subset& j,
                                                    const Weight& nu);

/// The J-antidominant orbit element (all pairings with J-coroots <= 0).
std::pair<Weight, WeylWord> antidominant_representative(const RootSystem& rs, const Subset& j,
                                                        const Weight& nu);

/// Full W_J-orbit of mu (deduplicated, sorted). Needs no group enumeration.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Subset& j, const Weight& mu);

} // namespace weylface
