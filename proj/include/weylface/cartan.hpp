#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace weylface {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A finite Cartan type, e.g. A3 or G2. Construction enforces the rank
/// constraints of the finite classification:
///   A: n >= 1,  B, C: n >= 2,  D: n >= 3,  E: n in {6,7,8},  F: n = 4,  G: n = 2.
struct CartanType {
    Family family;
    int rank;

    CartanType(Family f, int n);

    /// Parses strings like "A3" or "g2" (family letter is case-insensitive).
    static CartanType parse(std::string_view s);

    std::string str() const;

    friend bool operator==(const CartanType& a, const CartanType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
};

/// Cartan matrix in the column convention: entry (i, j) is the value of
/// alpha_j on the i-th simple coroot, so column j lists the coordinates of
/// alpha_j in the fundamental-weight basis. Bourbaki numbering throughout.
std::vector<std::vector<long>> cartan_matrix(const CartanType& t);

/// Number of positive roots of the type (classification tables).
int positive_root_count(const CartanType& t);

/// All valid types of rank <= max_rank, in family order; handy for sweeps.
std::vector<CartanType> all_types_up_to_rank(int max_rank);

} // namespace weylface
