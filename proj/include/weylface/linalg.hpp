#pragma once

#include "weylface/rational.hpp"

#include <optional>
#include <vector>

namespace weylface {

/// Coordinate vector over the rationals.
using QVec = std::vector<Rat>;
/// Dense rational matrix, row major.
using QMat = std::vector<QVec>;

QVec vec_add(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_neg(const QVec& a);
QVec vec_scale(const Rat& c, const QVec& a);
Rat dot(const QVec& a, const QVec& b);
bool vec_is_zero(const QVec& a);
QVec zero_vec(int n);

/// Lexicographic order; used everywhere a canonical sorted form is needed.
bool vec_less(const QVec& a, const QVec& b);

QMat identity_matrix(int n);
QVec mat_vec(const QMat& m, const QVec& x);
QMat mat_mul(const QMat& a, const QMat& b);

/// Solves a x = b by exact Gaussian elimination. Empty result when the
/// system is inconsistent; for underdetermined systems one solution is
/// returned (free variables set to zero).
std::optional<QVec> solve_linear(QMat a, QVec b);

QMat invert_matrix(const QMat& m);

int matrix_rank(QMat m);

/// Basis of { x : a x = 0 }.
std::vector<QVec> nullspace(QMat a);

/// Leading principal minors det(a[0..k][0..k]), k = 1..n.
std::vector<Rat> leading_principal_minors(const QMat& a);

/// Scales to integer entries with gcd 1, preserving direction and sign.
/// Zero vectors pass through unchanged.
QVec primitive_integer_vector(const QVec& v);

} // namespace weylface
