#include "weylface/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace weylface {

namespace {

void require_same_size(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
}

} // namespace

QVec vec_add(const QVec& a, const QVec& b) {
    require_same_size(a, b);
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec vec_sub(const QVec& a, const QVec& b) {
    require_same_size(a, b);
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec vec_neg(const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

QVec vec_scale(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Rat dot(const QVec& a, const QVec& b) {
    require_same_size(a, b);
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool vec_is_zero(const QVec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

QVec zero_vec(int n) { return QVec(size_t(n)); }

bool vec_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

QMat identity_matrix(int n) {
    QMat m(size_t(n), zero_vec(n));
    for (int i = 0; i < n; ++i) m[size_t(i)][size_t(i)] = 1;
    return m;
}

QVec mat_vec(const QMat& m, const QVec& x) {
    QVec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
    return r;
}

QMat mat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(m));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("matrix dimension mismatch");
        for (size_t j = 0; j < m; ++j) {
            Rat s;
            for (size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
            r[i][j] = s;
        }
    }
    return r;
}

std::optional<QVec> solve_linear(QMat a, QVec b) {
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a[0].size();
    if (b.size() != rows) throw std::invalid_argument("rhs dimension mismatch");

    std::vector<int> pivot_col_of_row(rows, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rat inv = Rat(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col_of_row[r] = int(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;

    QVec x(cols);
    for (size_t i = 0; i < r; ++i) x[size_t(pivot_col_of_row[i])] = b[i];
    return x;
}

QMat invert_matrix(const QMat& m) {
    size_t n = m.size();
    QMat a = m;
    QMat inv = identity_matrix(int(n));
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rat f = Rat(1) / a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] *= f;
            inv[c][j] *= f;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            Rat g = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[c][j];
                inv[i][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

int matrix_rank(QMat m) {
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return int(r);
}

std::vector<QVec> nullspace(QMat a) {
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<int> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rat inv = Rat(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_of_col[c] = int(r);
        ++r;
    }
    std::vector<QVec> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        QVec v(cols);
        v[c] = 1;
        for (size_t j = 0; j < cols; ++j) {
            if (pivot_of_col[j] >= 0) v[j] = -a[size_t(pivot_of_col[j])][c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> leading_principal_minors(const QMat& a) {
    size_t n = a.size();
    std::vector<Rat> minors;
    for (size_t k = 1; k <= n; ++k) {
        QMat sub(k, QVec(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub[i][j] = a[i][j];
        // determinant by fraction-free-ish elimination over exact rationals
        Rat det = 1;
        bool zero = false;
        for (size_t c = 0; c < k; ++c) {
            size_t p = c;
            while (p < k && sub[p][c].is_zero()) ++p;
            if (p == k) {
                zero = true;
                break;
            }
            if (p != c) {
                std::swap(sub[p], sub[c]);
                det = -det;
            }
            det *= sub[c][c];
            Rat inv = Rat(1) / sub[c][c];
            for (size_t i = c + 1; i < k; ++i) {
                if (sub[i][c].is_zero()) continue;
                Rat f = sub[i][c] * inv;
                for (size_t j = c; j < k; ++j) sub[i][j] -= f * sub[c][j];
            }
        }
        minors.push_back(zero ? Rat(0) : det);
    }
    return minors;
}

QVec primitive_integer_vector(const QVec& v) {
    using detail::uint128;
    if (vec_is_zero(v)) return v;
    // common denominator
    Rat::int128 lcm = 1;
    for (const auto& x : v) {
        Rat::int128 d = x.den();
        Rat::int128 g = Rat::int128(detail::gcd_u128(detail::uabs(lcm), detail::uabs(d)));
        lcm = detail::checked_mul(lcm / g, d);
    }
    QVec w(v.size());
    uint128 g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i] * Rat(lcm, 1);
        assert(w[i].is_integer());
        g = detail::gcd_u128(g, detail::uabs(w[i].num()));
    }
    Rat scale = Rat(1, Rat::int128(g));
    for (auto& x : w) x *= scale;
    return w;
}

} // namespace weylface
