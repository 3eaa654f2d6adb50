#include "weylface/lp.hpp"

#include <stdexcept>

namespace weylface {

namespace {

// Standard-form working copy: all rows equalities with nonnegative rhs, all
// variables nonnegative (free variables split), one artificial per row so
// the initial basis is the identity.
struct Tableau {
    int m = 0;          // rows
    int ncols = 0;      // structural + slack + artificial
    int art0 = 0;       // first artificial column
    QMat t;             // m x ncols
    QVec rhs;           // m
    std::vector<int> basis;

    // column mapping back to the original problem
    std::vector<int> plus_col;   // original var -> column of positive part
    std::vector<int> minus_col;  // original var -> column of negative part (-1 if none)
    std::vector<bool> row_negated;

    void pivot(int r, int s, QVec& obj, Rat& objval) {
        Rat inv = Rat(1) / t[size_t(r)][size_t(s)];
        for (auto& x : t[size_t(r)]) x *= inv;
        rhs[size_t(r)] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || t[size_t(i)][size_t(s)].is_zero()) continue;
            Rat f = t[size_t(i)][size_t(s)];
            for (int j = 0; j < ncols; ++j) t[size_t(i)][size_t(j)] -= f * t[size_t(r)][size_t(j)];
            rhs[size_t(i)] -= f * rhs[size_t(r)];
        }
        if (!obj[size_t(s)].is_zero()) {
            Rat f = obj[size_t(s)];
            for (int j = 0; j < ncols; ++j) obj[size_t(j)] -= f * t[size_t(r)][size_t(j)];
            objval += f * rhs[size_t(r)];
        }
        basis[size_t(r)] = s;
    }

    // Maximizes costs c with Bland's rule. Returns false when unbounded.
    // Columns with enterable[j] == false never enter the basis.
    bool simplex(const QVec& c, const std::vector<bool>& enterable, QVec& obj, Rat& objval) {
        obj = c;
        objval = Rat(0);
        for (int i = 0; i < m; ++i) {
            const Rat& cb = c[size_t(basis[size_t(i)])];
            if (cb.is_zero()) continue;
            for (int j = 0; j < ncols; ++j) obj[size_t(j)] -= cb * t[size_t(i)][size_t(j)];
            objval += cb * rhs[size_t(i)];
        }
        for (;;) {
            int s = -1;
            for (int j = 0; j < ncols; ++j) {
                if (enterable[size_t(j)] && Rat(0) < obj[size_t(j)]) {
                    s = j;
                    break;  // Bland: smallest eligible index
                }
            }
            if (s < 0) return true;
            int r = -1;
            for (int i = 0; i < m; ++i) {
                if (!(Rat(0) < t[size_t(i)][size_t(s)])) continue;
                if (r < 0) {
                    r = i;
                    continue;
                }
                Rat cur = rhs[size_t(i)] / t[size_t(i)][size_t(s)];
                Rat best = rhs[size_t(r)] / t[size_t(r)][size_t(s)];
                if (cur < best || (cur == best && basis[size_t(i)] < basis[size_t(r)])) r = i;
            }
            if (r < 0) return false;  // unbounded direction
            pivot(r, s, obj, objval);
        }
    }
};

Tableau build_tableau(const LPProblem& p) {
    Tableau tab;
    tab.m = p.rows();
    int k = p.cols();

    tab.plus_col.assign(size_t(k), -1);
    tab.minus_col.assign(size_t(k), -1);
    int col = 0;
    for (int j = 0; j < k; ++j) {
        tab.plus_col[size_t(j)] = col++;
        if (!p.nonneg[size_t(j)]) tab.minus_col[size_t(j)] = col++;
    }
    int slack0 = col;
    int nslack = 0;
    for (auto r : p.rel)
        if (r != Rel::eq) ++nslack;
    tab.art0 = slack0 + nslack;
    tab.ncols = tab.art0 + tab.m;

    tab.t.assign(size_t(tab.m), QVec(size_t(tab.ncols)));
    tab.rhs.assign(size_t(tab.m), Rat(0));
    tab.row_negated.assign(size_t(tab.m), false);
    tab.basis.assign(size_t(tab.m), 0);

    int slack = slack0;
    for (int i = 0; i < tab.m; ++i) {
        bool neg = p.b[size_t(i)] < Rat(0);
        tab.row_negated[size_t(i)] = neg;
        Rat sgn = neg ? Rat(-1) : Rat(1);
        for (int j = 0; j < k; ++j) {
            Rat v = sgn * p.a[size_t(i)][size_t(j)];
            tab.t[size_t(i)][size_t(tab.plus_col[size_t(j)])] = v;
            if (tab.minus_col[size_t(j)] >= 0) tab.t[size_t(i)][size_t(tab.minus_col[size_t(j)])] = -v;
        }
        tab.rhs[size_t(i)] = sgn * p.b[size_t(i)];
        Rel r = p.rel[size_t(i)];
        if (neg && r != Rel::eq) r = (r == Rel::le) ? Rel::ge : Rel::le;
        if (r == Rel::le)
            tab.t[size_t(i)][size_t(slack++)] = Rat(1);
        else if (r == Rel::ge)
            tab.t[size_t(i)][size_t(slack++)] = Rat(-1);
        tab.t[size_t(i)][size_t(tab.art0 + i)] = Rat(1);
        tab.basis[size_t(i)] = tab.art0 + i;
    }
    return tab;
}

QVec recover_witness(const LPProblem& p, const Tableau& tab) {
    QVec std_x(static_cast<size_t>(tab.ncols));
    for (int i = 0; i < tab.m; ++i) std_x[size_t(tab.basis[size_t(i)])] = tab.rhs[size_t(i)];
    QVec x(static_cast<size_t>(p.cols()));
    for (int j = 0; j < p.cols(); ++j) {
        x[size_t(j)] = std_x[size_t(tab.plus_col[size_t(j)])];
        if (tab.minus_col[size_t(j)] >= 0) x[size_t(j)] -= std_x[size_t(tab.minus_col[size_t(j)])];
    }
    return x;
}

} // namespace

LPResult lp_solve(const LPProblem& p) {
    if (int(p.a.size()) != int(p.rel.size()) || int(p.a.size()) != int(p.b.size()) ||
        int(p.nonneg.size()) != p.cols())
        throw std::invalid_argument("malformed LP problem");
    for (const auto& row : p.a)
        if (int(row.size()) != p.cols()) throw std::invalid_argument("LP row dimension mismatch");

    Tableau tab = build_tableau(p);
    std::vector<bool> enter_all(size_t(tab.ncols), true);
    std::vector<bool> enter_no_art = enter_all;
    for (int i = 0; i < tab.m; ++i) enter_no_art[size_t(tab.art0 + i)] = false;

    // Phase 1: drive the artificial variables to zero.
    QVec phase1_cost(size_t(tab.ncols));
    for (int i = 0; i < tab.m; ++i) phase1_cost[size_t(tab.art0 + i)] = Rat(-1);
    QVec obj;
    Rat objval;
    bool bounded = tab.simplex(phase1_cost, enter_no_art, obj, objval);
    (void)bounded;  // phase 1 objective is bounded above by zero
    if (objval < Rat(0)) return LPResult{LPStatus::infeasible, Rat(0), {}, {}};

    // Pivot surviving artificials out of the basis where possible.
    for (int i = 0; i < tab.m; ++i) {
        if (tab.basis[size_t(i)] < tab.art0) continue;
        for (int j = 0; j < tab.art0; ++j) {
            if (!tab.t[size_t(i)][size_t(j)].is_zero()) {
                tab.pivot(i, j, obj, objval);
                break;
            }
        }
    }

    // Phase 2: the real objective over structural columns.
    QVec phase2_cost(size_t(tab.ncols));
    for (int j = 0; j < p.cols(); ++j) {
        phase2_cost[size_t(tab.plus_col[size_t(j)])] = p.objective[size_t(j)];
        if (tab.minus_col[size_t(j)] >= 0)
            phase2_cost[size_t(tab.minus_col[size_t(j)])] = -p.objective[size_t(j)];
    }
    bounded = tab.simplex(phase2_cost, enter_no_art, obj, objval);
    LPResult res;
    res.witness = recover_witness(p, tab);
    if (!bounded) {
        res.status = LPStatus::unbounded;
        return res;
    }
    res.status = LPStatus::optimal;
    res.value = objval;
    // Dual values sit in the reduced costs of the artificial columns (their
    // original columns formed the identity): y_i = -obj[art_i], flipped back
    // for rows that were negated during standardization.
    res.dual.assign(size_t(tab.m), Rat(0));
    for (int i = 0; i < tab.m; ++i) {
        Rat y = -obj[size_t(tab.art0 + i)];
        res.dual[size_t(i)] = tab.row_negated[size_t(i)] ? -y : y;
    }
    return res;
}

bool lp_check_certificate(const LPProblem& p, const LPResult& r, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (r.status != LPStatus::optimal) return fail("certificate check needs an optimal result");
    if (int(r.witness.size()) != p.cols() || int(r.dual.size()) != p.rows())
        return fail("certificate has wrong dimensions");
    // primal feasibility
    for (int j = 0; j < p.cols(); ++j)
        if (p.nonneg[size_t(j)] && r.witness[size_t(j)] < Rat(0))
            return fail("witness violates nonnegativity");
    for (int i = 0; i < p.rows(); ++i) {
        Rat lhs = dot(p.a[size_t(i)], r.witness);
        const Rat& rhs = p.b[size_t(i)];
        switch (p.rel[size_t(i)]) {
            case Rel::le:
                if (rhs < lhs) return fail("witness violates a <= row");
                break;
            case Rel::ge:
                if (lhs < rhs) return fail("witness violates a >= row");
                break;
            case Rel::eq:
                if (!(lhs == rhs)) return fail("witness violates an = row");
                break;
        }
    }
    if (!(dot(p.objective, r.witness) == r.value)) return fail("objective mismatch at witness");
    // dual feasibility: sign conditions and y^T A >= c on nonnegative
    // variables (equality on free ones)
    for (int i = 0; i < p.rows(); ++i) {
        if (p.rel[size_t(i)] == Rel::le && r.dual[size_t(i)] < Rat(0)) return fail("dual sign on <= row");
        if (p.rel[size_t(i)] == Rel::ge && Rat(0) < r.dual[size_t(i)]) return fail("dual sign on >= row");
    }
    for (int j = 0; j < p.cols(); ++j) {
        Rat ya;
        for (int i = 0; i < p.rows(); ++i) ya += r.dual[size_t(i)] * p.a[size_t(i)][size_t(j)];
        if (p.nonneg[size_t(j)]) {
            if (ya < p.objective[size_t(j)]) return fail("dual infeasible on a nonnegative variable");
        } else {
            if (!(ya == p.objective[size_t(j)])) return fail("dual infeasible on a free variable");
        }
    }
    if (!(dot(r.dual, p.b) == r.value)) return fail("dual objective does not match");
    return true;
}

} // namespace weylface
