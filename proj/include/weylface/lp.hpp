#pragma once

#include "weylface/linalg.hpp"

#include <string>
#include <vector>

namespace weylface {

enum class Rel { le, ge, eq };

/// A linear program in the form: maximize objective . x subject to the
/// listed rows; variables marked nonneg are >= 0, the rest are free.
struct LPProblem {
    QMat a;
    std::vector<Rel> rel;
    QVec b;
    QVec objective;
    std::vector<bool> nonneg;

    int rows() const { return int(a.size()); }
    int cols() const { return int(objective.size()); }

    /// Problem with `cols` variables, all constrained nonnegative by default.
    static LPProblem with_cols(int cols) {
        LPProblem p;
        p.objective.assign(size_t(cols), Rat(0));
        p.nonneg.assign(size_t(cols), true);
        return p;
    }

    void add_row(QVec coeffs, Rel r, Rat rhs) {
        if (int(coeffs.size()) != cols()) throw std::invalid_argument("LP row dimension mismatch");
        a.push_back(std::move(coeffs));
        rel.push_back(r);
        b.push_back(std::move(rhs));
    }
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rat value;    // objective at the witness (optimal only)
    QVec witness; // optimal solution, or a feasible point when unbounded
    QVec dual;    // one multiplier per row (optimal only)

    bool optimal() const { return status == LPStatus::optimal; }
    bool feasible() const { return status != LPStatus::infeasible; }
};

/// Exact two-phase simplex over the rationals with Bland's anti-cycling
/// pivot rule. The trichotomy is exact: optimal results carry both an
/// optimal witness and a dual certificate, unbounded results carry a
/// feasible point.
LPResult lp_solve(const LPProblem& p);

/// Verifies an optimal result from first principles: exact primal
/// feasibility, objective equality, dual feasibility and matching dual
/// objective. Returns false (with a reason) if anything fails.
bool lp_check_certificate(const LPProblem& p, const LPResult& r, std::string* why = nullptr);

} // namespace weylface
