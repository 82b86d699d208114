#pragma once

#include "poslab/rational.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace poslab {

/// One linear condition coeffs . x (<=|=) rhs.
struct LinearRow {
    RatVec coeffs;
    Rational rhs;

    friend bool operator==(const LinearRow& a, const LinearRow& b) = default;
};

/// Exact H-representation: { x in Q^dim : A x <= b, E x = f }. dim = 0 is
/// allowed (rows with empty coefficient vectors), as the recursion base case
/// of lattice-point counting.
struct RationalPolytope {
    int dim = 0;
    std::vector<LinearRow> ineqs;
    std::vector<LinearRow> eqs;

    void add_ineq(RatVec coeffs, Rational rhs);
    void add_eq(RatVec coeffs, Rational rhs);

    /// Exact membership test.
    bool satisfies(const RatVec& x) const;

    friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) = default;
};

enum class LpStatus { feasible, infeasible };

struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    std::optional<RatVec> witness;   // present iff feasible; satisfies P exactly
    std::optional<Rational> optimum; // objective value at the witness
};

enum class LpSense { maximize, minimize };

/// Exact rational simplex (Bland's rule). Throws unbounded_error when the
/// objective is unbounded over a nonempty feasible set.
LpOutcome lp_optimize(const RationalPolytope& p, const RatVec& objective, LpSense sense);

/// lp_optimize with the zero objective.
LpOutcome is_feasible(const RationalPolytope& p);

/// The implicit equality system of a nonempty polytope: declared equalities
/// plus every inequality whose slack maximum over P is zero. Throws
/// std::invalid_argument if P is infeasible.
std::vector<LinearRow> affine_hull(const RationalPolytope& p);

/// kP: every right-hand side multiplied by k.
RationalPolytope dilate(const RationalPolytope& p, int k);

/// Exact per-coordinate bounds [min, max] by LP; throws unbounded_error if
/// some coordinate is unbounded, nullopt if P is empty.
std::optional<std::vector<std::pair<Rational, Rational>>>
coordinate_bounds(const RationalPolytope& p);

/// Visits the integer points of a bounded polytope in lexicographic order;
/// the visitor returns false to stop. Returns false iff stopped early.
bool for_each_lattice_point(const RationalPolytope& p,
                            const std::function<bool(const std::vector<Int>&)>& visit);

/// Number of integer points of a bounded polytope. Throws unbounded_error
/// when P is unbounded.
long long count_lattice_points(const RationalPolytope& p);

/// (f_P(1), ..., f_P(k_max)) by counting lattice points of dilations.
std::vector<long long> ehrhart_values(const RationalPolytope& p, int k_max);

} // namespace poslab
