#include "poslab/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace poslab {

void RationalPolytope::add_ineq(RatVec coeffs, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != dim)
        throw std::invalid_argument("RationalPolytope: row length differs from dim");
    ineqs.push_back({std::move(coeffs), std::move(rhs)});
}

void RationalPolytope::add_eq(RatVec coeffs, Rational rhs) {
    if (static_cast<int>(coeffs.size()) != dim)
        throw std::invalid_argument("RationalPolytope: row length differs from dim");
    eqs.push_back({std::move(coeffs), std::move(rhs)});
}

bool RationalPolytope::satisfies(const RatVec& x) const {
    if (static_cast<int>(x.size()) != dim)
        return false;
    for (const auto& row : ineqs)
        if (dot(row.coeffs, x) > row.rhs)
            return false;
    for (const auto& row : eqs)
        if (dot(row.coeffs, x) != row.rhs)
            return false;
    return true;
}

namespace {

// Dense simplex tableau over exact rationals. Columns are the standard-form
// variables (x = u - w split, slacks, then phase-1 artificials); Bland's rule
// on both the entering and leaving choice prevents cycling.
class Simplex {
  public:
    Simplex(const RationalPolytope& p) : dim_(p.dim) {
        n_struct_ = 2 * dim_;
        n_slack_ = static_cast<int>(p.ineqs.size());
        cols_ = n_struct_ + n_slack_;

        for (size_t i = 0; i < p.ineqs.size(); ++i)
            add_row(p.ineqs[i].coeffs, p.ineqs[i].rhs, static_cast<int>(i));
        for (const auto& row : p.eqs)
            add_row(row.coeffs, row.rhs, -1);
    }

    // Phase 1; true iff feasible.
    bool solve_feasibility() {
        int n_art = 0;
        for (size_t r = 0; r < rows_.size(); ++r)
            if (basis_[r] < 0)
                ++n_art;
        art_begin_ = cols_;
        if (n_art > 0) {
            int next = cols_;
            for (size_t r = 0; r < rows_.size(); ++r) {
                if (basis_[r] < 0)
                    basis_[r] = next++;
            }
            cols_ += n_art;
            for (size_t r = 0; r < rows_.size(); ++r) {
                rows_[r].resize(cols_);
                if (basis_[r] >= art_begin_)
                    rows_[r][basis_[r]] = Rational(1);
            }
            // Maximize -sum(artificials), priced out over the current basis.
            obj_.assign(cols_, Rational());
            objval_ = Rational();
            for (size_t r = 0; r < rows_.size(); ++r) {
                if (basis_[r] < art_begin_)
                    continue;
                for (int c = 0; c < art_begin_; ++c)
                    obj_[c] += rows_[r][c];
                objval_ -= rhs_[r];
            }
            run();
            if (objval_ != Rational())
                return false;
            expel_artificials();
        }
        feasible_ = true;
        return true;
    }

    // Phase 2. Pre: solve_feasibility() returned true.
    void solve_objective(const RatVec& objective) {
        obj_.assign(cols_, Rational());
        for (int i = 0; i < dim_; ++i) {
            obj_[2 * i] = objective[i];
            obj_[2 * i + 1] = -objective[i];
        }
        objval_ = Rational();
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rational cb = obj_[basis_[r]];
            if (cb.is_zero())
                continue;
            for (int c = 0; c < cols_; ++c)
                obj_[c] -= cb * rows_[r][c];
            objval_ += cb * rhs_[r];
        }
        run();
    }

    RatVec current_point() const {
        RatVec x(dim_);
        for (size_t r = 0; r < rows_.size(); ++r) {
            int b = basis_[r];
            if (b < n_struct_) {
                if (b % 2 == 0)
                    x[b / 2] += rhs_[r];
                else
                    x[b / 2] -= rhs_[r];
            }
        }
        return x;
    }

    Rational objective_value() const { return objval_; }

  private:
    void add_row(const RatVec& coeffs, const Rational& rhs, int slack_index) {
        RatVec row(cols_);
        for (int i = 0; i < dim_; ++i) {
            row[2 * i] = coeffs[i];
            row[2 * i + 1] = -coeffs[i];
        }
        Rational r = rhs;
        bool negate = r < Rational();
        if (slack_index >= 0)
            row[n_struct_ + slack_index] = Rational(1);
        if (negate) {
            for (auto& v : row)
                v = -v;
            r = -r;
        }
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(r));
        // A non-negated inequality row starts with its slack basic; everything
        // else gets an artificial in phase 1 (marked -1 for now).
        basis_.push_back(slack_index >= 0 && !negate ? n_struct_ + slack_index : -1);
    }

    void pivot(size_t r, int c) {
        const Rational piv = rows_[r][c];
        for (auto& v : rows_[r])
            v /= piv;
        rhs_[r] /= piv;
        for (size_t r2 = 0; r2 < rows_.size(); ++r2) {
            if (r2 == r || rows_[r2][c].is_zero())
                continue;
            const Rational f = rows_[r2][c];
            for (int j = 0; j < cols_; ++j)
                rows_[r2][j] -= f * rows_[r][j];
            rhs_[r2] -= f * rhs_[r];
        }
        if (!obj_[c].is_zero()) {
            const Rational f = obj_[c];
            for (int j = 0; j < cols_; ++j)
                obj_[j] -= f * rows_[r][j];
            objval_ += f * rhs_[r];
        }
        basis_[r] = c;
    }

    void run() {
        const Rational zero;
        for (;;) {
            int enter = -1;
            for (int c = 0; c < cols_; ++c) {
                if (feasible_ && c >= art_begin_)
                    continue; // artificials never re-enter in phase 2
                if (obj_[c] > zero) {
                    enter = c;
                    break;
                }
            }
            if (enter < 0)
                return;
            int leave = -1;
            Rational best;
            for (size_t r = 0; r < rows_.size(); ++r) {
                if (rows_[r][enter] <= zero)
                    continue;
                Rational ratio = rhs_[r] / rows_[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = static_cast<int>(r);
                    best = ratio;
                }
            }
            if (leave < 0)
                throw unbounded_error("lp_optimize: objective unbounded over feasible set");
            pivot(static_cast<size_t>(leave), enter);
        }
    }

    // After phase 1, pivot zero-valued artificials out of the basis; rows
    // that cannot be pivoted are identically zero and get dropped.
    void expel_artificials() {
        for (size_t r = 0; r < rows_.size();) {
            if (basis_[r] < art_begin_) {
                ++r;
                continue;
            }
            int c = 0;
            while (c < art_begin_ && rows_[r][c].is_zero())
                ++c;
            if (c < art_begin_) {
                pivot(r, c);
                ++r;
            } else {
                rows_.erase(rows_.begin() + static_cast<long>(r));
                rhs_.erase(rhs_.begin() + static_cast<long>(r));
                basis_.erase(basis_.begin() + static_cast<long>(r));
            }
        }
    }

    int dim_, n_struct_, n_slack_, cols_;
    int art_begin_ = 0;
    bool feasible_ = false;
    std::vector<RatVec> rows_;
    RatVec rhs_;
    RatVec obj_;
    Rational objval_;
    std::vector<int> basis_;
};

LpOutcome dim_zero_outcome(const RationalPolytope& p) {
    for (const auto& row : p.ineqs)
        if (row.rhs < Rational())
            return {};
    for (const auto& row : p.eqs)
        if (!row.rhs.is_zero())
            return {};
    return {LpStatus::feasible, RatVec{}, Rational()};
}

} // namespace

LpOutcome lp_optimize(const RationalPolytope& p, const RatVec& objective, LpSense sense) {
    if (static_cast<int>(objective.size()) != p.dim)
        throw std::invalid_argument("lp_optimize: objective length differs from dim");
    if (p.dim == 0)
        return dim_zero_outcome(p);

    Simplex s(p);
    if (!s.solve_feasibility())
        return {};
    RatVec obj = objective;
    if (sense == LpSense::minimize)
        for (auto& v : obj)
            v = -v;
    s.solve_objective(obj);
    Rational opt = s.objective_value();
    if (sense == LpSense::minimize)
        opt = -opt;
    return {LpStatus::feasible, s.current_point(), opt};
}

LpOutcome is_feasible(const RationalPolytope& p) {
    return lp_optimize(p, RatVec(p.dim), LpSense::maximize);
}

std::vector<LinearRow> affine_hull(const RationalPolytope& p) {
    if (is_feasible(p).status != LpStatus::feasible)
        throw std::invalid_argument("affine_hull: polytope is infeasible");
    std::vector<LinearRow> system = p.eqs;
    for (const auto& row : p.ineqs) {
        try {
            LpOutcome out = lp_optimize(p, row.coeffs, LpSense::minimize);
            if (*out.optimum == row.rhs)
                system.push_back(row); // slack is zero everywhere on P
        } catch (const unbounded_error&) {
            // slack unbounded; certainly not an implicit equality
        }
    }
    return system;
}

RationalPolytope dilate(const RationalPolytope& p, int k) {
    if (k < 1)
        throw std::invalid_argument("dilate: factor must be positive");
    RationalPolytope q = p;
    for (auto& row : q.ineqs)
        row.rhs *= Rational(k);
    for (auto& row : q.eqs)
        row.rhs *= Rational(k);
    return q;
}

std::optional<std::vector<std::pair<Rational, Rational>>>
coordinate_bounds(const RationalPolytope& p) {
    std::vector<std::pair<Rational, Rational>> bounds(p.dim);
    for (int i = 0; i < p.dim; ++i) {
        RatVec e(p.dim);
        e[i] = Rational(1);
        LpOutcome lo = lp_optimize(p, e, LpSense::minimize);
        if (lo.status == LpStatus::infeasible)
            return std::nullopt;
        LpOutcome hi = lp_optimize(p, e, LpSense::maximize);
        bounds[i] = {*lo.optimum, *hi.optimum};
    }
    if (p.dim == 0 && is_feasible(p).status == LpStatus::infeasible)
        return std::nullopt;
    return bounds;
}

namespace {

struct IntRow {
    std::vector<Int> coeffs;
    Int rhs;
    bool equality;
};

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

IntRow clear_denominators(const LinearRow& row, bool equality) {
    RatVec all = row.coeffs;
    all.push_back(row.rhs);
    Int l = common_denominator(all);
    IntRow out;
    out.coeffs.reserve(row.coeffs.size());
    for (const auto& c : row.coeffs)
        out.coeffs.push_back((c * Rational(l)).num());
    out.rhs = (row.rhs * Rational(l)).num();
    out.equality = equality;
    return out;
}

} // namespace

bool for_each_lattice_point(const RationalPolytope& p,
                            const std::function<bool(const std::vector<Int>&)>& visit) {
    if (p.dim == 0) {
        if (dim_zero_outcome(p).status == LpStatus::feasible)
            return visit({});
        return true;
    }
    auto bounds = coordinate_bounds(p); // throws unbounded_error if unbounded
    if (!bounds)
        return true;
    const int d = p.dim;
    std::vector<Int> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        lo[i] = bounds->at(i).first.ceil();
        hi[i] = bounds->at(i).second.floor();
        if (lo[i] > hi[i])
            return true;
    }

    std::vector<IntRow> rows;
    for (const auto& r : p.ineqs)
        rows.push_back(clear_denominators(r, false));
    for (const auto& r : p.eqs)
        rows.push_back(clear_denominators(r, true));
    const size_t m = rows.size();

    // suffix extremes of sum_{i>=j} c_i x_i over the bounding box
    std::vector<std::vector<Int>> sufmin(m, std::vector<Int>(d + 1)),
        sufmax(m, std::vector<Int>(d + 1));
    for (size_t k = 0; k < m; ++k) {
        for (int j = d - 1; j >= 0; --j) {
            const Int& c = rows[k].coeffs[j];
            Int a = c * lo[j], b = c * hi[j];
            sufmin[k][j] = sufmin[k][j + 1] + std::min(a, b);
            sufmax[k][j] = sufmax[k][j + 1] + std::max(a, b);
        }
    }

    std::vector<Int> partial(m); // sum over fixed prefix, per row
    std::vector<Int> x(d);

    auto rec = [&](auto&& self, int j) -> bool {
        if (j == d) {
            for (size_t k = 0; k < m; ++k) {
                if (rows[k].equality ? partial[k] != rows[k].rhs : partial[k] > rows[k].rhs)
                    return true;
            }
            return visit(x);
        }
        Int vlo = lo[j], vhi = hi[j];
        for (size_t k = 0; k < m && vlo <= vhi; ++k) {
            const Int& c = rows[k].coeffs[j];
            if (c == 0) {
                // prune when the row can no longer be satisfied at all
                Int lo_rest = partial[k] + sufmin[k][j];
                if (lo_rest > rows[k].rhs)
                    return true;
                if (rows[k].equality && partial[k] + sufmax[k][j] < rows[k].rhs)
                    return true;
                continue;
            }
            Int slack_hi = rows[k].rhs - partial[k] - sufmin[k][j + 1];
            if (c > 0)
                vhi = std::min(vhi, floor_div(slack_hi, c));
            else
                vlo = std::max(vlo, ceil_div(slack_hi, c));
            if (rows[k].equality) {
                Int slack_lo = rows[k].rhs - partial[k] - sufmax[k][j + 1];
                if (c > 0)
                    vlo = std::max(vlo, ceil_div(slack_lo, c));
                else
                    vhi = std::min(vhi, floor_div(slack_lo, c));
            }
        }
        for (Int v = vlo; v <= vhi; ++v) {
            x[j] = v;
            std::vector<Int> saved(m);
            for (size_t k = 0; k < m; ++k) {
                saved[k] = partial[k];
                partial[k] += rows[k].coeffs[j] * v;
            }
            bool go_on = self(self, j + 1);
            partial = saved;
            if (!go_on)
                return false;
        }
        return true;
    };
    return rec(rec, 0);
}

long long count_lattice_points(const RationalPolytope& p) {
    long long n = 0;
    for_each_lattice_point(p, [&](const std::vector<Int>&) {
        ++n;
        return true;
    });
    return n;
}

std::vector<long long> ehrhart_values(const RationalPolytope& p, int k_max) {
    std::vector<long long> vals;
    vals.reserve(static_cast<size_t>(std::max(k_max, 0)));
    for (int k = 1; k <= k_max; ++k)
        vals.push_back(count_lattice_points(dilate(p, k)));
    return vals;
}

} // namespace poslab
