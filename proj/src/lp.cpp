#include "affsel/lp.hpp"

#include <limits>
#include <stdexcept>

namespace affsel {

namespace {

void validate(const LinearProgram& lp) {
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (lp.constraints[i].coeffs.size() != lp.num_vars) {
      throw std::invalid_argument("lp: constraint " + std::to_string(i) +
                                  " row length != num_vars");
    }
  }
  if (lp.sense != Sense::FeasibilityOnly &&
      lp.objective.size() != lp.num_vars) {
    throw std::invalid_argument("lp: objective length != num_vars");
  }
  if (lp.sense == Sense::FeasibilityOnly && !lp.objective.empty() &&
      lp.objective.size() != lp.num_vars) {
    throw std::invalid_argument("lp: objective length != num_vars");
  }
}

// Dense tableau over the standard form
//   columns: u_0..u_{n-1}, w_0..w_{n-1} (x = u - w), slacks, artificials
// with every right-hand side made nonnegative by row sign flips.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    n_ = lp.num_vars;
    rows_ = lp.constraints.size();
    slack_start_ = 2 * n_;
    std::size_t num_slacks = 0;
    for (const auto& c : lp.constraints) {
      if (c.rel != Relation::Equal) ++num_slacks;
    }
    art_start_ = slack_start_ + num_slacks;
    cols_ = art_start_ + rows_;

    t_.assign(rows_, RatVec(cols_, Rational(0)));
    rhs_.assign(rows_, Rational(0));
    basis_.assign(rows_, 0);
    row_sign_.assign(rows_, 1);

    std::size_t slack = slack_start_;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Constraint& c = lp.constraints[i];
      const int sign = c.rhs < 0 ? -1 : 1;
      row_sign_[i] = sign;
      for (std::size_t j = 0; j < n_; ++j) {
        t_[i][j] = sign * c.coeffs[j];
        t_[i][n_ + j] = -t_[i][j];
      }
      if (c.rel != Relation::Equal) {
        const int orient = c.rel == Relation::LessEq ? 1 : -1;
        t_[i][slack++] = sign * orient;
      }
      t_[i][art_start_ + i] = 1;
      rhs_[i] = sign * c.rhs;
      basis_[i] = art_start_ + i;
    }
  }

  // Phase I: minimize the sum of artificials from the all-artificial basis.
  // Returns the optimal value (0 iff the original system is feasible).
  Rational phase1(long& pivots) {
    reduced_.assign(cols_, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      Rational colsum = 0;
      for (std::size_t i = 0; i < rows_; ++i) colsum += t_[i][j];
      reduced_[j] = (j >= art_start_ ? Rational(1) : Rational(0)) - colsum;
    }
    bland(cols_, pivots);
    Rational value = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= art_start_) value += rhs_[i];
    }
    return value;
  }

  /// Farkas multipliers over the original rows, from the phase-I duals.
  RatVec farkas() const {
    RatVec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational pi = 1 - reduced_[art_start_ + i];
      y[i] = -Rational(row_sign_[i]) * pi;
    }
    return y;
  }

  // Pivot basic artificials out (rows are degenerate there) and drop rows
  // that are redundant in the original system.
  void drop_artificials() {
    std::vector<bool> dead(rows_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < art_start_) continue;
      std::size_t enter = art_start_;
      for (std::size_t j = 0; j < art_start_; ++j) {
        if (t_[i][j] != 0) {
          enter = j;
          break;
        }
      }
      if (enter == art_start_) {
        dead[i] = true;  // 0 = 0 row
      } else {
        pivot(i, enter);
      }
    }
    std::size_t keep = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (dead[i]) continue;
      if (keep != i) {
        t_[keep] = std::move(t_[i]);
        rhs_[keep] = rhs_[i];
        basis_[keep] = basis_[i];
      }
      ++keep;
    }
    t_.resize(keep);
    rhs_.resize(keep);
    basis_.resize(keep);
    rows_ = keep;
  }

  /// Phase II over the real columns only. Returns false when unbounded.
  bool phase2(long& pivots) {
    RatVec cost(art_start_, Rational(0));
    const int flip = lp_.sense == Sense::Maximize ? -1 : 1;
    for (std::size_t j = 0; j < n_; ++j) {
      cost[j] = flip * lp_.objective[j];
      cost[n_ + j] = -cost[j];
    }
    reduced_.assign(cols_, Rational(0));
    for (std::size_t j = 0; j < art_start_; ++j) {
      Rational z = 0;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (basis_[i] < art_start_ && cost[basis_[i]] != 0) {
          z += cost[basis_[i]] * t_[i][j];
        }
      }
      reduced_[j] = cost[j] - z;
    }
    return bland(art_start_, pivots);
  }

  RatVec solution() const {
    RatVec x(n_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < n_) {
        x[basis_[i]] += rhs_[i];
      } else if (basis_[i] < 2 * n_) {
        x[basis_[i] - n_] -= rhs_[i];
      }
    }
    return x;
  }

 private:
  // Bland's rule: entering = lowest eligible column with negative reduced
  // cost; leaving = lowest ratio, ties to the lowest basis index. Returns
  // false when an improving column has no positive entry (unbounded).
  bool bland(std::size_t eligible_cols, long& pivots) {
    for (;;) {
      std::size_t enter = eligible_cols;
      for (std::size_t j = 0; j < eligible_cols; ++j) {
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == eligible_cols) return true;
      std::size_t leave = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        const Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
      if (++pivots > kPivotCap) {
        throw std::logic_error("lp_solve: pivot watchdog tripped");
      }
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = Rational(1) / t_[pr][pc];
    if (inv != 1) {
      for (auto& v : t_[pr]) v *= inv;
      rhs_[pr] *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pr || t_[i][pc] == 0) continue;
      const Rational factor = t_[i][pc];
      for (std::size_t j = 0; j < cols_; ++j) t_[i][j] -= factor * t_[pr][j];
      rhs_[i] -= factor * rhs_[pr];
    }
    if (reduced_[pc] != 0) {
      const Rational factor = reduced_[pc];
      for (std::size_t j = 0; j < cols_; ++j) {
        reduced_[j] -= factor * t_[pr][j];
      }
    }
    basis_[pr] = pc;
  }

  static constexpr long kPivotCap = 2'000'000;

  const LinearProgram& lp_;
  std::size_t n_ = 0, rows_ = 0, cols_ = 0;
  std::size_t slack_start_ = 0, art_start_ = 0;
  RatMat t_;
  RatVec rhs_;
  RatVec reduced_;
  std::vector<std::size_t> basis_;
  std::vector<int> row_sign_;
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  validate(lp);
  LpOutcome out;
  Tableau tab(lp);
  const Rational infeasibility = tab.phase1(out.phase1_pivots);
  if (infeasibility > 0) {
    out.status = LpStatus::Infeasible;
    out.farkas = tab.farkas();
    return out;
  }
  tab.drop_artificials();
  if (lp.sense == Sense::FeasibilityOnly) {
    out.status = LpStatus::Feasible;
    out.solution = tab.solution();
    return out;
  }
  const bool bounded = tab.phase2(out.phase2_pivots);
  out.solution = tab.solution();
  if (!bounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Feasible;
  Rational value = 0;
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    value += lp.objective[j] * out.solution[j];
  }
  out.optimum = value;
  return out;
}

bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome) {
  validate(lp);
  if (outcome.status == LpStatus::Infeasible) {
    if (outcome.farkas.size() != lp.constraints.size()) {
      throw std::invalid_argument(
          "verify_certificate: farkas length != constraint count");
    }
    RatVec combined(lp.num_vars, Rational(0));
    Rational combined_rhs = 0;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
      const Constraint& c = lp.constraints[i];
      const Rational& y = outcome.farkas[i];
      if (c.rel == Relation::LessEq && y < 0) return false;
      if (c.rel == Relation::GreaterEq && y > 0) return false;
      for (std::size_t j = 0; j < lp.num_vars; ++j) {
        combined[j] += y * c.coeffs[j];
      }
      combined_rhs += y * c.rhs;
    }
    for (const auto& coeff : combined) {
      if (coeff != 0) return false;
    }
    return combined_rhs < 0;
  }

  // Feasible or Unbounded: exact re-substitution of the witness point.
  if (outcome.solution.size() != lp.num_vars) {
    throw std::invalid_argument(
        "verify_certificate: solution length != num_vars");
  }
  for (const Constraint& c : lp.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      lhs += c.coeffs[j] * outcome.solution[j];
    }
    const bool ok = c.rel == Relation::LessEq      ? lhs <= c.rhs
                    : c.rel == Relation::GreaterEq ? lhs >= c.rhs
                                                   : lhs == c.rhs;
    if (!ok) return false;
  }
  if (outcome.optimum) {
    if (outcome.status == LpStatus::Unbounded) return false;
    if (lp.objective.size() != lp.num_vars) return false;
    Rational value = 0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      value += lp.objective[j] * outcome.solution[j];
    }
    if (value != *outcome.optimum) return false;
  }
  return true;
}

}  // namespace affsel
