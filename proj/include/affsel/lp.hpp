#pragma once

#include <optional>

#include "affsel/rational.hpp"

namespace affsel {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { FeasibilityOnly, Minimize, Maximize };
enum class LpStatus { Feasible, Infeasible, Unbounded };

struct Constraint {
  RatVec coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

/// General-form LP over free variables. Nonnegativity, when wanted, is an
/// explicit constraint row.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Constraint> constraints;
  RatVec objective;  // empty unless optimizing
  Sense sense = Sense::FeasibilityOnly;
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  /// Exact feasible point (present for Feasible; for Unbounded it is the
  /// basic feasible point at which the improving ray was detected).
  RatVec solution;
  std::optional<Rational> optimum;  // optimizing and bounded only
  /// Farkas multipliers, one per constraint, present when Infeasible:
  /// >= 0 on LessEq rows, <= 0 on GreaterEq rows, free on Equal rows;
  /// they combine the rows to 0 = (something strictly negative).
  RatVec farkas;
  // Pivot counts, for termination diagnostics.
  long phase1_pivots = 0;
  long phase2_pivots = 0;
};

/// Exact two-phase simplex with Bland's pivoting rule. Deterministic: a
/// fixed input always yields the identical outcome. Throws
/// std::invalid_argument on malformed input (row-length mismatch).
LpOutcome lp_solve(const LinearProgram& lp);

/// Independent re-check of an outcome against its LP: exact re-substitution
/// for Feasible/Unbounded (including the claimed optimum, when present) and
/// the Farkas sign/combination conditions for Infeasible. Throws
/// std::invalid_argument when sizes do not match the program.
bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome);

}  // namespace affsel
