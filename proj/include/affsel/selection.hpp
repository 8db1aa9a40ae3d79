#pragma once

#include <cstdint>
#include <optional>

#include "affsel/lp.hpp"
#include "affsel/multifunction.hpp"
#include "affsel/polytope.hpp"

namespace affsel {

enum class SelectionStatus { Found, NoneExists };

struct SpotCheck {
  RatVec point;
  RatVec value;  // candidate map evaluated at the point
  bool member = false;
};

struct SelectionOutcome {
  SelectionStatus status = SelectionStatus::NoneExists;
  std::optional<AffineMap> map;  // when Found
  /// Farkas multipliers over the rows of the assembled selection LP
  /// (assemble_selection_lp / assemble_sandwich_lp), when NoneExists.
  RatVec certificate;
  std::vector<SpotCheck> verification;
};

/// A globally affine map that selects from F on a closed simplex around an
/// interior point.
struct LocalSelection {
  RatVec center;
  Simplex simplex;
  AffineMap map;
  int shrink_exponent = 0;  // halvings of the simplex scale
};

/// The feasibility LP deciding existence of an affine selection: unknowns
/// are the map entries (A row-major, then b) followed by one combination
/// block per distinct domain vertex, constrained so (v, A v + b) lies in
/// conv(graph) at every such vertex. Convexity of the graph lifts vertex
/// feasibility to all of D.
LinearProgram assemble_selection_lp(const GraphMultifunction& G);

/// Decides the affine selection problem over all of D. Found outcomes carry
/// the canonical map (entries of minimal total absolute value, ties resolved
/// by Bland's rule) and 20 seeded in-domain spot checks; NoneExists outcomes
/// carry a Farkas certificate for assemble_selection_lp(G).
SelectionOutcome global_selection(const GraphMultifunction& G);

/// Constructive local selection at an interior point x0: fits the simplex
/// with vertices x0 + a*e_i and x0 - a*(e_1+...+e_n), halving a from 1 until
/// all vertices land in D (at most 64 halvings), then interpolates the
/// canonical fiber points at its vertices. The returned map selects from F
/// on the whole closed simplex; this is re-verified internally at 100 seeded
/// simplex points. Throws DomainError when x0 is outside D and
/// NotInteriorError when the simplex never fits.
LocalSelection local_selection(const GraphMultifunction& G, const RatVec& x0);

using PointValue = std::pair<RatVec, Rational>;

/// Affine a with a(p) >= v on the lower data and a(q) <= w on the upper
/// data; such a map separates the lower convex envelope from the upper
/// concave envelope everywhere. One LP; certificate on infeasibility.
SelectionOutcome sandwich(const std::vector<PointValue>& lower,
                          const std::vector<PointValue>& upper);

/// The LP behind sandwich(), for certificate verification.
LinearProgram assemble_sandwich_lp(const std::vector<PointValue>& lower,
                                   const std::vector<PointValue>& upper);

struct IntervalSelectionReport {
  SelectionOutcome selection;
  AuditReport intersection;
};

/// Interval data on the line (n = m = 1): affine selection via sandwich on
/// the endpoint data, reported side by side with the intersection audit.
IntervalSelectionReport interval_selection_1d(const SampledMultifunction& M);

struct VerifyFailure {
  RatVec point;
  RatVec value;
};

struct VerifyReport {
  long trials = 0;
  std::vector<VerifyFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Seeded random audit of the defining property f(x) in F(x): draws `trials`
/// convex combinations of the domain vertices and re-checks membership.
VerifyReport verify_selection(const GraphMultifunction& G, const AffineMap& map,
                              long trials, std::uint64_t seed);

}  // namespace affsel
