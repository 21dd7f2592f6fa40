#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorful/numeric.hpp"

namespace colorful {

/// Raised when an instance is too degenerate for an exact repair.
class DegenerateInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of the input (ascending indices) together with strictly positive
/// convex weights of the origin over that subset.
struct PruneResult {
  std::vector<std::size_t> indices;
  std::vector<Rational> coefficients;

  /// Certificate over the full input list (zero weight off the subset).
  HullCertificate certificate(std::size_t input_size) const;
};

/// Constructive Caratheodory: reduces a point set whose hull contains the
/// origin to at most d+1 affinely independent points, all with positive
/// weight. Such a subset is in general position.
///
/// Throws std::invalid_argument when the origin is outside the hull or the
/// set has more than 4(d+1) points.
PruneResult prune(std::span<const Vector> points);

/// prune() without the size bound; algorithms use this on projected classes
/// whose size is only bounded by the ambient dimension.
PruneResult prune_any(std::span<const Vector> points);

struct RepairResult {
  std::vector<Vector> points;          // repaired set
  std::vector<std::size_t> indices;    // source index of each output point
  bool pruned = false;                 // a proper subset was taken
  bool perturbed = false;              // coordinates were modified
  Rational delta;                      // perturbation scale when perturbed
};

/// Returns the input untouched when it is already in general position.
/// Otherwise prunes (which keeps exact input points), and only if that still
/// fails applies p_i + delta * (i, i^2, ..., i^d) with delta halved up to 20
/// times until origin containment and general position both hold.
///
/// Throws DegenerateInstance when no delta in the schedule works, and
/// std::invalid_argument when the origin is not in the hull.
RepairResult repair_general_position(std::span<const Vector> points);

/// The perturbation step on its own: first delta in the schedule for which
/// the perturbed set contains the origin and is in general position.
RepairResult perturb_into_general_position(std::span<const Vector> points);

}  // namespace colorful
