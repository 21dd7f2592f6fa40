#pragma once

// Test-only reference implementations. None of these call into the
// library's LP, Wolfe or enumeration code; they share only the Rational and
// Vector types, so a bug in the library cannot hide behind the same bug in
// its checker.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "colorful/generate.hpp"
#include "colorful/model.hpp"
#include "colorful/reductions.hpp"

namespace oracle {

using colorful::Rational;
using colorful::Vector;

/// Unique solution of A x = b (A given as rows) or nullopt when A has
/// dependent columns or the system is inconsistent. Plain Gauss-Jordan.
std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

/// Origin in conv(points), decided by trying every subset of at most d+1
/// points for nonnegative barycentric coordinates of the origin.
bool origin_in_hull(std::span<const Vector> points);

/// v in pos(generators), by the same subset enumeration over linearly
/// independent subsets of at most d generators.
bool in_cone(std::span<const Vector> generators, const Vector& v);

struct Nearest {
  Rational squared_distance;
  Vector point;
};

/// Minimum-norm point of conv(points): for every affinely independent
/// subset, the nearest point of its affine hull (via the KKT system) is a
/// candidate when its weights are nonnegative; the smallest candidate wins.
Nearest min_norm_point(std::span<const Vector> points);

/// Recursive enumeration of choices taking exactly min(m, |P_i|) points
/// from each class, in the order a nested loop over classes (last class
/// innermost) and ascending combinations produces them.
std::optional<std::vector<colorful::PointRef>> first_choice(const colorful::Instance& instance,
                                                            std::size_t m);

/// Smallest squared distance over all perfect colorful choices, by nested
/// loops and the face-enumeration nearest point.
Rational nested_global_minimum(const colorful::Instance& instance);

/// The reduction points written out directly from their definitions.
/// Class order: variables, then h_1..h_{d+1}, then h'_1..h'_d if `global`.
std::vector<std::vector<Vector>> reference_reduction(const colorful::WeightedFormula& formula,
                                                     bool global);

long unsatisfied_weight(const colorful::WeightedFormula& formula,
                        const std::vector<int>& assignment);

/// No single variable flip strictly lowers the unsatisfied weight.
bool flip_local_optimum(const colorful::WeightedFormula& formula,
                        const std::vector<int>& assignment);

/// Some assignment satisfies every clause.
bool satisfiable(const colorful::WeightedFormula& formula);

/// Random integer vector with coordinates in [-range, range].
Vector random_vector(colorful::SplitMix64& rng, std::size_t dim, long range);

}  // namespace oracle
