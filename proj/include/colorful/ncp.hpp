#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "colorful/model.hpp"

namespace colorful {

/// A perfect colorful choice of an NCP instance: picks[c] is the selected
/// point index of class c.
using Picks = std::vector<std::size_t>;

ColorfulChoice to_choice(std::span<const std::size_t> picks);

/// Picks of a choice with exactly one point from every class. Throws
/// std::invalid_argument otherwise.
Picks to_picks(const ColorfulChoice& choice, const Instance& instance);

/// Squared distance from the origin to the hull of the selected points.
Rational ncp_cost(const Instance& instance, std::span<const std::size_t> picks);
Rational ncp_cost(const ColorfulChoice& choice, const Instance& instance);

enum class Pivot { First, Best };

struct Swap {
  std::size_t color = 0;
  std::size_t out_index = 0;
  std::size_t in_index = 0;
  Rational cost;  // squared cost after the swap
};

/// One improving single-point swap, or nullopt at a local optimum (or when
/// the origin is already inside).
///
/// First pivot: classes whose selected point carries zero weight in the
/// nearest point x are scanned first for a point p' with <x, p'> < |x|^2 (any
/// such point strictly improves); if there is none, every swap is scanned
/// in (class, index) order and the first strict improvement wins.
/// Best pivot: the full neighborhood is scanned and the lowest cost wins,
/// ties to the lowest (class, index).
std::optional<Swap> local_search_step(const Instance& instance,
                                      std::span<const std::size_t> picks,
                                      Pivot pivot = Pivot::First);

struct LocalSearchTrace {
  Picks initial;
  Picks final;
  std::vector<Swap> steps;
  Rational initial_cost;
  Rational final_cost;
};

struct LocalSearchOptions {
  std::size_t max_steps = 1'000'000;
  Pivot pivot = Pivot::First;
};

class StepLimitExceeded : public std::runtime_error {
 public:
  StepLimitExceeded(LocalSearchTrace partial)
      : std::runtime_error("local search step limit exceeded"), partial_(std::move(partial)) {}
  const LocalSearchTrace& partial() const { return partial_; }

 private:
  LocalSearchTrace partial_;
};

/// Iterates local_search_step from `start` (index 0 of every class when
/// absent) until no swap improves.
LocalSearchTrace local_search(const Instance& instance,
                              std::optional<Picks> start = std::nullopt,
                              LocalSearchOptions options = {});

struct GlobalOptimum {
  Picks picks;
  Rational squared_distance;
  std::size_t evaluated = 0;
};

/// Exhaustive minimum over all perfect colorful choices; the
/// lexicographically first optimum wins (the scan stops at the first zero).
/// Throws SizeLimitExceeded when the product of class sizes exceeds `limit`.
GlobalOptimum global_optimum(const Instance& instance, std::size_t limit = 1'000'000);

}  // namespace colorful
