#pragma once

#include <cstdint>

#include "colorful/model.hpp"

namespace colorful {

/// splitmix64: state += 0x9e3779b97f4a7c15, then two xor-shift-multiply
/// rounds. Small, seedable, and identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform integer in [lo, hi] (rejection sampling, no modulo bias).
  long uniform(long lo, long hi);

 private:
  std::uint64_t state_;
};

struct GenerateOptions {
  std::uint64_t seed = 1;
  std::size_t dimension = 2;
  std::size_t classes = 3;
  std::size_t points_per_class = 3;
  InstanceKind kind = InstanceKind::Caratheodory;
  long range = 10;  // base coordinate range [-range, range]
};

/// Caratheodory kind: each class starts from d+1 affinely independent
/// integer points p_i moved to (d+1) p_i - sum p so their centroid is the
/// origin, followed by extra integer points, then shuffled. NCP kind: plain
/// uniform integer points. Throws std::invalid_argument on bad parameters.
Instance generate_instance(const GenerateOptions& options);

}  // namespace colorful
