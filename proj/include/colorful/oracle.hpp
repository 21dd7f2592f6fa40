#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "colorful/model.hpp"

namespace colorful {

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteForceLimits {
  std::size_t max_total_points = 40;
  std::size_t max_dimension = 8;
};

/// Exhaustive search for a choice with at most m points per class whose hull
/// contains the origin. Every class contributes exactly min(m, |P_i|)
/// points (supersets keep the origin, so nothing is lost); combinations are
/// visited in lexicographic order and the first hit is returned.
std::optional<ColorfulChoice> brute_force_choice(const Instance& instance, std::size_t m,
                                                 BruteForceLimits limits = {});

struct Verification {
  bool ok = false;
  std::size_t multiplicity = 0;
  HullCertificate certificate;
};

/// max_multiplicity <= m and origin inside the selected points' hull.
Verification verify_choice(const Instance& instance, const ColorfulChoice& choice,
                           std::size_t m);

}  // namespace colorful
