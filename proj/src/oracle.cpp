#include "colorful/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace colorful {

std::optional<ColorfulChoice> brute_force_choice(const Instance& instance, std::size_t m,
                                                 BruteForceLimits limits) {
  if (m == 0) throw std::invalid_argument("brute_force_choice: m must be positive");
  std::size_t total = 0;
  for (const auto& c : instance.classes()) total += c.points.size();
  if (total > limits.max_total_points || instance.dimension() > limits.max_dimension) {
    throw SizeLimitExceeded("brute_force_choice: instance exceeds the enumeration limits");
  }
  const std::size_t n = instance.num_classes();
  if (n == 0) return std::nullopt;

  // One combination (ascending index list) per class.
  std::vector<std::vector<std::size_t>> combo(n);
  for (std::size_t c = 0; c < n; ++c) {
    combo[c].resize(std::min(m, instance.classes()[c].points.size()));
    std::iota(combo[c].begin(), combo[c].end(), 0);
  }
  auto advance = [&](std::size_t c) {
    auto& idx = combo[c];
    const std::size_t size = instance.classes()[c].points.size();
    const std::size_t r = idx.size();
    for (std::size_t i = r; i-- > 0;) {
      if (idx[i] < size - r + i) {
        ++idx[i];
        for (std::size_t k = i + 1; k < r; ++k) idx[k] = idx[k - 1] + 1;
        return true;
      }
    }
    std::iota(idx.begin(), idx.end(), 0);
    return false;
  };

  for (;;) {
    std::vector<PointRef> refs;
    for (std::size_t c = 0; c < n; ++c)
      for (auto i : combo[c]) refs.push_back({c, i});
    const auto points = gather(instance, refs);
    if (origin_in_hull(points).inside()) return make_choice(std::move(refs));

    // Odometer with the last class varying fastest.
    std::size_t c = n;
    while (c-- > 0) {
      if (advance(c)) break;
      if (c == 0) return std::nullopt;
    }
  }
}

Verification verify_choice(const Instance& instance, const ColorfulChoice& choice,
                           std::size_t m) {
  Verification v;
  v.multiplicity = max_multiplicity(choice, instance);
  if (choice.selections.empty()) return v;
  const auto points = gather(instance, choice.selections);
  v.certificate = origin_in_hull(points);
  v.ok = v.multiplicity <= m && v.certificate.inside() &&
         certificate_valid(points, v.certificate);
  return v;
}

}  // namespace colorful
