#include "colorful/generate.hpp"

#include <stdexcept>
#include <utility>

namespace colorful {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long SplitMix64::uniform(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

namespace {

constexpr long kMaxCoordinate = 1L << 16;

Vector random_point(SplitMix64& rng, std::size_t d, long range) {
  Vector p(d);
  for (std::size_t k = 0; k < d; ++k) p[k] = rng.uniform(-range, range);
  return p;
}

std::vector<Vector> centered_simplex(SplitMix64& rng, std::size_t d, long range) {
  for (;;) {
    std::vector<Vector> pts;
    std::vector<Vector> lifted;
    for (std::size_t i = 0; i <= d; ++i) {
      pts.push_back(random_point(rng, d, range));
      lifted.push_back(lift(pts.back()));
    }
    if (span_dimension(lifted, d + 1) != d + 1) continue;
    Vector sum(d);
    for (const auto& p : pts) sum += p;
    const Rational scale = static_cast<long>(d + 1);
    for (auto& p : pts) p = scale * p - sum;
    return pts;
  }
}

}  // namespace

Instance generate_instance(const GenerateOptions& o) {
  if (o.dimension == 0) throw std::invalid_argument("generate: dimension must be positive");
  if (o.classes == 0) throw std::invalid_argument("generate: need at least one class");
  if (o.range < 1) throw std::invalid_argument("generate: range must be positive");
  if (o.kind == InstanceKind::Caratheodory && o.points_per_class < o.dimension + 1) {
    throw std::invalid_argument("generate: caratheodory classes need at least d+1 points");
  }
  if (o.points_per_class == 0) throw std::invalid_argument("generate: empty classes");
  const long extra_range = o.range * static_cast<long>(o.dimension + 1);
  if (2 * extra_range > kMaxCoordinate) {
    throw std::invalid_argument("generate: coordinates would exceed 2^16");
  }

  SplitMix64 rng(o.seed);
  std::vector<ColorClass> classes;
  for (std::size_t c = 0; c < o.classes; ++c) {
    std::vector<Vector> pts;
    if (o.kind == InstanceKind::Caratheodory) {
      pts = centered_simplex(rng, o.dimension, o.range);
      while (pts.size() < o.points_per_class)
        pts.push_back(random_point(rng, o.dimension, extra_range));
      for (std::size_t i = pts.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1));
        std::swap(pts[i - 1], pts[j]);
      }
    } else {
      for (std::size_t i = 0; i < o.points_per_class; ++i)
        pts.push_back(random_point(rng, o.dimension, o.range));
    }
    classes.push_back({static_cast<int>(c), std::move(pts)});
  }
  return Instance(o.dimension, std::move(classes), o.kind);
}

}  // namespace colorful
