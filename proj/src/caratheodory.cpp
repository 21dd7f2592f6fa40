#include "colorful/caratheodory.hpp"

#include "colorful/model.hpp"

namespace colorful {

HullCertificate PruneResult::certificate(std::size_t input_size) const {
  HullCertificate cert;
  cert.kind = HullCertificate::Kind::Inside;
  cert.coefficients.assign(input_size, Rational(0));
  for (std::size_t i = 0; i < indices.size(); ++i) cert.coefficients[indices[i]] = coefficients[i];
  return cert;
}

PruneResult prune_any(std::span<const Vector> points) {
  if (points.empty()) throw std::invalid_argument("prune: no points");
  const auto start = origin_in_hull(points);
  if (!start.inside()) throw std::invalid_argument("prune: origin is outside the hull");

  PruneResult r;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (sgn(start.coefficients[i]) > 0) {
      r.indices.push_back(i);
      r.coefficients.push_back(start.coefficients[i]);
    }
  }

  // Eliminate affine dependences among the support until none is left.
  for (;;) {
    std::vector<Vector> lifted;
    lifted.reserve(r.indices.size());
    for (auto i : r.indices) lifted.push_back(lift(points[i]));
    const auto gamma = null_space_vector(lifted);
    if (!gamma) break;

    // sum(gamma) = 0 and gamma != 0, so some entry is positive.
    std::size_t hit = r.indices.size();
    Rational step;
    for (std::size_t i = 0; i < gamma->size(); ++i) {
      if (sgn((*gamma)[i]) <= 0) continue;
      Rational ratio = r.coefficients[i] / (*gamma)[i];
      if (hit == r.indices.size() || ratio < step) {
        step = std::move(ratio);
        hit = i;
      }
    }
    PruneResult next;
    for (std::size_t i = 0; i < r.indices.size(); ++i) {
      Rational c = r.coefficients[i] - step * (*gamma)[i];
      if (i == hit || sgn(c) == 0) continue;
      next.indices.push_back(r.indices[i]);
      next.coefficients.push_back(std::move(c));
    }
    r = std::move(next);
  }
  return r;
}

PruneResult prune(std::span<const Vector> points) {
  if (points.empty()) throw std::invalid_argument("prune: no points");
  const std::size_t d = points.front().dim();
  if (points.size() > 4 * (d + 1)) {
    throw std::invalid_argument("prune: " + std::to_string(points.size()) +
                                " points exceed the 4(d+1) bound");
  }
  return prune_any(points);
}

RepairResult perturb_into_general_position(std::span<const Vector> points) {
  if (points.empty()) throw std::invalid_argument("perturb: no points");
  const std::size_t d = points.front().dim();
  const std::size_t n = points.size();

  Rational smallest = 0;
  for (const auto& p : points) {
    for (const auto& x : p) {
      const Rational a = abs(x);
      if (sgn(a) > 0 && (sgn(smallest) == 0 || a < smallest)) smallest = a;
    }
  }
  if (sgn(smallest) == 0) smallest = 1;
  // n^d bounds the largest perturbation coordinate.
  mpz_class scale = 1;
  for (std::size_t k = 0; k < d; ++k) scale *= static_cast<unsigned long>(n);
  Rational delta = smallest / Rational(2 * scale);

  for (int attempt = 0; attempt <= 20; ++attempt, delta /= 2) {
    std::vector<Vector> moved;
    moved.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Vector q = points[i];
      mpz_class power = 1;
      for (std::size_t k = 0; k < d; ++k) {
        power *= static_cast<unsigned long>(i + 1);
        q[k] += delta * Rational(power);
      }
      moved.push_back(std::move(q));
    }
    if (origin_in_hull(moved).inside() && check_general_position(moved).ok) {
      RepairResult r;
      r.points = std::move(moved);
      for (std::size_t i = 0; i < n; ++i) r.indices.push_back(i);
      r.perturbed = true;
      r.delta = delta;
      return r;
    }
  }
  throw DegenerateInstance("no perturbation in the schedule restores general position");
}

RepairResult repair_general_position(std::span<const Vector> points) {
  if (points.empty()) throw std::invalid_argument("repair: no points");
  if (!origin_in_hull(points).inside()) {
    throw std::invalid_argument("repair: origin is outside the hull");
  }
  RepairResult r;
  if (check_general_position(points).ok) {
    r.points.assign(points.begin(), points.end());
    for (std::size_t i = 0; i < points.size(); ++i) r.indices.push_back(i);
    return r;
  }
  const auto pruned = prune_any(points);
  std::vector<Vector> subset;
  for (auto i : pruned.indices) subset.push_back(points[i]);
  if (check_general_position(subset).ok) {
    r.points = std::move(subset);
    r.indices = pruned.indices;
    r.pruned = true;
    return r;
  }
  auto perturbed = perturb_into_general_position(subset);
  for (auto& i : perturbed.indices) i = pruned.indices[i];
  perturbed.pruned = true;
  return perturbed;
}

}  // namespace colorful
