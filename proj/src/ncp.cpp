#include "colorful/ncp.hpp"

#include "colorful/oracle.hpp"

namespace colorful {

namespace {

std::vector<Vector> picked_points(const Instance& instance, std::span<const std::size_t> picks) {
  if (picks.size() != instance.num_classes()) {
    throw std::invalid_argument("ncp: need one pick per class");
  }
  std::vector<Vector> out;
  out.reserve(picks.size());
  for (std::size_t c = 0; c < picks.size(); ++c) {
    const auto& points = instance.classes()[c].points;
    if (picks[c] >= points.size()) throw std::out_of_range("ncp: pick out of range");
    out.push_back(points[picks[c]]);
  }
  return out;
}

// Cost after replacing the point of class c by candidate i.
Rational swapped_cost(const Instance& instance, std::vector<Vector>& points, std::size_t c,
                      std::size_t i) {
  Vector saved = points[c];
  points[c] = instance.classes()[c].points[i];
  Rational cost = min_norm_point(points).squared_distance;
  points[c] = std::move(saved);
  return cost;
}

}  // namespace

ColorfulChoice to_choice(std::span<const std::size_t> picks) {
  std::vector<PointRef> refs;
  for (std::size_t c = 0; c < picks.size(); ++c) refs.push_back({c, picks[c]});
  return make_choice(std::move(refs));
}

Picks to_picks(const ColorfulChoice& choice, const Instance& instance) {
  Picks picks(instance.num_classes(), 0);
  std::vector<int> seen(instance.num_classes(), 0);
  for (const auto& r : choice.selections) {
    if (r.color >= instance.num_classes() ||
        r.index >= instance.classes()[r.color].points.size()) {
      throw std::invalid_argument("to_picks: invalid reference");
    }
    ++seen[r.color];
    picks[r.color] = r.index;
  }
  for (auto s : seen) {
    if (s != 1) throw std::invalid_argument("to_picks: not a perfect colorful choice");
  }
  return picks;
}

Rational ncp_cost(const Instance& instance, std::span<const std::size_t> picks) {
  return min_norm_point(picked_points(instance, picks)).squared_distance;
}

Rational ncp_cost(const ColorfulChoice& choice, const Instance& instance) {
  const auto picks = to_picks(choice, instance);
  return ncp_cost(instance, picks);
}

std::optional<Swap> local_search_step(const Instance& instance,
                                      std::span<const std::size_t> picks, Pivot pivot) {
  auto points = picked_points(instance, picks);
  const auto nearest = min_norm_point(points);
  if (sgn(nearest.squared_distance) == 0) return std::nullopt;

  if (pivot == Pivot::First) {
    // Candidates beyond the hyperplane through x orthogonal to x.
    for (std::size_t c = 0; c < points.size(); ++c) {
      if (sgn(nearest.coefficients[c]) != 0) continue;
      const auto& cls = instance.classes()[c].points;
      for (std::size_t i = 0; i < cls.size(); ++i) {
        if (i == picks[c] || dot(nearest.point, cls[i]) >= nearest.squared_distance) continue;
        Rational cost = swapped_cost(instance, points, c, i);
        if (cost < nearest.squared_distance) return Swap{c, picks[c], i, std::move(cost)};
      }
    }
  }

  // A candidate with <x, p'> >= |x|^2 keeps every point in that halfspace,
  // so it cannot lower the cost and needs no hull computation.
  std::optional<Swap> best;
  for (std::size_t c = 0; c < points.size(); ++c) {
    const auto& cls = instance.classes()[c].points;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i == picks[c] || dot(nearest.point, cls[i]) >= nearest.squared_distance) continue;
      Rational cost = swapped_cost(instance, points, c, i);
      if (cost >= nearest.squared_distance) continue;
      if (pivot == Pivot::First) return Swap{c, picks[c], i, std::move(cost)};
      if (!best || cost < best->cost) best = Swap{c, picks[c], i, std::move(cost)};
    }
  }
  return best;
}

LocalSearchTrace local_search(const Instance& instance, std::optional<Picks> start,
                              LocalSearchOptions options) {
  LocalSearchTrace trace;
  trace.initial = start ? *start : Picks(instance.num_classes(), 0);
  trace.initial_cost = ncp_cost(instance, trace.initial);
  trace.final = trace.initial;
  trace.final_cost = trace.initial_cost;
  for (;;) {
    auto step = local_search_step(instance, trace.final, options.pivot);
    if (!step) return trace;
    if (trace.steps.size() >= options.max_steps) throw StepLimitExceeded(std::move(trace));
    trace.final[step->color] = step->in_index;
    trace.final_cost = step->cost;
    trace.steps.push_back(std::move(*step));
  }
}

GlobalOptimum global_optimum(const Instance& instance, std::size_t limit) {
  const std::size_t n = instance.num_classes();
  if (n == 0) throw std::invalid_argument("global_optimum: no classes");
  std::size_t product = 1;
  for (const auto& c : instance.classes()) {
    if (c.points.empty()) throw std::invalid_argument("global_optimum: empty class");
    if (product > limit / c.points.size()) {
      throw SizeLimitExceeded("global_optimum: search space exceeds the limit");
    }
    product *= c.points.size();
  }
  if (product > limit) throw SizeLimitExceeded("global_optimum: search space exceeds the limit");

  GlobalOptimum best;
  Picks picks(n, 0);
  for (;;) {
    Rational cost = ncp_cost(instance, picks);
    ++best.evaluated;
    if (best.picks.empty() || cost < best.squared_distance) {
      best.picks = picks;
      best.squared_distance = std::move(cost);
      if (sgn(best.squared_distance) == 0) return best;
    }
    std::size_t c = n;
    for (;;) {
      if (c == 0) return best;
      --c;
      if (++picks[c] < instance.classes()[c].points.size()) break;
      picks[c] = 0;
    }
  }
}

}  // namespace colorful
