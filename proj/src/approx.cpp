#include "colorful/approx.hpp"

#include <algorithm>
#include <stdexcept>

#include "colorful/caratheodory.hpp"
#include "colorful/ncp.hpp"
#include "colorful/oracle.hpp"

namespace colorful {

namespace {

struct PrunedSet {
  std::vector<std::size_t> indices;
  std::vector<Vector> points;
  std::vector<Rational> weights;
};

PrunedSet prune_set(std::span<const Vector> points) {
  auto r = prune_any(points);
  PrunedSet out;
  for (auto i : r.indices) out.points.push_back(points[i]);
  out.indices = std::move(r.indices);
  out.weights = std::move(r.coefficients);
  return out;
}

std::vector<std::size_t> range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(i);
  return out;
}

long ceil_div(long a, long b) { return (a + b - 1) / b; }

long ceil_rational(const Rational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

Rational power(const Rational& base, std::size_t exponent) {
  Rational out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

// A class as seen at one recursion level: its position in the caller's
// instance and its points in the level's coordinates.
struct LevelClass {
  std::size_t color = 0;
  std::vector<Vector> points;
};

std::vector<Vector> level_points(const std::vector<LevelClass>& classes,
                                 std::span<const PointRef> refs) {
  std::vector<Vector> out;
  out.reserve(refs.size());
  for (const auto& r : refs) out.push_back(classes[r.color].points[r.index]);
  return out;
}

std::vector<PointRef> to_top(const std::vector<LevelClass>& classes,
                             std::span<const PointRef> refs) {
  std::vector<PointRef> out;
  for (const auto& r : refs) out.push_back({classes[r.color].color, r.index});
  return out;
}

std::vector<LevelClass> top_level(const Instance& instance, std::size_t count) {
  std::vector<LevelClass> out;
  for (std::size_t c = 0; c < count; ++c) out.push_back({c, instance.classes()[c].points});
  return out;
}

}  // namespace

Vector line_in_cone(std::span<const Vector> points, std::span<const Rational> weights,
                    std::span<const std::size_t> part1) {
  if (points.empty()) throw std::invalid_argument("line_in_cone: empty set");
  if (weights.size() != points.size()) {
    throw std::invalid_argument("line_in_cone: weight count mismatch");
  }
  std::vector<Vector> chosen;
  std::vector<Rational> w;
  for (auto i : part1) {
    if (i >= points.size()) throw std::invalid_argument("line_in_cone: index out of range");
    chosen.push_back(points[i]);
    w.push_back(weights[i]);
  }
  return combination(chosen, w, points.front().dim());
}

Vector line_in_cone(std::span<const Vector> points, std::span<const std::size_t> part1,
                    std::span<const std::size_t> part2) {
  if (points.size() < 2) throw std::invalid_argument("line_in_cone: need at least two points");
  const std::size_t d = points.front().dim();
  if (points.size() > d + 1) throw std::invalid_argument("line_in_cone: more than d+1 points");
  if (part1.empty() || part2.empty()) throw std::invalid_argument("line_in_cone: empty part");
  std::vector<int> seen(points.size(), 0);
  for (auto i : part1) {
    if (i >= points.size()) throw std::invalid_argument("line_in_cone: index out of range");
    ++seen[i];
  }
  for (auto i : part2) {
    if (i >= points.size()) throw std::invalid_argument("line_in_cone: index out of range");
    ++seen[i];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    throw std::invalid_argument("line_in_cone: parts do not partition the set");
  }
  if (!check_general_position(points).ok) {
    throw std::invalid_argument("line_in_cone: set is not in general position");
  }
  const auto cert = origin_in_hull(points);
  if (!cert.inside()) throw std::invalid_argument("line_in_cone: origin outside the hull");
  return line_in_cone(points, cert.coefficients, part1);
}

Representatives representatives(std::span<const Vector> points,
                                std::span<const Rational> weights,
                                std::vector<std::vector<std::size_t>> partition) {
  if (points.empty()) throw std::invalid_argument("representatives: empty set");
  if (weights.size() != points.size()) {
    throw std::invalid_argument("representatives: weight count mismatch");
  }
  const std::size_t m = partition.size();
  if (m < 2) throw std::invalid_argument("representatives: need at least two parts");
  const std::size_t d = points.front().dim();

  std::vector<int> seen(points.size(), 0);
  for (const auto& part : partition) {
    if (part.empty()) throw std::invalid_argument("representatives: empty part");
    for (auto i : part) {
      if (i >= points.size()) throw std::invalid_argument("representatives: index out of range");
      ++seen[i];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    throw std::invalid_argument("representatives: parts do not partition the set");
  }
  for (const auto& w : weights) {
    if (sgn(w) <= 0) throw std::invalid_argument("representatives: weights must be positive");
  }
  if (!combination(points, weights, d).is_zero()) {
    throw std::invalid_argument("representatives: weights do not combine to the origin");
  }

  Representatives r;
  r.weights.assign(weights.begin(), weights.end());
  for (const auto& part : partition) {
    r.reps.push_back(line_in_cone(points, weights, part));
    if (r.reps.back().is_zero()) {
      throw std::invalid_argument("representatives: a representative is the origin");
    }
  }
  if (!origin_in_hull(r.reps).inside()) {
    throw std::invalid_argument("representatives: origin outside conv(reps)");
  }
  if (span_dimension(r.reps, d) != m - 1) {
    throw std::invalid_argument("representatives: span dimension is not m-1");
  }
  r.partition = std::move(partition);
  return r;
}

Representatives representatives(std::span<const Vector> points,
                                std::vector<std::vector<std::size_t>> partition) {
  if (!check_general_position(points).ok) {
    throw std::invalid_argument("representatives: set is not in general position");
  }
  const auto cert = origin_in_hull(points);
  if (!cert.inside()) throw std::invalid_argument("representatives: origin outside the hull");
  return representatives(points, cert.coefficients, std::move(partition));
}

Replacement replace_representative(std::span<const Vector> reps,
                                   std::span<const Vector> q_points) {
  if (reps.size() < 2) throw std::invalid_argument("replace_representative: need two reps");
  if (q_points.empty()) throw std::invalid_argument("replace_representative: Q is empty");
  const std::size_t d = reps.front().dim();

  const auto cert = origin_in_hull(complement_coordinates(q_points, reps));
  if (!cert.inside()) {
    throw std::invalid_argument(
        "replace_representative: projection of Q does not contain the origin");
  }

  Replacement out;
  out.q_weights = cert.coefficients;
  out.q = combination(q_points, cert.coefficients, d);
  const Vector target = -out.q;

  for (std::size_t j = 0; j < reps.size(); ++j) {
    std::vector<Vector> others;
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (i != j) others.push_back(reps[i]);
    const auto alpha = solve_linear(Matrix::from_columns(others, d), target);
    if (!alpha) continue;
    if (std::any_of(alpha->begin(), alpha->end(), [](const Rational& a) { return sgn(a) < 0; }))
      continue;

    std::vector<Vector> check(q_points.begin(), q_points.end());
    check.insert(check.end(), others.begin(), others.end());
    if (!origin_in_hull(check).inside()) continue;

    out.index = j;
    out.alphas = alpha->coords();
    return out;
  }
  throw std::invalid_argument("replace_representative: no representative can be replaced");
}

std::vector<PointRef> select_by_kernel(std::span<const SplitSet> sets) {
  if (sets.empty()) throw std::invalid_argument("select_by_kernel: no sets");
  std::vector<Vector> vs;
  for (const auto& s : sets) vs.push_back(s.v);
  const auto mu = null_space_vector(vs);
  if (!mu) throw std::invalid_argument("select_by_kernel: vectors are linearly independent");
  std::vector<PointRef> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& part = sgn((*mu)[i]) > 0 ? sets[i].part1 : sets[i].part2;
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool hull_meets_ray(std::span<const Vector> points, const Vector& v) {
  if (points.empty()) throw std::invalid_argument("hull_meets_ray: no points");
  const Vector basis[] = {v};
  const auto cert = origin_in_hull(complement_coordinates(points, basis));
  if (!cert.inside()) {
    throw std::invalid_argument("hull_meets_ray: projected hull misses the origin");
  }
  const Vector x = combination(points, cert.coefficients, v.dim());
  return sgn(dot(x, v)) >= 0;
}

ColorfulChoice half_linalg(const Instance& instance) {
  const std::size_t d = instance.dimension();
  if (instance.num_classes() < d + 1) {
    throw std::invalid_argument("half_linalg: needs d+1 classes");
  }
  std::vector<SplitSet> sets;
  for (std::size_t c = 0; c <= d; ++c) {
    const auto pruned = prune_set(instance.classes()[c].points);
    if (pruned.indices.size() == 1) return make_choice({{c, pruned.indices.front()}});

    const std::size_t half = pruned.indices.size() / 2;
    SplitSet s;
    const auto part1 = range(0, half);
    for (std::size_t i = 0; i < pruned.indices.size(); ++i) {
      (i < half ? s.part1 : s.part2).push_back({c, pruned.indices[i]});
    }
    s.v = line_in_cone(pruned.points, pruned.weights, part1);
    sets.push_back(std::move(s));
  }
  return make_choice(select_by_kernel(sets));
}

namespace {

std::vector<PointRef> dimreduce(std::vector<LevelClass> classes) {
  const auto first = prune_set(classes.front().points);
  auto refs_of = [&](std::size_t begin, std::size_t end) {
    std::vector<PointRef> out;
    for (std::size_t i = begin; i < end; ++i) out.push_back({0, first.indices[i]});
    return out;
  };
  const std::size_t s = first.indices.size();
  if (classes.size() == 1 || s == 1) return to_top(classes, refs_of(0, s));

  const std::size_t half = s / 2;
  const auto part1 = range(0, half);
  const Vector v = primitive(line_in_cone(first.points, first.weights, part1));
  const Vector basis[] = {v};

  std::vector<LevelClass> rest;
  for (std::size_t c = 1; c < classes.size(); ++c) {
    auto reduced = complement_coordinates(classes[c].points, basis);
    for (auto& p : reduced) p = primitive(p);
    rest.push_back({c, std::move(reduced)});
  }
  // The recursion reports positions in `classes`, since `rest` records them.
  const auto inner = dimreduce(std::move(rest));
  const auto inner_points = level_points(classes, inner);

  auto out = to_top(classes, inner);
  const auto side = hull_meets_ray(inner_points, v) ? refs_of(half, s) : refs_of(0, half);
  const auto lifted = to_top(classes, side);
  out.insert(out.end(), lifted.begin(), lifted.end());
  return out;
}

}  // namespace

ColorfulChoice half_dimreduce(const Instance& instance) {
  const std::size_t d = instance.dimension();
  const std::size_t needed = d / 2 + 1;
  if (instance.num_classes() < needed) {
    throw std::invalid_argument("half_dimreduce: needs floor(d/2)+1 classes");
  }
  return make_choice(dimreduce(top_level(instance, needed)));
}

std::vector<std::string> check_feasible(const ParameterFunctions& params, std::size_t d,
                                        std::size_t max_depth) {
  std::vector<std::string> out;
  const auto& M = params.M;
  const auto& D = params.D;
  if (M.empty() || M.size() != D.size()) {
    out.push_back("M and D must be tabulated for the same nonempty depth range");
    return out;
  }
  const std::size_t depths = std::min(M.size(), max_depth + 1);
  for (std::size_t j = 0; j < M.size(); ++j) {
    if (M[j] < 1 || D[j] < 1) {
      out.push_back("depth " + std::to_string(j) + ": M and D must be positive");
    }
  }
  for (std::size_t j = 0; j + 1 < M.size(); ++j) {
    if (M[j + 1] >= M[j]) out.push_back("M is not strictly decreasing at depth " + std::to_string(j));
    if (D[j + 1] >= D[j]) out.push_back("D is not strictly decreasing at depth " + std::to_string(j));
  }
  if (D[0] != static_cast<long>(d)) {
    out.push_back("D(0) = " + std::to_string(D[0]) + " differs from d = " + std::to_string(d));
  }
  for (std::size_t j = 0; j < depths; ++j) {
    if (D[j] <= params.d0 || M[j] >= D[j] + 1) continue;
    if (j + 1 >= M.size()) {
      out.push_back("depth " + std::to_string(j) + " recurses but depth " +
                    std::to_string(j + 1) + " is not tabulated");
      continue;
    }
    const long gap = M[j] - M[j + 1];
    if (gap <= 0) continue;  // already reported
    const long heavy = (D[j] + 1) / gap;
    const long drop = D[j] - D[j + 1];
    if (heavy > drop) {
      out.push_back("depth " + std::to_string(j) + ": floor((D+1)/(M(j)-M(j+1))) = " +
                    std::to_string(heavy) + " exceeds D(j)-D(j+1) = " + std::to_string(drop));
    }
    if (drop > M[j]) {
      out.push_back("depth " + std::to_string(j) + ": D(j)-D(j+1) = " + std::to_string(drop) +
                    " exceeds M(j) = " + std::to_string(M[j]));
    }
  }
  return out;
}

Rational sqrt_lower_bound(const Rational& x, unsigned bits) {
  if (sgn(x) < 0) throw std::invalid_argument("sqrt_lower_bound: negative argument");
  // floor(sqrt(x * 4^bits)) / 2^bits, where the inner floor of x * 4^bits
  // does not change the integer square root.
  mpz_class scale = 1;
  scale <<= 2 * bits;
  Rational scaled = x * Rational(scale);
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), whole.get_mpz_t());
  mpz_class denom = 1;
  denom <<= bits;
  Rational out(root, denom);
  out.canonicalize();
  return out;
}

ParameterFunctions epsilon_params(std::size_t d, const Rational& epsilon) {
  if (sgn(epsilon) <= 0 || epsilon >= 1) {
    throw std::invalid_argument("epsilon_params: epsilon must lie in (0, 1)");
  }
  ParameterFunctions p;
  const Rational eps3 = epsilon * epsilon * epsilon;
  p.d0 = std::max(ceil_rational(Rational(4) * (1 + epsilon) / eps3), 8L);
  const Rational keep = 1 - epsilon;
  const Rational n = static_cast<long>(d + 1);
  for (std::size_t j = 0;; ++j) {
    const Rational shrink = power(keep, j);
    const Rational s = j % 2 == 0 ? power(keep, j / 2) : sqrt_lower_bound(shrink, 20);
    const long m = ceil_rational(epsilon * s * n);
    const long dim = ceil_rational(shrink * n) - 1;
    p.M.push_back(m);
    p.D.push_back(dim);
    if (dim <= p.d0 || m >= dim + 1) break;
  }
  const auto violations = check_feasible(p, d, p.depths());
  if (!violations.empty()) {
    throw std::logic_error("epsilon_params: infeasible parameters: " + violations.front());
  }
  return p;
}

namespace {

class Rebalancer {
 public:
  Rebalancer(const ParameterFunctions& params, RebalanceOptions options)
      : params_(params), options_(options) {}

  // Returns references into `classes` (positions, point indices).
  std::vector<PointRef> solve(const std::vector<LevelClass>& classes, std::size_t depth) {
    stats.max_depth = std::max(stats.max_depth, depth);
    const long dim = params_.D[depth];
    if (dim <= params_.d0) return base_case(classes);

    const long m_here = params_.M[depth];
    const auto first = prune_set(classes.front().points);
    std::vector<PointRef> c;
    for (auto i : first.indices) c.push_back({0, i});

    for (;;) {
      auto counts = color_counts(c, classes.size());
      if (static_cast<long>(*std::max_element(counts.begin(), counts.end())) <= m_here) return c;
      if (depth + 1 >= params_.M.size()) {
        throw std::logic_error("rebalance: recursion needs an untabulated depth");
      }
      ++stats.iterations;
      const long m_next = params_.M[depth + 1];
      const long dim_next = params_.D[depth + 1];
      const std::size_t k = static_cast<std::size_t>(dim - dim_next + 1);

      const auto points = level_points(classes, c);
      const auto pruned = prune_any(points);
      if (pruned.indices.size() != c.size()) {
        throw std::logic_error("rebalance: temporary approximation is not pruned");
      }

      // Colors in ascending order, points dealt round-robin.
      std::vector<std::size_t> order(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return c[a] < c[b]; });
      std::vector<std::vector<std::size_t>> partition(k);
      for (std::size_t t = 0; t < order.size(); ++t) partition[t % k].push_back(order[t]);

      const auto reps = representatives(points, pruned.coefficients, partition);

      std::vector<std::size_t> light;
      for (std::size_t col = 0; col < classes.size(); ++col) {
        if (static_cast<long>(counts[col]) <= m_here - m_next) light.push_back(col);
        if (static_cast<long>(light.size()) == dim_next + 1) break;
      }
      if (static_cast<long>(light.size()) < dim_next + 1) {
        throw std::logic_error("rebalance: not enough light color classes");
      }

      std::vector<Vector> kernel;
      for (const auto& r : reps.reps) kernel.push_back(primitive(r));
      std::vector<LevelClass> sub;
      for (auto col : light) {
        auto reduced = complement_coordinates(classes[col].points, kernel);
        for (auto& p : reduced) p = primitive(p);
        if (static_cast<long>(reduced.front().dim()) != dim_next) {
          throw std::logic_error("rebalance: projected dimension differs from D(j+1)");
        }
        sub.push_back({col, std::move(reduced)});
      }
      const auto inner = solve(sub, depth + 1);
      std::vector<PointRef> q;
      for (const auto& r : inner) q.push_back({sub[r.color].color, r.index});

      const auto q_points = level_points(classes, q);
      const auto replaced = replace_representative(reps.reps, q_points);

      std::vector<PointRef> next;
      for (std::size_t part = 0; part < k; ++part) {
        if (part == replaced.index) continue;
        for (auto i : partition[part]) next.push_back(c[i]);
      }
      next.insert(next.end(), q.begin(), q.end());
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());

      const auto next_points = level_points(classes, next);
      if (!origin_in_hull(next_points).inside()) {
        throw std::logic_error("rebalance: invariant alpha broken (origin outside)");
      }
      const auto kept = prune_any(next_points);
      std::vector<PointRef> after;
      for (auto i : kept.indices) after.push_back(next[i]);

      const auto new_counts = color_counts(after, classes.size());
      for (std::size_t col = 1; col < classes.size(); ++col) {
        if (static_cast<long>(new_counts[col]) > m_here) {
          throw std::logic_error("rebalance: invariant beta broken at class " +
                                 std::to_string(col));
        }
      }
      if (new_counts[0] >= counts[0]) {
        throw std::logic_error("rebalance: invariant gamma broken (first class did not shrink)");
      }
      c = std::move(after);
    }
  }

  RebalanceStats stats;

 private:
  std::vector<PointRef> base_case(const std::vector<LevelClass>& classes) {
    ++stats.base_cases;
    const std::size_t dim = classes.front().points.front().dim();
    std::vector<ColorClass> pruned_classes;
    std::vector<std::vector<std::size_t>> source;
    std::size_t total = 0;
    for (std::size_t col = 0; col < classes.size(); ++col) {
      const auto pruned = prune_set(classes[col].points);
      if (pruned.indices.size() == 1) return {{col, pruned.indices.front()}};
      total += pruned.points.size();
      pruned_classes.push_back({static_cast<int>(col), pruned.points});
      source.push_back(pruned.indices);
    }
    const Instance sub(dim, std::move(pruned_classes), InstanceKind::Caratheodory);
    const BruteForceLimits limits;
    const bool small = total <= limits.max_total_points && dim <= limits.max_dimension;

    std::vector<PointRef> picked;
    if (options_.base_case == BaseCaseSolver::BruteForce ||
        (options_.base_case == BaseCaseSolver::Auto && small)) {
      const auto found = brute_force_choice(sub, 1, limits);
      if (!found) throw std::logic_error("rebalance: brute force found no perfect choice");
      picked = found->selections;
    } else {
      const auto trace = local_search(sub);
      if (sgn(trace.final_cost) != 0) {
        throw std::logic_error("rebalance: local search stopped at a positive distance");
      }
      for (std::size_t col = 0; col < trace.final.size(); ++col)
        picked.push_back({col, trace.final[col]});
    }
    for (auto& r : picked) r.index = source[r.color][r.index];
    return picked;
  }

  const ParameterFunctions& params_;
  RebalanceOptions options_;
};

}  // namespace

RebalanceResult rebalance(const Instance& instance, const ParameterFunctions& params,
                          RebalanceOptions options) {
  const std::size_t d = instance.dimension();
  if (instance.num_classes() < d + 1) throw std::invalid_argument("rebalance: needs d+1 classes");
  const auto violations = check_feasible(params, d, params.depths());
  if (!violations.empty()) {
    throw std::invalid_argument("rebalance: infeasible parameters: " + violations.front());
  }
  Rebalancer solver(params, options);
  const auto classes = top_level(instance, d + 1);
  const auto refs = solver.solve(classes, 0);
  RebalanceResult out;
  out.choice = make_choice(to_top(classes, refs));
  out.stats = solver.stats;
  return out;
}

TwoColorBound two_color_bound(std::size_t d) {
  TwoColorBound best;
  const long n = static_cast<long>(d) + 1;
  for (long k = 2; k <= n; ++k) {
    const long bound = std::max(ceil_div(n * (k - 1), k), n - k);
    if (best.k == 0 || bound < best.bound) best = {bound, k};
  }
  return best;
}

TwoColorBound two_color_guarantee(std::size_t d) {
  TwoColorBound best;
  const long n = static_cast<long>(d) + 1;
  for (long k = 2; k <= n; ++k) {
    const long bound = std::max(n - n / k, n - k + 1);
    if (best.k == 0 || bound < best.bound) best = {bound, k};
  }
  return best;
}

TwoColorResult two_color(const Instance& instance) {
  if (instance.num_classes() < 2) throw std::invalid_argument("two_color: needs two classes");
  const std::size_t d = instance.dimension();
  const auto& p_all = instance.classes()[0].points;
  const auto& q_all = instance.classes()[1].points;

  const auto p = prune_set(p_all);
  TwoColorResult out;
  if (p.indices.size() == 1) {
    out.choice = make_choice({{0, p.indices.front()}});
    return out;
  }
  const std::size_t s = p.indices.size();
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(two_color_guarantee(d).k), s);
  out.k = static_cast<long>(k);

  // k consecutive parts, the larger ones first.
  std::vector<std::vector<std::size_t>> partition(k);
  std::size_t next = 0;
  for (std::size_t part = 0; part < k; ++part) {
    const std::size_t size = s / k + (part < s % k ? 1 : 0);
    for (std::size_t t = 0; t < size; ++t) partition[part].push_back(next++);
  }
  const auto reps = representatives(p.points, p.weights, partition);

  const auto q_pruned = prune_any(complement_coordinates(q_all, reps.reps));
  std::vector<Vector> q_points;
  for (auto i : q_pruned.indices) q_points.push_back(q_all[i]);
  const auto replaced = replace_representative(reps.reps, q_points);

  std::vector<PointRef> refs;
  for (std::size_t part = 0; part < k; ++part) {
    if (part == replaced.index) continue;
    for (auto i : partition[part]) refs.push_back({0, p.indices[i]});
  }
  for (auto i : q_pruned.indices) refs.push_back({1, i});
  out.choice = make_choice(std::move(refs));
  return out;
}

}  // namespace colorful
