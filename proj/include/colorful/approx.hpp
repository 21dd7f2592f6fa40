#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "colorful/model.hpp"
#include "colorful/numeric.hpp"

namespace colorful {

/// Points c'_i in pos(C_i) \ {0} whose hull contains the origin and whose
/// span has dimension (number of parts) - 1.
struct Representatives {
  std::vector<Vector> reps;
  std::vector<std::vector<std::size_t>> partition;  // indices into the source set
  std::vector<Rational> weights;                    // strictly positive source weights
};

/// v = sum over part1 of weight_p * p. With sum weight_p * p = 0 this gives
/// v in pos(part1) and -v in pos(complement of part1).
Vector line_in_cone(std::span<const Vector> points, std::span<const Rational> weights,
                    std::span<const std::size_t> part1);

/// Same, computing the weights. The set must be in general position with
/// 2 <= |P| <= d+1 and part1, part2 a partition into nonempty sets.
/// Throws std::invalid_argument otherwise.
Vector line_in_cone(std::span<const Vector> points, std::span<const std::size_t> part1,
                    std::span<const std::size_t> part2);

/// c'_j = sum over C_j of weight_c * c. Needs at least two nonempty parts
/// covering the set disjointly. Every invariant of Representatives is
/// re-checked exactly; violations throw std::invalid_argument.
Representatives representatives(std::span<const Vector> points,
                                std::span<const Rational> weights,
                                std::vector<std::vector<std::size_t>> partition);

/// Computes the strictly positive weights first (set must be in general
/// position and contain the origin).
Representatives representatives(std::span<const Vector> points,
                                std::vector<std::vector<std::size_t>> partition);

struct Replacement {
  std::size_t index = 0;          // representative that can be dropped
  Vector q;                       // convex combination of Q lying in lsp(reps)
  std::vector<Rational> q_weights;
  std::vector<Rational> alphas;   // -q = sum_{i != index} alpha_i c'_i, alpha >= 0
};

/// Finds i with 0 in conv(Q + reps \ {c'_i}), given that the projection of Q
/// onto lsp(reps)^perp has the origin in its hull. Solves one linear system
/// per representative and keeps the lowest index with a nonnegative
/// solution; the result is re-verified by LP.
Replacement replace_representative(std::span<const Vector> reps,
                                   std::span<const Vector> q_points);

/// A set split in two with v in pos(part1), -v in pos(part2).
struct SplitSet {
  std::vector<PointRef> part1;
  std::vector<PointRef> part2;
  Vector v;
};

/// Takes part1 of every set whose coefficient in a nontrivial linear
/// dependence 0 = sum mu_i v_i is positive, part2 otherwise. Needs more
/// vectors than the dimension (or any dependent family).
std::vector<PointRef> select_by_kernel(std::span<const SplitSet> sets);

/// Side test used when lifting a choice found in lsp(v)^perp: the origin's
/// convex weights on the projected points give x in conv(points) on the
/// line through v; returns whether <x, v> >= 0, i.e. x lies in pos(v).
bool hull_meets_ray(std::span<const Vector> points, const Vector& v);

/// ceil((d+1)/2)-colorful choice from d+1 classes (kernel-sign selection).
ColorfulChoice half_linalg(const Instance& instance);

/// (ceil(d/2)+1)-colorful choice from floor(d/2)+1 classes by repeated
/// projection along a single representative.
ColorfulChoice half_dimreduce(const Instance& instance);

/// Approximation guarantee M and dimension schedule D for rebalance,
/// tabulated by recursion depth.
struct ParameterFunctions {
  std::vector<long> M;
  std::vector<long> D;
  long d0 = 0;

  std::size_t depths() const { return M.size(); }
};

/// Violations of: M and D strictly decreasing, D(0) = d, and for
/// D(j) > d0 floor((D(j)+1)/(M(j)-M(j+1))) <= D(j)-D(j+1) <= M(j).
/// Depths whose while-loop is skipped (M(j) >= D(j)+1) need no successor.
std::vector<std::string> check_feasible(const ParameterFunctions& params, std::size_t d,
                                        std::size_t max_depth);

/// M(j) = ceil(eps * s_j * (d+1)), D(j) = ceil((1-eps)^j (d+1)) - 1, with s_j
/// the exact value of (1-eps)^{j/2} for even j and its dyadic lower bound to
/// 2^-20 for odd j; d0 = max(ceil(4(1+eps)/eps^3), 8). Tabulation stops at
/// the first depth with D(j) <= d0 or M(j) >= D(j)+1. Throws
/// std::invalid_argument unless 0 < eps < 1, and std::logic_error if the
/// tabulated pair is infeasible.
ParameterFunctions epsilon_params(std::size_t d, const Rational& epsilon);

/// Integer square root helper exposed for tests: largest dyadic
/// a / 2^bits with (a / 2^bits)^2 <= x.
Rational sqrt_lower_bound(const Rational& x, unsigned bits);

enum class BaseCaseSolver {
  Auto,         // brute force within the oracle's limits, local search beyond
  BruteForce,   // oracle enumeration only
  LocalSearch,  // Barany swap search (finite, exact, always succeeds)
};

struct RebalanceOptions {
  BaseCaseSolver base_case = BaseCaseSolver::Auto;
};

struct RebalanceStats {
  std::size_t iterations = 0;   // while-loop iterations over all depths
  std::size_t base_cases = 0;
  std::size_t max_depth = 0;
};

struct RebalanceResult {
  ColorfulChoice choice;
  RebalanceStats stats;
};

/// Recursive rebalancing. Uses the first d+1 classes. The runtime invariants
/// (origin inside, every class but the first within M(j), the first
/// class's count strictly decreasing) are checked on every iteration and
/// raise std::logic_error if broken.
RebalanceResult rebalance(const Instance& instance, const ParameterFunctions& params,
                          RebalanceOptions options = {});

/// min over k in [2, d+1] of max{ceil((d+1)(1-1/k)), d-k+1}, and the
/// smallest k attaining it.
struct TwoColorBound {
  long bound = 0;
  long k = 0;
};
TwoColorBound two_color_bound(std::size_t d);

/// What the construction guarantees: the pruned projection of Q lives in
/// d-k+1 dimensions and so keeps up to d-k+2 points, giving
/// min over k of max{(d+1) - floor((d+1)/k), d-k+2}. two_color uses the k
/// attaining this minimum (smallest on ties).
TwoColorBound two_color_guarantee(std::size_t d);

struct TwoColorResult {
  ColorfulChoice choice;
  long k = 0;
};

/// Two classes (the first two of the instance): prune P, split it into k
/// (from two_color_guarantee, capped by |P|) near-equal parts, take representatives, project and prune Q, replace one
/// representative by Q.
TwoColorResult two_color(const Instance& instance);

}  // namespace colorful
