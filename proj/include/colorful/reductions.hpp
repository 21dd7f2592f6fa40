#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "colorful/model.hpp"

namespace colorful {

struct Clause {
  std::vector<int> literals;  // +v is x_v, -v its negation; v is 1-based
  long weight = 1;
};

struct WeightedFormula {
  std::size_t num_variables = 0;
  std::vector<Clause> clauses;
};

/// DIMACS WCNF ("p wcnf n d [top]", lines "w l1 l2 ... 0") or plain CNF
/// ("p cnf n d", every weight 1). Comment lines start with 'c'. Throws
/// std::invalid_argument on malformed input.
WeightedFormula parse_wcnf(std::string_view text);
std::string to_wcnf(const WeightedFormula& formula);

enum class ReductionTarget { LocalNcp, GlobalNcp };

/// Instance built from a formula. Variable class i holds p_i at index 0 and
/// its negation point at index 1; helper classes are singletons. Classes
/// are ordered P_1..P_n, H_1..H_{d+1}, then H'_1..H'_d for the global
/// target.
struct ReductionMap {
  Instance instance;
  WeightedFormula formula;
  ReductionTarget target = ReductionTarget::LocalNcp;
  std::vector<std::size_t> variable_classes;
  std::vector<std::size_t> helper_classes;
  std::vector<std::size_t> clause_helper_classes;
};

using Assignment = std::vector<int>;  // 0 or 1 per variable

/// Local NCP instance from a weighted 2-CNF formula.
ReductionMap build_l_ncp(const WeightedFormula& formula);

/// Global NCP instance from a 3-CNF formula with unit weights.
ReductionMap build_g_ncp(const WeightedFormula& formula);

/// x_i = 1 iff the choice picks p_i. Throws std::invalid_argument unless
/// every variable class has exactly one selected point.
Assignment decode(const ReductionMap& map, const ColorfulChoice& choice);

/// The perfect colorful choice encoding an assignment.
ColorfulChoice encode(const ReductionMap& map, const Assignment& assignment);

/// Number of variables whose value satisfies each clause.
std::vector<std::size_t> satisfied_counts(const WeightedFormula& formula,
                                          const Assignment& assignment);

long unsatisfied_weight(const WeightedFormula& formula, const Assignment& assignment);
long total_weight(const WeightedFormula& formula);

/// Point of the helper hull: h_a/(d+1) over clauses satisfied twice (and
/// h'_a/(d+1) over clauses satisfied three times for the global target),
/// with the remaining mass on h_{d+1}.
Vector helper_combination(const ReductionMap& map, const Assignment& assignment);

/// p = (sum of the selected variable points + h) / (n+1).
Vector witness_point(const ReductionMap& map, const Assignment& assignment);

}  // namespace colorful
