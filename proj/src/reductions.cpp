#include "colorful/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace colorful {

namespace {

long to_long(const std::string& token) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("wcnf: bad integer '" + token + "'");
  }
  if (used != token.size()) throw std::invalid_argument("wcnf: bad integer '" + token + "'");
  return value;
}

bool satisfies(int literal, const Assignment& a) {
  const int value = a[static_cast<std::size_t>(std::abs(literal)) - 1];
  return literal > 0 ? value == 1 : value == 0;
}

void check_formula(const WeightedFormula& f, std::size_t max_literals) {
  if (f.num_variables == 0) throw std::invalid_argument("reduction: no variables");
  if (f.clauses.empty()) throw std::invalid_argument("reduction: empty formula");
  for (const auto& c : f.clauses) {
    if (c.literals.empty() || c.literals.size() > max_literals) {
      throw std::invalid_argument("reduction: clause has " + std::to_string(c.literals.size()) +
                                  " literals, allowed 1.." + std::to_string(max_literals));
    }
    if (c.weight < 1) throw std::invalid_argument("reduction: weights must be positive");
    for (int l : c.literals) {
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > f.num_variables) {
        throw std::invalid_argument("reduction: literal out of range");
      }
    }
  }
}

ReductionMap build(const WeightedFormula& f, ReductionTarget target) {
  const std::size_t d = f.clauses.size();
  const std::size_t n = f.num_variables;
  const Rational nn = static_cast<long>(n);
  const Rational dd = static_cast<long>(d);
  std::vector<ColorClass> classes;
  std::vector<std::size_t> vars, helpers, clause_helpers;

  for (std::size_t i = 1; i <= n; ++i) {
    Vector pos(d), neg(d);
    for (std::size_t j = 0; j < d; ++j) {
      const Rational w = f.clauses[j].weight;
      const auto& lits = f.clauses[j].literals;
      const bool by_true = std::find(lits.begin(), lits.end(), static_cast<int>(i)) != lits.end();
      const bool by_false = std::find(lits.begin(), lits.end(), -static_cast<int>(i)) != lits.end();
      pos[j] = by_true ? Rational(-nn * w) : w;
      neg[j] = by_false ? Rational(-nn * w) : w;
    }
    vars.push_back(classes.size());
    classes.push_back({static_cast<int>(classes.size()), {pos, neg}});
  }

  const Rational spike = (dd + 1) * (nn + 2) - dd;
  for (std::size_t j = 0; j <= d; ++j) {
    Vector h(d);
    for (std::size_t k = 0; k < d; ++k) h[k] = f.clauses[k].weight;
    if (j < d) h[j] = spike * f.clauses[j].weight;
    helpers.push_back(classes.size());
    classes.push_back({static_cast<int>(classes.size()), {h}});
  }

  if (target == ReductionTarget::GlobalNcp) {
    const Rational spike3 = (dd + 1) * (2 * nn + 2) - dd;
    for (std::size_t j = 0; j < d; ++j) {
      Vector h(d);
      for (std::size_t k = 0; k < d; ++k) h[k] = 1;
      h[j] = spike3;
      clause_helpers.push_back(classes.size());
      classes.push_back({static_cast<int>(classes.size()), {h}});
    }
  }

  return ReductionMap{Instance(d, std::move(classes), InstanceKind::Ncp),
                      f,
                      target,
                      std::move(vars),
                      std::move(helpers),
                      std::move(clause_helpers)};
}

}  // namespace

WeightedFormula parse_wcnf(std::string_view text) {
  WeightedFormula f;
  bool header = false;
  bool weighted = false;
  std::size_t expected = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty() || words[0][0] == 'c' || words[0][0] == '%') continue;
    if (words[0] == "p") {
      if (header) throw std::invalid_argument("wcnf: repeated header");
      if (words.size() < 4 || (words[1] != "wcnf" && words[1] != "cnf")) {
        throw std::invalid_argument("wcnf: header must be 'p wcnf n d [top]' or 'p cnf n d'");
      }
      weighted = words[1] == "wcnf";
      const long n = to_long(words[2]);
      const long d = to_long(words[3]);
      if (n < 0 || d < 0) throw std::invalid_argument("wcnf: negative header count");
      f.num_variables = static_cast<std::size_t>(n);
      expected = static_cast<std::size_t>(d);
      header = true;
      continue;
    }
    if (!header) throw std::invalid_argument("wcnf: clause before header");
    Clause c;
    std::size_t start = 0;
    if (weighted) {
      c.weight = to_long(words[0]);
      if (c.weight < 1) throw std::invalid_argument("wcnf: weights must be positive");
      start = 1;
    }
    bool terminated = false;
    for (std::size_t t = start; t < words.size(); ++t) {
      const long l = to_long(words[t]);
      if (l == 0) {
        if (t + 1 != words.size()) throw std::invalid_argument("wcnf: tokens after clause end");
        terminated = true;
        break;
      }
      if (static_cast<std::size_t>(std::labs(l)) > f.num_variables) {
        throw std::invalid_argument("wcnf: literal " + words[t] + " exceeds variable count");
      }
      c.literals.push_back(static_cast<int>(l));
    }
    if (!terminated) throw std::invalid_argument("wcnf: clause not terminated by 0");
    f.clauses.push_back(std::move(c));
  }
  if (!header) throw std::invalid_argument("wcnf: missing header");
  if (f.clauses.size() != expected) {
    throw std::invalid_argument("wcnf: header announces " + std::to_string(expected) +
                                " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

std::string to_wcnf(const WeightedFormula& f) {
  std::ostringstream out;
  out << "p wcnf " << f.num_variables << ' ' << f.clauses.size() << ' ' << total_weight(f) + 1
      << '\n';
  for (const auto& c : f.clauses) {
    out << c.weight;
    for (int l : c.literals) out << ' ' << l;
    out << " 0\n";
  }
  return out.str();
}

ReductionMap build_l_ncp(const WeightedFormula& formula) {
  check_formula(formula, 2);
  return build(formula, ReductionTarget::LocalNcp);
}

ReductionMap build_g_ncp(const WeightedFormula& formula) {
  check_formula(formula, 3);
  for (const auto& c : formula.clauses) {
    if (c.weight != 1) throw std::invalid_argument("build_g_ncp: all weights must be 1");
  }
  return build(formula, ReductionTarget::GlobalNcp);
}

Assignment decode(const ReductionMap& map, const ColorfulChoice& choice) {
  const std::size_t n = map.variable_classes.size();
  Assignment a(n, -1);
  for (const auto& r : choice.selections) {
    const auto it = std::find(map.variable_classes.begin(), map.variable_classes.end(), r.color);
    if (it == map.variable_classes.end()) continue;
    const auto v = static_cast<std::size_t>(it - map.variable_classes.begin());
    if (a[v] != -1) throw std::invalid_argument("decode: variable class selected twice");
    if (r.index > 1) throw std::invalid_argument("decode: invalid point index");
    a[v] = r.index == 0 ? 1 : 0;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (a[v] == -1) {
      throw std::invalid_argument("decode: variable x" + std::to_string(v + 1) + " unselected");
    }
  }
  return a;
}

ColorfulChoice encode(const ReductionMap& map, const Assignment& assignment) {
  if (assignment.size() != map.variable_classes.size()) {
    throw std::invalid_argument("encode: assignment size mismatch");
  }
  std::vector<PointRef> refs;
  for (std::size_t c = 0; c < map.instance.num_classes(); ++c) refs.push_back({c, 0});
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    refs[map.variable_classes[v]].index = assignment[v] == 1 ? 0 : 1;
  }
  return make_choice(std::move(refs));
}

std::vector<std::size_t> satisfied_counts(const WeightedFormula& f, const Assignment& a) {
  if (a.size() != f.num_variables) throw std::invalid_argument("assignment size mismatch");
  std::vector<std::size_t> out;
  for (const auto& c : f.clauses) {
    std::vector<int> vars;
    for (int l : c.literals)
      if (satisfies(l, a)) vars.push_back(std::abs(l));
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    out.push_back(vars.size());
  }
  return out;
}

long unsatisfied_weight(const WeightedFormula& f, const Assignment& a) {
  const auto counts = satisfied_counts(f, a);
  long total = 0;
  for (std::size_t j = 0; j < counts.size(); ++j)
    if (counts[j] == 0) total += f.clauses[j].weight;
  return total;
}

long total_weight(const WeightedFormula& f) {
  long total = 0;
  for (const auto& c : f.clauses) total += c.weight;
  return total;
}

Vector helper_combination(const ReductionMap& map, const Assignment& assignment) {
  const auto counts = satisfied_counts(map.formula, assignment);
  const std::size_t d = map.instance.dimension();
  const Rational share = Rational(1, static_cast<unsigned long>(d + 1));
  const auto& classes = map.instance.classes();

  Vector h(d);
  Rational rest = 1;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const std::size_t cls = counts[j] == 2   ? map.helper_classes[j]
                            : counts[j] == 3 ? map.clause_helper_classes.at(j)
                                             : classes.size();
    if (cls == classes.size()) continue;
    h += share * classes[cls].points.front();
    rest -= share;
  }
  h += rest * classes[map.helper_classes.back()].points.front();
  return h;
}

Vector witness_point(const ReductionMap& map, const Assignment& assignment) {
  const std::size_t n = map.variable_classes.size();
  Vector p = helper_combination(map, assignment);
  const auto& classes = map.instance.classes();
  for (std::size_t v = 0; v < n; ++v) {
    p += classes[map.variable_classes[v]].points[assignment[v] == 1 ? 0 : 1];
  }
  p *= Rational(1, static_cast<unsigned long>(n + 1));
  return p;
}

}  // namespace colorful
