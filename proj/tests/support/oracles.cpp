#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

// Calls f on every subset of {0..n-1} with 1..max_size elements.
void for_each_subset(std::size_t n, std::size_t max_size,
                     const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (!idx.empty() && f(idx)) return true;
    if (idx.size() == max_size) return false;
    for (std::size_t i = from; i < n; ++i) {
      idx.push_back(i);
      if (rec(i + 1)) return true;
      idx.pop_back();
    }
    return false;
  };
  rec(0);
}

Rational inner(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::optional<std::vector<Rational>> solve_unique(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;  // dependent column
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < cols) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = b[i] / a[i][pivots[i]];
  return x;
}

bool origin_in_hull(std::span<const Vector> points) {
  if (points.empty()) return false;
  const std::size_t d = points[0].dim();
  bool found = false;
  for_each_subset(points.size(), d + 1, [&](const std::vector<std::size_t>& s) {
    std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(s.size()));
    for (std::size_t j = 0; j < s.size(); ++j) {
      for (std::size_t i = 0; i < d; ++i) a[i][j] = points[s[j]][i];
      a[d][j] = 1;
    }
    std::vector<Rational> b(d + 1);
    b[d] = 1;
    const auto x = solve_unique(std::move(a), std::move(b));
    found = x && std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; });
    return found;
  });
  return found;
}

bool in_cone(std::span<const Vector> generators, const Vector& v) {
  if (v.is_zero()) return true;
  const std::size_t d = v.dim();
  bool found = false;
  for_each_subset(generators.size(), d, [&](const std::vector<std::size_t>& s) {
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(s.size()));
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t i = 0; i < d; ++i) a[i][j] = generators[s[j]][i];
    std::vector<Rational> b(v.begin(), v.end());
    const auto x = solve_unique(std::move(a), std::move(b));
    found = x && std::all_of(x->begin(), x->end(), [](const Rational& c) { return c >= 0; });
    return found;
  });
  return found;
}

Nearest min_norm_point(std::span<const Vector> points) {
  const std::size_t d = points[0].dim();
  std::optional<Nearest> best;
  for_each_subset(points.size(), d + 1, [&](const std::vector<std::size_t>& s) {
    // [G 1; 1^T 0] [lambda; mu] = [0; 1]
    const std::size_t k = s.size();
    std::vector<std::vector<Rational>> a(k + 1, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = inner(points[s[i]], points[s[j]]);
      a[i][k] = 1;
      a[k][i] = 1;
    }
    std::vector<Rational> b(k + 1);
    b[k] = 1;
    const auto x = solve_unique(std::move(a), std::move(b));
    if (!x) return false;
    for (std::size_t i = 0; i < k; ++i)
      if ((*x)[i] < 0) return false;
    Vector p(d);
    for (std::size_t i = 0; i < k; ++i) p += (*x)[i] * points[s[i]];
    Rational n = inner(p, p);
    if (!best || n < best->squared_distance) best = Nearest{std::move(n), std::move(p)};
    return false;
  });
  return *best;
}

std::optional<std::vector<colorful::PointRef>> first_choice(const colorful::Instance& instance,
                                                            std::size_t m) {
  const auto& classes = instance.classes();
  std::vector<colorful::PointRef> chosen;
  std::optional<std::vector<colorful::PointRef>> hit;

  std::function<bool(std::size_t)> over_classes;
  std::function<bool(std::size_t, std::size_t, std::size_t)> combos =
      [&](std::size_t c, std::size_t from, std::size_t left) {
        if (left == 0) return over_classes(c + 1);
        const std::size_t size = classes[c].points.size();
        for (std::size_t i = from; i + left <= size; ++i) {
          chosen.push_back({c, i});
          if (combos(c, i + 1, left - 1)) return true;
          chosen.pop_back();
        }
        return false;
      };
  over_classes = [&](std::size_t c) {
    if (c == classes.size()) {
      std::vector<Vector> pts;
      for (const auto& r : chosen) pts.push_back(classes[r.color].points[r.index]);
      if (oracle::origin_in_hull(pts)) {
        hit = chosen;
        return true;
      }
      return false;
    }
    return combos(c, 0, std::min(m, classes[c].points.size()));
  };
  if (!classes.empty()) over_classes(0);
  return hit;
}

Rational nested_global_minimum(const colorful::Instance& instance) {
  const auto& classes = instance.classes();
  std::vector<Vector> chosen;
  std::optional<Rational> best;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      Rational v = oracle::min_norm_point(chosen).squared_distance;
      if (!best || v < *best) best = v;
      return;
    }
    for (const auto& p : classes[c].points) {
      chosen.push_back(p);
      rec(c + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return *best;
}

std::vector<std::vector<Vector>> reference_reduction(const colorful::WeightedFormula& f,
                                                     bool global) {
  const long n = static_cast<long>(f.num_variables);
  const std::size_t d = f.clauses.size();
  const Rational dd(static_cast<long>(d));
  std::vector<Rational> w;
  for (const auto& c : f.clauses) w.push_back(global ? Rational(1) : Rational(c.weight));

  auto contains = [&](std::size_t j, int literal) {
    const auto& l = f.clauses[j].literals;
    return std::find(l.begin(), l.end(), literal) != l.end();
  };

  std::vector<std::vector<Vector>> out;
  for (long i = 1; i <= n; ++i) {
    Vector pos(d), neg(d);
    for (std::size_t j = 0; j < d; ++j) {
      pos[j] = contains(j, static_cast<int>(i)) ? Rational(-n) * w[j] : w[j];
      neg[j] = contains(j, static_cast<int>(-i)) ? Rational(-n) * w[j] : w[j];
    }
    out.push_back({pos, neg});
  }
  for (std::size_t a = 0; a < d; ++a) {
    Vector h(d);
    for (std::size_t k = 0; k < d; ++k)
      h[k] = k == a ? (dd + 1) * (Rational(n + 2) - dd / (dd + 1)) * w[k] : w[k];
    out.push_back({h});
  }
  out.push_back({Vector(std::vector<Rational>(w))});
  if (global) {
    for (std::size_t a = 0; a < d; ++a) {
      Vector h(d);
      for (std::size_t k = 0; k < d; ++k)
        h[k] = k == a ? (dd + 1) * (Rational(2 * n + 2) - dd / (dd + 1)) : Rational(1);
      out.push_back({h});
    }
  }
  return out;
}

long unsatisfied_weight(const colorful::WeightedFormula& f, const std::vector<int>& x) {
  long total = 0;
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (int l : c.literals) {
      const int v = x[static_cast<std::size_t>(std::abs(l) - 1)];
      if ((l > 0 && v == 1) || (l < 0 && v == 0)) sat = true;
    }
    if (!sat) total += c.weight;
  }
  return total;
}

bool flip_local_optimum(const colorful::WeightedFormula& f, const std::vector<int>& x) {
  const long here = oracle::unsatisfied_weight(f, x);
  auto y = x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] ^= 1;
    if (oracle::unsatisfied_weight(f, y) < here) return false;
    y[i] ^= 1;
  }
  return true;
}

bool satisfiable(const colorful::WeightedFormula& f) {
  const std::size_t n = f.num_variables;
  std::vector<int> x(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<int>((mask >> i) & 1);
    if (oracle::unsatisfied_weight(f, x) == 0) return true;
  }
  return false;
}

Vector random_vector(colorful::SplitMix64& rng, std::size_t dim, long range) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rng.uniform(-range, range);
  return v;
}

}  // namespace oracle
