#include "colorful/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace colorful {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw std::invalid_argument("malformed rational: " + std::string(text));
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("malformed rational: " + std::string(text));
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("malformed rational: " + std::string(text));
      }
    }
    std::string digits(part[0] == '+' ? part.substr(1) : part);
    return mpz_class(digits, 10);
  };
  const auto slash = text.find('/');
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(parse_int(text));
  } else {
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r = Rational(num, den);
    r.canonicalize();
  }
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& x) { return sgn(x) == 0; });
}

Vector& Vector::operator+=(const Vector& other) {
  if (other.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (other.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Rational& factor) {
  for (auto& x : coords_) x *= factor;
  return *this;
}

Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
Vector operator-(Vector v) { return v *= Rational(-1); }
Vector operator*(const Rational& factor, Vector v) { return v *= factor; }

Rational dot(const Vector& lhs, const Vector& rhs) {
  if (lhs.dim() != rhs.dim()) throw std::invalid_argument("dimension mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < lhs.dim(); ++i) sum += lhs[i] * rhs[i];
  return sum;
}

Rational squared_norm(const Vector& v) { return dot(v, v); }

Vector combination(std::span<const Vector> points,
                   std::span<const Rational> coefficients, std::size_t dim) {
  if (points.size() != coefficients.size()) {
    throw std::invalid_argument("combination: size mismatch");
  }
  Vector sum(dim);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (sgn(coefficients[i]) == 0) continue;
    for (std::size_t k = 0; k < dim; ++k) sum[k] += coefficients[i] * points[i][k];
  }
  return sum;
}

Vector lift(const Vector& p) {
  std::vector<Rational> coords(p.coords());
  coords.emplace_back(1);
  return Vector(std::move(coords));
}

Vector primitive(const Vector& v) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  if (num_gcd == 0) return v;
  const Rational scale(den_lcm, num_gcd);
  Vector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i] * scale;
  return out;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t dim) {
  Matrix m(dim, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != dim) throw std::invalid_argument("dimension mismatch");
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t dim) {
  Matrix m(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != dim) throw std::invalid_argument("dimension mismatch");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::operator*(const Vector& x) const {
  if (x.dim() != cols_) throw std::invalid_argument("dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < cols_; ++c) sum += (*this)(r, c) * x[c];
    out[r] = sum;
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RowEchelon row_echelon(Matrix m, std::size_t active_cols) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < active_cols && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  return row_echelon(m, m.cols()).pivot_columns.size();
}

std::size_t span_dimension(std::span<const Vector> points, std::size_t dim) {
  if (points.empty()) return 0;
  return rank(Matrix::from_columns(points, dim));
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (b.dim() != a.rows()) throw std::invalid_argument("solve_linear: rows != dim(b)");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = row_echelon(std::move(aug), a.cols());
  const std::size_t rhs = a.cols();
  for (std::size_t r = e.pivot_columns.size(); r < a.rows(); ++r) {
    if (sgn(e.reduced(r, rhs)) != 0) return std::nullopt;
  }
  Vector x(a.cols());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    x[e.pivot_columns[i]] = e.reduced(i, rhs);
  }
  return x;
}

std::optional<std::vector<Rational>> null_space_vector(std::span<const Vector> points) {
  if (points.empty()) throw std::invalid_argument("null_space_vector: no points");
  const std::size_t dim = points.front().dim();
  const RowEchelon e = row_echelon(Matrix::from_columns(points, dim), points.size());
  std::vector<bool> is_pivot(points.size(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  const auto free_it = std::find(is_pivot.begin(), is_pivot.end(), false);
  if (free_it == is_pivot.end()) return std::nullopt;
  const auto free_col = static_cast<std::size_t>(free_it - is_pivot.begin());
  std::vector<Rational> mu(points.size());
  mu[free_col] = 1;
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    mu[e.pivot_columns[i]] = -e.reduced(i, free_col);
  }
  return mu;
}

namespace {

struct ComplementFrame {
  std::vector<Vector> independent;      // maximal independent subset of the basis
  RowEchelon rows;                      // RREF of those vectors as rows
  std::vector<std::size_t> free_cols;
};

ComplementFrame complement_frame(std::span<const Vector> basis) {
  if (basis.empty()) throw std::invalid_argument("project_complement: empty basis");
  const std::size_t dim = basis.front().dim();
  const RowEchelon cols = row_echelon(Matrix::from_columns(basis, dim), basis.size());
  if (cols.pivot_columns.empty()) {
    throw std::invalid_argument("project_complement: basis is all-zero");
  }
  ComplementFrame frame;
  for (auto c : cols.pivot_columns) frame.independent.push_back(basis[c]);
  frame.rows = row_echelon(Matrix::from_rows(frame.independent, dim), dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : frame.rows.pivot_columns) is_pivot[c] = true;
  for (std::size_t c = 0; c < dim; ++c)
    if (!is_pivot[c]) frame.free_cols.push_back(c);
  return frame;
}

// p_F - R_F^T p_P: vanishes exactly on lsp(basis).
Vector frame_coordinates(const ComplementFrame& frame, const Vector& p) {
  const auto& piv = frame.rows.pivot_columns;
  Vector out(frame.free_cols.size());
  for (std::size_t t = 0; t < frame.free_cols.size(); ++t) {
    const std::size_t f = frame.free_cols[t];
    Rational x = p[f];
    for (std::size_t i = 0; i < piv.size(); ++i) {
      const Rational& r = frame.rows.reduced(i, f);
      if (sgn(r) != 0 && sgn(p[piv[i]]) != 0) x -= r * p[piv[i]];
    }
    out[t] = std::move(x);
  }
  return out;
}

}  // namespace

std::vector<Vector> complement_coordinates(std::span<const Vector> points,
                                           std::span<const Vector> basis) {
  const auto frame = complement_frame(basis);
  const std::size_t dim = basis.front().dim();
  std::vector<Vector> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    if (p.dim() != dim) throw std::invalid_argument("project_complement: dimension mismatch");
    out.push_back(frame_coordinates(frame, p));
  }
  return out;
}

Projection project_complement(std::span<const Vector> points,
                              std::span<const Vector> basis) {
  const auto frame = complement_frame(basis);
  const std::size_t dim = basis.front().dim();
  const auto& independent = frame.independent;
  const std::size_t r = independent.size();

  Matrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram(i, j) = dot(independent[i], independent[j]);

  auto project = [&](const Vector& p) {
    Vector rhs(r);
    for (std::size_t i = 0; i < r; ++i) rhs[i] = dot(independent[i], p);
    const auto c = solve_linear(gram, rhs);
    Vector projected = p;
    for (std::size_t i = 0; i < r; ++i) projected -= (*c)[i] * independent[i];
    return projected;
  };

  Projection out;
  for (auto f : frame.free_cols) {
    Vector e(dim);
    e[f] = 1;
    out.complement_basis.push_back(project(e));
  }
  for (const auto& p : points) {
    if (p.dim() != dim) throw std::invalid_argument("project_complement: dimension mismatch");
    out.points.push_back(project(p));
    out.reduced.push_back(frame_coordinates(frame, p));
  }
  return out;
}

bool certificate_valid(std::span<const Vector> points, const HullCertificate& certificate) {
  if (points.empty()) return false;
  const std::size_t dim = points.front().dim();
  if (certificate.inside()) {
    if (certificate.coefficients.size() != points.size()) return false;
    Rational sum = 0;
    for (const auto& c : certificate.coefficients) {
      if (sgn(c) < 0) return false;
      sum += c;
    }
    if (sum != 1) return false;
    return combination(points, certificate.coefficients, dim).is_zero();
  }
  if (certificate.separator.dim() != dim) return false;
  return std::all_of(points.begin(), points.end(), [&](const Vector& p) {
    return sgn(dot(certificate.separator, p)) > 0;
  });
}

FeasibilityResult solve_nonnegative(const Matrix& a, const Vector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.dim() != m) throw std::invalid_argument("solve_nonnegative: rows != dim(b)");
  const std::size_t total = n + m;  // originals then artificials
  const std::size_t rhs = total;

  // Integer-preserving tableau: the true tableau is t / denom. Each row of
  // [A | b] is first scaled by a nonzero integer so it becomes integral and
  // its right-hand side nonnegative; row m holds the phase-1 reduced costs.
  std::vector<std::vector<mpz_class>> t(m + 1, std::vector<mpz_class>(total + 1));
  std::vector<mpz_class> scale(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class lcm = b[i].get_den();
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
    }
    if (sgn(b[i]) < 0) lcm = -lcm;
    scale[i] = lcm;
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = a(i, j).get_num() * (lcm / a(i, j).get_den());
      t[m][j] -= t[i][j];
    }
    t[i][n + i] = 1;
    t[i][rhs] = b[i].get_num() * (lcm / b[i].get_den());
    t[m][rhs] -= t[i][rhs];
    basis[i] = n + i;
  }
  mpz_class denom = 1;
  mpz_class lhs, rhs_cmp;

  for (;;) {
    std::size_t entering = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (sgn(t[m][j]) < 0) {
        entering = j;
        break;
      }
    }
    if (entering == total) break;

    std::size_t leaving = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][entering]) <= 0) continue;
      if (leaving == m) {
        leaving = i;
        continue;
      }
      // t[i][rhs] / t[i][e] against t[l][rhs] / t[l][e], both divisors positive.
      lhs = t[i][rhs] * t[leaving][entering];
      rhs_cmp = t[leaving][rhs] * t[i][entering];
      const int c = cmp(lhs, rhs_cmp);
      if (c < 0 || (c == 0 && basis[i] < basis[leaving])) leaving = i;
    }
    if (leaving == m) throw std::logic_error("phase-1 simplex unbounded");

    const mpz_class pivot = t[leaving][entering];
    const auto& pivot_row = t[leaving];
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leaving) continue;
      auto& row = t[i];
      const mpz_class factor = row[entering];
      for (std::size_t j = 0; j <= total; ++j) {
        if (sgn(factor) == 0) {
          row[j] *= pivot;
        } else {
          row[j] = row[j] * pivot - factor * pivot_row[j];
        }
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), denom.get_mpz_t());
      }
    }
    denom = pivot;
    basis[leaving] = entering;
  }

  FeasibilityResult result;
  bool feasible = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n && sgn(t[i][rhs]) != 0) feasible = false;
  }
  if (feasible) {
    Vector x(n);
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) x[basis[i]] = Rational(t[i][rhs], denom);
    }
    for (std::size_t j = 0; j < n; ++j) x[j].canonicalize();
    result.solution = std::move(x);
  } else {
    // Dual of the scaled system: 1 - reduced cost of each artificial.
    Vector y(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rational r(t[m][n + i], denom);
      r.canonicalize();
      y[i] = Rational(scale[i]) * (1 - r);
    }
    result.farkas = std::move(y);
  }
  return result;
}

HullCertificate origin_in_hull(std::span<const Vector> points) {
  if (points.empty()) throw std::invalid_argument("origin_in_hull: no points");
  const std::size_t dim = points.front().dim();
  Matrix a(dim + 1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].dim() != dim) throw std::invalid_argument("origin_in_hull: dimension mismatch");
    for (std::size_t k = 0; k < dim; ++k) a(k, j) = points[j][k];
    a(dim, j) = 1;
  }
  Vector b(dim + 1);
  b[dim] = 1;
  FeasibilityResult lp = solve_nonnegative(a, b);
  HullCertificate cert;
  if (lp.solution) {
    cert.kind = HullCertificate::Kind::Inside;
    cert.coefficients = lp.solution->coords();
  } else {
    cert.kind = HullCertificate::Kind::Outside;
    Vector s(dim);
    for (std::size_t k = 0; k < dim; ++k) s[k] = -lp.farkas[k];
    cert.separator = std::move(s);
  }
  return cert;
}

bool in_cone(std::span<const Vector> generators, const Vector& v, std::size_t dim) {
  if (generators.empty()) return v.is_zero();
  return solve_nonnegative(Matrix::from_columns(generators, dim), v).solution.has_value();
}

namespace {

// Weights alpha with sum 1 minimizing |sum alpha_i p_i| over the affine hull.
std::vector<Rational> affine_min_norm(std::span<const Vector> points,
                                      const std::vector<std::size_t>& support) {
  const std::size_t k = support.size();
  Matrix kkt(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      kkt(i, j) = dot(points[support[i]], points[support[j]]);
      kkt(j, i) = kkt(i, j);
    }
    kkt(i, k) = 1;
    kkt(k, i) = 1;
  }
  Vector rhs(k + 1);
  rhs[k] = 1;
  const auto sol = solve_linear(kkt, rhs);
  if (!sol) throw std::logic_error("affine minimum-norm system inconsistent");
  return {sol->coords().begin(), sol->coords().begin() + static_cast<long>(k)};
}

}  // namespace

NearestPoint min_norm_point(std::span<const Vector> points) {
  if (points.empty()) throw std::invalid_argument("min_norm_point: no points");
  const std::size_t dim = points.front().dim();
  for (const auto& p : points) {
    if (p.dim() != dim) throw std::invalid_argument("min_norm_point: dimension mismatch");
  }

  std::size_t start = 0;
  Rational best = squared_norm(points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Rational n = squared_norm(points[i]);
    if (n < best) {
      best = std::move(n);
      start = i;
    }
  }

  std::vector<std::size_t> support{start};
  std::vector<Rational> weights{Rational(1)};
  Vector x = points[start];

  auto current_point = [&] {
    Vector sum(dim);
    for (std::size_t i = 0; i < support.size(); ++i) sum += weights[i] * points[support[i]];
    return sum;
  };

  const std::size_t guard = 1000 * (points.size() + dim + 1);
  for (std::size_t iter = 0;; ++iter) {
    if (iter > guard) throw std::logic_error("min_norm_point did not terminate");
    if (x.is_zero()) break;
    const Rational xx = squared_norm(x);
    std::size_t entering = points.size();
    Rational lowest;
    for (std::size_t j = 0; j < points.size(); ++j) {
      Rational v = dot(x, points[j]);
      if (entering == points.size() || v < lowest) {
        lowest = std::move(v);
        entering = j;
      }
    }
    if (lowest >= xx) break;
    if (std::find(support.begin(), support.end(), entering) != support.end()) {
      throw std::logic_error("min_norm_point: entering point already in support");
    }
    support.push_back(entering);
    weights.emplace_back(0);

    for (std::size_t minor = 0;; ++minor) {
      if (minor > guard) throw std::logic_error("min_norm_point minor cycle did not terminate");
      std::vector<Rational> alpha = affine_min_norm(points, support);
      const bool nonnegative = std::all_of(alpha.begin(), alpha.end(),
                                           [](const Rational& a) { return sgn(a) >= 0; });
      if (nonnegative) {
        weights = std::move(alpha);
      } else {
        Rational theta = 1;
        for (std::size_t i = 0; i < support.size(); ++i) {
          if (sgn(alpha[i]) >= 0) continue;
          Rational ratio = weights[i] / (weights[i] - alpha[i]);
          if (ratio < theta) theta = std::move(ratio);
        }
        for (std::size_t i = 0; i < support.size(); ++i) {
          weights[i] = theta * alpha[i] + (1 - theta) * weights[i];
        }
      }
      std::vector<std::size_t> kept_support;
      std::vector<Rational> kept_weights;
      for (std::size_t i = 0; i < support.size(); ++i) {
        if (sgn(weights[i]) > 0) {
          kept_support.push_back(support[i]);
          kept_weights.push_back(weights[i]);
        }
      }
      support = std::move(kept_support);
      weights = std::move(kept_weights);
      x = current_point();
      if (nonnegative) break;
    }
  }

  NearestPoint out;
  out.coefficients.assign(points.size(), Rational(0));
  for (std::size_t i = 0; i < support.size(); ++i) out.coefficients[support[i]] = weights[i];
  out.squared_distance = squared_norm(x);
  out.point = std::move(x);
  return out;
}

}  // namespace colorful
