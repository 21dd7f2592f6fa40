#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace colorful {

/// Exact scalar. GMP keeps every arithmetic result in lowest terms with a
/// positive denominator; values built from raw parts go through
/// parse_rational or make_rational, which canonicalize.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "num/den" or "num". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", including integers ("3/1").
std::string to_string(const Rational& value);

/// Point or direction in Q^d.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim) {}
  Vector(std::initializer_list<Rational> values) : coords_(values) {}
  explicit Vector(std::vector<Rational> values) : coords_(std::move(values)) {}

  std::size_t dim() const { return coords_.size(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rational& factor);

  friend bool operator==(const Vector& lhs, const Vector& rhs) {
    return lhs.coords_ == rhs.coords_;
  }

 private:
  std::vector<Rational> coords_;
};

Vector operator+(Vector lhs, const Vector& rhs);
Vector operator-(Vector lhs, const Vector& rhs);
Vector operator-(Vector v);
Vector operator*(const Rational& factor, Vector v);

Rational dot(const Vector& lhs, const Vector& rhs);
Rational squared_norm(const Vector& v);

/// Sum of coefficient[i] * points[i]. Sizes must agree; `dim` is used when
/// the list is empty.
Vector combination(std::span<const Vector> points,
                   std::span<const Rational> coefficients, std::size_t dim);

/// (p, 1): affine relations among points become linear relations among
/// their lifts.
Vector lift(const Vector& p);

/// Positive multiple with coprime integer coordinates; the zero vector is
/// returned unchanged. Cone and hull-of-origin questions are invariant under
/// this rescaling, so recursive algorithms use it to keep numbers small.
Vector primitive(const Vector& v);

std::string to_string(const Vector& v);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_columns(std::span<const Vector> columns, std::size_t dim);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector operator*(const Vector& x) const;
  Matrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form. Pivots are taken column by column from the
/// left; within a column the smallest remaining row index with a nonzero
/// entry wins.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;  // pivot_columns[i] is row i's pivot
};

RowEchelon row_echelon(Matrix m, std::size_t active_cols);

std::size_t rank(const Matrix& m);

/// Dimension of the linear span of the points.
std::size_t span_dimension(std::span<const Vector> points, std::size_t dim);

/// Exact solution of A x = b, or nullopt when inconsistent. Free variables
/// of an underdetermined system are set to zero.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Nonzero mu with sum mu_i v_i = 0, or nullopt when the points are
/// linearly independent. The free variable of the first non-pivot column
/// is set to 1, the others to 0.
std::optional<std::vector<Rational>> null_space_vector(
    std::span<const Vector> points);

/// Orthogonal projection onto lsp(basis)^perp.
///
/// With R the reduced row echelon form of a maximal independent subset of
/// the basis (pivot columns P, free columns F), the complement basis is the
/// projection of e_f for each free column f, and the reduced coordinates of
/// p are p_F - R_F^T p_P. They vanish exactly on lsp(basis), satisfy
/// points[i] = sum_t reduced[i][t] * complement_basis[t], and avoid the
/// Gram denominators, which keeps repeated projections small.
struct Projection {
  std::vector<Vector> points;            // ambient coordinates
  std::vector<Vector> complement_basis;  // rational basis of lsp(basis)^perp
  std::vector<Vector> reduced;           // coordinates w.r.t. complement_basis
};

/// Throws std::invalid_argument if the basis is empty or all-zero.
Projection project_complement(std::span<const Vector> points,
                              std::span<const Vector> basis);

/// Just the reduced coordinates of project_complement (no Gram solve).
std::vector<Vector> complement_coordinates(std::span<const Vector> points,
                                           std::span<const Vector> basis);

/// Witness for the origin being inside or outside conv(points).
struct HullCertificate {
  enum class Kind { Inside, Outside };

  Kind kind = Kind::Outside;
  std::vector<Rational> coefficients;  // per input point, when Inside
  Vector separator;                    // <separator, p> > 0 for all p, when Outside

  bool inside() const { return kind == Kind::Inside; }
};

/// Exact check of a certificate against the point list it claims to
/// describe.
bool certificate_valid(std::span<const Vector> points,
                       const HullCertificate& certificate);

/// Outcome of a phase-1 feasibility test for A x = b, x >= 0. When
/// infeasible, `farkas` satisfies y^T A <= 0 and y^T b > 0.
struct FeasibilityResult {
  std::optional<Vector> solution;
  Vector farkas;
};

/// Phase-1 simplex over Q with Bland's rule.
FeasibilityResult solve_nonnegative(const Matrix& a, const Vector& b);

/// Exact convex-hull membership of the origin (needs at least one point).
HullCertificate origin_in_hull(std::span<const Vector> points);

/// v in pos(generators); an empty generator list spans only the origin.
bool in_cone(std::span<const Vector> generators, const Vector& v,
             std::size_t dim);

/// Nearest point of conv(points) to the origin.
struct NearestPoint {
  Vector point;
  Rational squared_distance;
  std::vector<Rational> coefficients;  // convex weights per input point
};

/// Wolfe's minimum-norm-point algorithm in exact arithmetic.
NearestPoint min_norm_point(std::span<const Vector> points);

}  // namespace colorful
