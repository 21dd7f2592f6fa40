#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colorful/numeric.hpp"

namespace colorful {

enum class InstanceKind { Caratheodory, Ncp };

struct ColorClass {
  int id = 0;
  std::vector<Vector> points;
};

/// Color classes P_1, ..., P_n in Q^d. Immutable once built; whether the
/// classes meet the kind's requirements is checked by validate().
class Instance {
 public:
  Instance(std::size_t dimension, std::vector<ColorClass> classes, InstanceKind kind);

  std::size_t dimension() const { return dimension_; }
  const std::vector<ColorClass>& classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }
  InstanceKind kind() const { return kind_; }

 private:
  std::size_t dimension_;
  std::vector<ColorClass> classes_;
  InstanceKind kind_;
};

/// A selected point: class position within the instance and point index
/// within that class.
struct PointRef {
  std::size_t color = 0;
  std::size_t index = 0;

  auto operator<=>(const PointRef&) const = default;
};

/// Sub-multiset of an instance. `m` is the largest per-class count actually
/// attained; a perfect colorful choice has m = 1.
struct ColorfulChoice {
  std::vector<PointRef> selections;
  std::size_t m = 0;
};

/// Sorts and deduplicates the references and fills in m.
ColorfulChoice make_choice(std::vector<PointRef> selections);

const Vector& point_at(const Instance& instance, PointRef ref);
std::vector<Vector> gather(const Instance& instance, std::span<const PointRef> refs);

/// Largest per-class count. Throws std::out_of_range on an invalid reference.
std::size_t max_multiplicity(const ColorfulChoice& choice, const Instance& instance);

/// Per-class counts, indexed by class position.
std::vector<std::size_t> color_counts(std::span<const PointRef> refs, std::size_t num_classes);

struct Violation {
  enum class Severity { Error, Warning };

  Severity severity = Severity::Error;
  std::string message;
  std::optional<HullCertificate> certificate;
};

std::vector<Violation> validate(const Instance& instance);
bool has_errors(const std::vector<Violation>& violations);

struct GeneralPositionReport {
  enum class Failure { None, Flat, SubsetContainsOrigin };

  bool ok = true;
  Failure failure = Failure::None;
  std::vector<std::size_t> witness;  // indices into the tested point list
};

/// No k+2 points in a k-flat (equivalently: affinely independent) and no
/// proper subset with the origin in its hull. A Flat witness is the support
/// of an affine dependence; a SubsetContainsOrigin witness is the proper
/// subset.
GeneralPositionReport check_general_position(std::span<const Vector> points);

}  // namespace colorful
