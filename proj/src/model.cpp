#include "colorful/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace colorful {

Instance::Instance(std::size_t dimension, std::vector<ColorClass> classes, InstanceKind kind)
    : dimension_(dimension), classes_(std::move(classes)), kind_(kind) {}

ColorfulChoice make_choice(std::vector<PointRef> selections) {
  std::sort(selections.begin(), selections.end());
  selections.erase(std::unique(selections.begin(), selections.end()), selections.end());
  ColorfulChoice choice;
  std::size_t run = 0;
  for (std::size_t i = 0; i < selections.size(); ++i) {
    run = (i > 0 && selections[i].color == selections[i - 1].color) ? run + 1 : 1;
    choice.m = std::max(choice.m, run);
  }
  choice.selections = std::move(selections);
  return choice;
}

const Vector& point_at(const Instance& instance, PointRef ref) {
  return instance.classes().at(ref.color).points.at(ref.index);
}

std::vector<Vector> gather(const Instance& instance, std::span<const PointRef> refs) {
  std::vector<Vector> out;
  out.reserve(refs.size());
  for (const auto& r : refs) out.push_back(point_at(instance, r));
  return out;
}

std::vector<std::size_t> color_counts(std::span<const PointRef> refs, std::size_t num_classes) {
  std::vector<std::size_t> counts(num_classes, 0);
  for (const auto& r : refs) ++counts.at(r.color);
  return counts;
}

std::size_t max_multiplicity(const ColorfulChoice& choice, const Instance& instance) {
  for (const auto& r : choice.selections) (void)point_at(instance, r);
  const auto counts = color_counts(choice.selections, instance.num_classes());
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> out;
  auto error = [&](std::string msg, std::optional<HullCertificate> cert = std::nullopt) {
    out.push_back({Violation::Severity::Error, std::move(msg), std::move(cert)});
  };
  std::set<int> ids;
  for (std::size_t c = 0; c < instance.num_classes(); ++c) {
    const auto& cls = instance.classes()[c];
    if (!ids.insert(cls.id).second) error("duplicate class id " + std::to_string(cls.id));
    if (cls.points.empty()) {
      error("class " + std::to_string(cls.id) + " is empty");
      continue;
    }
    bool dims_ok = true;
    for (std::size_t i = 0; i < cls.points.size(); ++i) {
      if (cls.points[i].dim() != instance.dimension()) {
        error("class " + std::to_string(cls.id) + " point " + std::to_string(i) +
              " has dimension " + std::to_string(cls.points[i].dim()) + ", expected " +
              std::to_string(instance.dimension()));
        dims_ok = false;
      }
    }
    if (!dims_ok) continue;
    for (std::size_t i = 0; i < cls.points.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.points.size(); ++j) {
        if (cls.points[i] == cls.points[j]) {
          out.push_back({Violation::Severity::Warning,
                         "class " + std::to_string(cls.id) + " duplicate points " +
                             std::to_string(i) + " and " + std::to_string(j),
                         std::nullopt});
        }
      }
    }
    if (instance.kind() == InstanceKind::Caratheodory) {
      auto cert = origin_in_hull(cls.points);
      if (!cert.inside()) {
        error("class " + std::to_string(cls.id) + " hull excludes origin", std::move(cert));
      }
    }
  }
  return out;
}

bool has_errors(const std::vector<Violation>& violations) {
  return std::any_of(violations.begin(), violations.end(), [](const Violation& v) {
    return v.severity == Violation::Severity::Error;
  });
}

GeneralPositionReport check_general_position(std::span<const Vector> points) {
  GeneralPositionReport report;
  if (points.empty()) return report;
  std::vector<Vector> lifted;
  lifted.reserve(points.size());
  for (const auto& p : points) lifted.push_back(lift(p));

  if (auto dependence = null_space_vector(lifted)) {
    report.ok = false;
    report.failure = GeneralPositionReport::Failure::Flat;
    for (std::size_t i = 0; i < dependence->size(); ++i) {
      if (sgn((*dependence)[i]) != 0) report.witness.push_back(i);
    }
    return report;
  }

  // Affinely independent: the convex weights of the origin, if any, are
  // unique, and a proper subset contains the origin iff one weight is 0.
  const auto cert = origin_in_hull(points);
  if (cert.inside()) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (sgn(cert.coefficients[i]) > 0) support.push_back(i);
    }
    if (support.size() < points.size()) {
      report.ok = false;
      report.failure = GeneralPositionReport::Failure::SubsetContainsOrigin;
      report.witness = std::move(support);
    }
  }
  return report;
}

}  // namespace colorful
