#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "colorful/model.hpp"
#include "colorful/reductions.hpp"

namespace colorful {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const Vector& v);
Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j, std::size_t dim);

/// {"dimension", "kind", "classes": [{"id", "points"}]} with rationals as
/// "num/den" strings.
Json instance_to_json(const Instance& instance);

/// Throws std::invalid_argument on schema errors.
Instance instance_from_json(const Json& j);

/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& j);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

Instance read_instance(const std::filesystem::path& path);

Json choice_to_json(const Instance& instance, const ColorfulChoice& choice);
ColorfulChoice choice_from_json(const Instance& instance, const Json& j);

Json certificate_to_json(const HullCertificate& certificate);
HullCertificate certificate_from_json(const Json& j, std::size_t dim);

/// Reduction metadata: target, formula and the class roles.
Json reduction_to_json(const ReductionMap& map);

/// Rebuilds the map from its instance and the metadata written by
/// reduction_to_json.
ReductionMap reduction_from_json(const Instance& instance, const Json& j);

}  // namespace colorful
