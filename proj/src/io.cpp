#include "colorful/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace colorful {

namespace {

std::size_t class_position(const Instance& instance, long id) {
  for (std::size_t c = 0; c < instance.num_classes(); ++c)
    if (instance.classes()[c].id == id) return c;
  throw std::invalid_argument("unknown class id " + std::to_string(id));
}

std::vector<std::size_t> positions(const Json& j) {
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(v.get<std::size_t>());
  return out;
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Vector vector_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw std::invalid_argument("point must be an array");
  if (j.size() != dim) {
    throw std::invalid_argument("point has " + std::to_string(j.size()) +
                                " coordinates, expected " + std::to_string(dim));
  }
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rational_from_json(j[i]);
  return v;
}

Json instance_to_json(const Instance& instance) {
  Json out;
  out["dimension"] = instance.dimension();
  out["kind"] = instance.kind() == InstanceKind::Caratheodory ? "caratheodory" : "ncp";
  Json classes = Json::array();
  for (const auto& c : instance.classes()) {
    Json cls;
    cls["id"] = c.id;
    Json points = Json::array();
    for (const auto& p : c.points) points.push_back(to_json(p));
    cls["points"] = std::move(points);
    classes.push_back(std::move(cls));
  }
  out["classes"] = std::move(classes);
  return out;
}

Instance instance_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("instance must be an object");
    const auto dim = j.at("dimension").get<std::size_t>();
    const auto kind_text = j.at("kind").get<std::string>();
    InstanceKind kind;
    if (kind_text == "caratheodory") {
      kind = InstanceKind::Caratheodory;
    } else if (kind_text == "ncp") {
      kind = InstanceKind::Ncp;
    } else {
      throw std::invalid_argument("unknown kind '" + kind_text + "'");
    }
    std::vector<ColorClass> classes;
    for (const auto& c : j.at("classes")) {
      ColorClass cls;
      cls.id = c.at("id").get<int>();
      for (const auto& p : c.at("points")) cls.points.push_back(vector_from_json(p, dim));
      classes.push_back(std::move(cls));
    }
    return Instance(dim, std::move(classes), kind);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("instance schema: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Instance read_instance(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

Json choice_to_json(const Instance& instance, const ColorfulChoice& choice) {
  Json out;
  out["m"] = choice.m;
  Json sel = Json::array();
  for (const auto& r : choice.selections) {
    Json s;
    s["class"] = instance.classes().at(r.color).id;
    s["index"] = r.index;
    s["point"] = to_json(point_at(instance, r));
    sel.push_back(std::move(s));
  }
  out["selections"] = std::move(sel);
  return out;
}

ColorfulChoice choice_from_json(const Instance& instance, const Json& j) {
  try {
    std::vector<PointRef> refs;
    for (const auto& s : j.at("selections")) {
      const auto pos = class_position(instance, s.at("class").get<long>());
      const auto index = s.at("index").get<std::size_t>();
      if (index >= instance.classes()[pos].points.size()) {
        throw std::invalid_argument("selection index out of range");
      }
      refs.push_back({pos, index});
    }
    return make_choice(std::move(refs));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("choice schema: ") + e.what());
  }
}

Json certificate_to_json(const HullCertificate& certificate) {
  Json out;
  out["kind"] = certificate.inside() ? "inside" : "outside";
  if (certificate.inside()) {
    Json coeffs = Json::array();
    for (const auto& c : certificate.coefficients) coeffs.push_back(to_json(c));
    out["coefficients"] = std::move(coeffs);
  } else {
    out["separator"] = to_json(certificate.separator);
  }
  return out;
}

HullCertificate certificate_from_json(const Json& j, std::size_t dim) {
  try {
    HullCertificate out;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "inside") {
      out.kind = HullCertificate::Kind::Inside;
      for (const auto& c : j.at("coefficients")) out.coefficients.push_back(rational_from_json(c));
    } else if (kind == "outside") {
      out.separator = vector_from_json(j.at("separator"), dim);
    } else {
      throw std::invalid_argument("certificate kind must be inside or outside");
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate schema: ") + e.what());
  }
}

Json reduction_to_json(const ReductionMap& map) {
  Json out;
  out["target"] = map.target == ReductionTarget::LocalNcp ? "l-ncp" : "g-ncp";
  out["num_variables"] = map.formula.num_variables;
  Json clauses = Json::array();
  for (const auto& c : map.formula.clauses) {
    Json cl;
    cl["weight"] = c.weight;
    cl["literals"] = c.literals;
    clauses.push_back(std::move(cl));
  }
  out["clauses"] = std::move(clauses);
  out["variable_classes"] = map.variable_classes;
  out["helper_classes"] = map.helper_classes;
  out["clause_helper_classes"] = map.clause_helper_classes;
  return out;
}

ReductionMap reduction_from_json(const Instance& instance, const Json& j) {
  try {
    WeightedFormula f;
    f.num_variables = j.at("num_variables").get<std::size_t>();
    for (const auto& c : j.at("clauses")) {
      Clause cl;
      cl.weight = c.at("weight").get<long>();
      cl.literals = c.at("literals").get<std::vector<int>>();
      f.clauses.push_back(std::move(cl));
    }
    const auto target_text = j.at("target").get<std::string>();
    if (target_text != "l-ncp" && target_text != "g-ncp") {
      throw std::invalid_argument("unknown reduction target '" + target_text + "'");
    }
    ReductionMap map{instance,
                     std::move(f),
                     target_text == "l-ncp" ? ReductionTarget::LocalNcp
                                            : ReductionTarget::GlobalNcp,
                     positions(j.at("variable_classes")),
                     positions(j.at("helper_classes")),
                     positions(j.at("clause_helper_classes"))};
    for (auto c : map.variable_classes) {
      if (c >= instance.num_classes() || instance.classes()[c].points.size() != 2) {
        throw std::invalid_argument("reduction map: variable class mismatch");
      }
    }
    return map;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("reduction schema: ") + e.what());
  }
}

}  // namespace colorful
