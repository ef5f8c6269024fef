#pragma once

// Ideal files: one JSON document
//   {"ring": {"vars": [...], "field": "QQ" | {"Fp": p}},
//    "generators": ["...", ...],
//    "orderings": {"name": spec, ...}}
// with ordering specs {"name": n} | {"matrix": [[...]]} | {"weight": [...], "then": spec}.
// Integers that do not fit a JSON number may be written as decimal strings.

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "gwalk/groebner.hpp"
#include "gwalk/ordering.hpp"
#include "gwalk/parse.hpp"

namespace gwalk {

using AnyIdeal = std::variant<Ideal<Rationals>, Ideal<PrimeField>>;

struct IdealFile {
  AnyIdeal ideal;
  std::map<std::string, OrderingSpec> orderings;
};

namespace detail {

using json = nlohmann::json;

inline InvalidInput schema(const std::string& what) { return InvalidInput("ideal file: " + what); }

inline Int int_from_json(const json& j, const char* where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(std::string_view(j.get_ref<const std::string&>()));
    } catch (const std::invalid_argument&) {
    }
  }
  throw schema(std::string(where) + " must be an integer");
}

inline json int_to_json(const Int& v) {
  if (v.is_small()) return v.small();
  return v.to_string();
}

inline IntVector vector_from_json(const json& j, const char* where) {
  if (!j.is_array()) throw schema(std::string(where) + " must be an array");
  IntVector out;
  for (const auto& x : j) out.push_back(int_from_json(x, where));
  return out;
}

inline json vector_to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

inline bool valid_name(const std::string& s) {
  if (s.empty() || (std::isalpha(static_cast<unsigned char>(s[0])) == 0 && s[0] != '_')) return false;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  }
  return true;
}

template <class F>
IdealFile build(const std::vector<std::string>& vars, F field, const json& gens) {
  const auto ring = make_ring(vars, std::move(field));
  std::vector<Polynomial<F>> polys;
  for (const auto& g : gens) {
    if (!g.is_string()) throw schema("generators must be strings");
    polys.push_back(parse_polynomial(g.get_ref<const std::string&>(), ring));
  }
  return IdealFile{Ideal<F>(ring, std::move(polys)), {}};
}

}  // namespace detail

inline OrderingSpec ordering_spec_from_json(const nlohmann::json& j) {
  using detail::schema;
  if (!j.is_object()) throw schema("ordering spec must be an object");
  if (j.contains("name")) {
    if (j.size() != 1 || !j["name"].is_string()) throw schema("named ordering spec is {\"name\": string}");
    return OrderingSpec::named(j["name"].get<std::string>());
  }
  if (j.contains("matrix")) {
    if (j.size() != 1 || !j["matrix"].is_array()) throw schema("matrix ordering spec is {\"matrix\": [[...]]}");
    std::vector<IntVector> rows;
    for (const auto& r : j["matrix"]) rows.push_back(detail::vector_from_json(r, "matrix row"));
    return OrderingSpec::from_matrix(std::move(rows));
  }
  if (j.contains("weight")) {
    if (j.size() != 2 || !j.contains("then")) throw schema("weight ordering spec is {\"weight\": [...], \"then\": spec}");
    return OrderingSpec::weighted(detail::vector_from_json(j["weight"], "weight"), ordering_spec_from_json(j["then"]));
  }
  throw schema("ordering spec needs one of name, matrix, weight");
}

inline nlohmann::json ordering_spec_to_json(const OrderingSpec& s) {
  nlohmann::json j = nlohmann::json::object();
  switch (s.kind) {
    case OrderingSpec::Kind::Named:
      j["name"] = s.name;
      break;
    case OrderingSpec::Kind::Matrix: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : s.matrix) rows.push_back(detail::vector_to_json(r));
      j["matrix"] = std::move(rows);
      break;
    }
    case OrderingSpec::Kind::Weight:
      j["weight"] = detail::vector_to_json(s.weight);
      j["then"] = ordering_spec_to_json(*s.then);
      break;
  }
  return j;
}

/// Ordering spec from command-line text: a JSON object, a name from the
/// file's ordering map, or a built-in name.
inline OrderingSpec ordering_spec_from_text(const std::string& text, const std::map<std::string, OrderingSpec>& named = {}) {
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidOrdering(std::string("malformed ordering spec: ") + e.what());
    }
    return ordering_spec_from_json(j);
  }
  if (auto it = named.find(text); it != named.end()) return it->second;
  return OrderingSpec::named(text);
}

inline std::size_t nvars(const AnyIdeal& id) {
  return std::visit([](const auto& i) { return i.nvars(); }, id);
}

inline IdealFile parse_ideal_file(std::string_view text) {
  using detail::schema;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw schema(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw schema("top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "ring" && key != "generators" && key != "orderings") throw schema("unknown key '" + key + "'");
  }
  if (!doc.contains("ring") || !doc["ring"].is_object()) throw schema("missing ring");
  const auto& ring = doc["ring"];
  if (!ring.contains("vars") || !ring["vars"].is_array()) throw schema("ring.vars must be an array of names");
  std::vector<std::string> vars;
  for (const auto& v : ring["vars"]) {
    if (!v.is_string() || !detail::valid_name(v.get<std::string>())) throw schema("invalid variable name");
    vars.push_back(v.get<std::string>());
  }
  if (vars.empty()) throw schema("ring needs at least one variable");
  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty()) {
    throw schema("generators must be a nonempty array");
  }
  if (!ring.contains("field")) throw schema("missing ring.field");
  const auto& field = ring["field"];
  IdealFile out = [&] {
    if (field.is_string() && field.get<std::string>() == "QQ") return detail::build(vars, Rationals{}, doc["generators"]);
    if (field.is_object() && field.size() == 1 && field.contains("Fp")) {
      const Int p = detail::int_from_json(field["Fp"], "Fp");
      if (p.sign() <= 0 || !p.is_small()) throw InvalidInput("field modulus not prime");
      return detail::build(vars, PrimeField(static_cast<std::uint64_t>(p.small())), doc["generators"]);
    }
    throw schema("field must be \"QQ\" or {\"Fp\": p}");
  }();
  if (doc.contains("orderings")) {
    if (!doc["orderings"].is_object()) throw schema("orderings must be an object");
    for (const auto& [name, spec] : doc["orderings"].items()) {
      auto s = ordering_spec_from_json(spec);
      (void)make_ordering(s, vars.size());
      out.orderings.emplace(name, std::move(s));
    }
  }
  return out;
}

inline IdealFile load_ideal(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ideal_file(ss.str());
}

/// Serializes generators in lex term order.
inline std::string dump_ideal_file(const IdealFile& f) {
  nlohmann::ordered_json doc;
  std::visit(
      [&](const auto& id) {
        using F = std::decay_t<decltype(id.ring()->field)>;
        nlohmann::ordered_json ring;
        ring["vars"] = id.ring()->vars;
        if constexpr (std::is_same_v<F, Rationals>) {
          ring["field"] = "QQ";
        } else {
          ring["field"] = {{"Fp", id.ring()->field.modulus()}};
        }
        doc["ring"] = std::move(ring);
        const auto lex = TermOrdering::lex(id.nvars());
        auto gens = nlohmann::ordered_json::array();
        for (const auto& g : id.generators()) gens.push_back(format_polynomial(g, lex));
        doc["generators"] = std::move(gens);
      },
      f.ideal);
  if (!f.orderings.empty()) {
    nlohmann::ordered_json ords = nlohmann::ordered_json::object();
    for (const auto& [name, spec] : f.orderings) ords[name] = nlohmann::ordered_json::parse(ordering_spec_to_json(spec).dump());
    doc["orderings"] = std::move(ords);
  }
  return doc.dump(2) + "\n";
}

inline void save_ideal(const IdealFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << dump_ideal_file(f);
}

}  // namespace gwalk
