// Field-spec ingestion (TOML or JSON).

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#define TOML_EXCEPTIONS 1
#include <tomlplusplus/toml.hpp>

#include "ringkt/number_field.hpp"

namespace ringkt {

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw Error(ErrorKind::MalformedSpec, "empty rational");
  if (t[0] == '+') t.erase(0, 1);
  Rational q;
  if (q.set_str(t, 10) != 0) throw Error(ErrorKind::MalformedSpec, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::MalformedSpec, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

namespace {

Integer json_integer(const nlohmann::json& v, const char* key) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer z;
    if (z.set_str(v.get<std::string>(), 10) == 0) return z;
  }
  throw Error(ErrorKind::MalformedSpec, std::string("'") + key + "' entries must be integers");
}

Rational json_rational(const nlohmann::json& v, const char* key) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorKind::MalformedSpec, std::string("'") + key + "' entries must be rational strings");
}

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::MalformedSpec, std::string("missing key '") + key + "'");
  return j.at(key);
}

FieldSpec from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::MalformedSpec, "field spec must be an object");
  FieldSpec s;
  s.name = j.value("name", std::string("unnamed"));
  const auto& deg = require(j, "degree");
  const auto& m = require(j, "m");
  if (!deg.is_number_integer() || !m.is_number_integer())
    throw Error(ErrorKind::MalformedSpec, "degree and m must be integers");
  s.degree = deg.get<int>();
  s.m = m.get<int>();
  const auto& poly = require(j, "poly");
  if (!poly.is_array()) throw Error(ErrorKind::MalformedSpec, "'poly' must be a list");
  for (const auto& c : poly) s.poly.push_back(json_integer(c, "poly"));
  const auto& basis = require(j, "integral_basis");
  if (!basis.is_array()) throw Error(ErrorKind::MalformedSpec, "'integral_basis' must be a list of lists");
  for (const auto& row : basis) {
    if (!row.is_array()) throw Error(ErrorKind::MalformedSpec, "'integral_basis' must be a list of lists");
    RatVector r;
    for (const auto& x : row) r.push_back(json_rational(x, "integral_basis"));
    s.integral_basis.push_back(std::move(r));
  }
  const auto& zeta = require(j, "zeta");
  if (!zeta.is_array()) throw Error(ErrorKind::MalformedSpec, "'zeta' must be a list");
  for (const auto& x : zeta) s.zeta.push_back(json_rational(x, "zeta"));
  return s;
}

// TOML -> JSON, then one code path for validation.
nlohmann::json toml_to_json(const toml::node& node) {
  if (auto t = node.as_table()) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : *t) j[std::string(k.str())] = toml_to_json(v);
    return j;
  }
  if (auto a = node.as_array()) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : *a) j.push_back(toml_to_json(v));
    return j;
  }
  if (auto v = node.as_integer()) return static_cast<long long>(v->get());
  if (auto v = node.as_string()) return v->get();
  if (auto v = node.as_boolean()) return v->get();
  if (node.is_floating_point()) throw Error(ErrorKind::MalformedSpec, "floating-point values are not allowed");
  throw Error(ErrorKind::MalformedSpec, "unsupported TOML value");
}

// Wrong value types surface as json type errors.
FieldSpec checked_from_json(const nlohmann::json& j) {
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, e.what());
  }
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
  std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::MalformedSpec, std::string("JSON: ") + e.what());
    }
    return checked_from_json(j);
  }
  toml::table tbl;
  try {
    tbl = toml::parse(text);
  } catch (const toml::parse_error& e) {
    throw Error(ErrorKind::MalformedSpec, std::string("TOML: ") + std::string(e.description()));
  }
  return checked_from_json(toml_to_json(tbl));
}

FieldSpec load_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_field_spec(ss.str());
}

}  // namespace ringkt
