#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/finite_ring.hpp"
#include "ringlab/ring_spec.hpp"
#include "ringlab/subset.hpp"

namespace ringlab {

using nlohmann::json;

/// Ring file schema: {"order": n, "one": i, "add": [[...]], "mul": [[...]],
/// "label": "..."} with row-major integer tables. Loading always runs the
/// full axiom validation.
inline FiniteRing ring_from_json(const json& j) {
  if (!j.is_object()) throw ring_error("ring json: expected an object");
  for (const char* key : {"order", "one", "add", "mul"})
    if (!j.contains(key)) throw ring_error(std::string("ring json: missing field '") + key + "'");
  int order = j.at("order").get<int>();
  int one = j.at("one").get<int>();
  auto add = j.at("add").get<std::vector<std::vector<int>>>();
  auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
  std::string label = j.value("label", std::string("loaded"));
  return validate_tables(order, add, mul, one, label);
}

inline FiniteRing load_ring_file(const std::string& path, int order_cap = kDefaultOrderCap) {
  std::ifstream in(path);
  if (!in) throw ring_error("cannot open ring file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ring_error("ring file " + path + ": " + e.what());
  }
  if (j.contains("order") && j.at("order").is_number_integer() &&
      j.at("order").get<long>() > order_cap)
    throw cap_error("order", j.at("order").get<long>(), order_cap);
  return ring_from_json(j);
}

inline json ring_to_json(const FiniteRing& r) {
  int n = r.order();
  json add = json::array(), mul = json::array();
  for (Elem a = 0; a < n; ++a) {
    json ra = json::array(), rm = json::array();
    for (Elem b = 0; b < n; ++b) {
      ra.push_back(r.add(a, b));
      rm.push_back(r.mul(a, b));
    }
    add.push_back(std::move(ra));
    mul.push_back(std::move(rm));
  }
  return json{{"order", n}, {"one", r.one()}, {"add", std::move(add)},
              {"mul", std::move(mul)}, {"label", r.label()}};
}

inline json subset_to_json(const Subset& s) {
  json arr = json::array();
  s.for_each([&](int e) { arr.push_back(e); });
  return arr;
}

inline json subsets_to_json(const std::vector<Subset>& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(subset_to_json(s));
  return arr;
}

/// Builds the ring described by a spec AST; file(...) nodes load and
/// validate a ring JSON file.
inline FiniteRing build_spec(const RingSpec& s, const Caps& caps = {}) {
  switch (s.kind) {
    case RingSpec::Kind::cyclic: {
      if (s.arg > caps.max_order) throw cap_error("order", s.arg, caps.max_order);
      return build_cyclic(static_cast<int>(s.arg));
    }
    case RingSpec::Kind::field: {
      if (s.arg > caps.max_order) throw cap_error("order", s.arg, caps.max_order);
      return build_field(s.arg);
    }
    case RingSpec::Kind::matrix:
      return build_matrix(static_cast<int>(s.arg), build_spec(s.children[0], caps),
                          caps.max_order);
    case RingSpec::Kind::upper_triangular:
      return build_upper_triangular(static_cast<int>(s.arg), build_spec(s.children[0], caps),
                                    caps.max_order);
    case RingSpec::Kind::product: {
      std::vector<FiniteRing> parts;
      parts.reserve(s.children.size());
      for (const auto& c : s.children) parts.push_back(build_spec(c, caps));
      std::vector<const FiniteRing*> ptrs;
      for (const auto& p : parts) ptrs.push_back(&p);
      return build_product(ptrs, caps.max_order);
    }
    case RingSpec::Kind::opposite: return build_opposite(build_spec(s.children[0], caps));
    case RingSpec::Kind::file: return load_ring_file(s.path, caps.max_order);
  }
  throw ring_error("unreachable spec kind");
}

}  // namespace ringlab
