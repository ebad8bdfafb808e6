#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "corado/bergman.hpp"
#include "corado/chow.hpp"
#include "corado/error.hpp"
#include "corado/ground.hpp"
#include "corado/matroid.hpp"
#include "corado/rado.hpp"

namespace corado {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace io_detail {

inline void check_label(const std::string& l) {
  if (l.find('^') != std::string::npos)
    fail(errc::validation_failed,
         "label '" + l + "' uses the reserved hat marker '^' (hats only appear in output)");
}

/// Labels may be written as strings or as integers ("1" and 1 coincide).
inline std::string label_of(const json& j) {
  if (j.is_string()) {
    std::string l = j.get<std::string>();
    check_label(l);
    return l;
  }
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(errc::validation_failed, "labels must be strings or integers, got: " + j.dump());
}

inline std::vector<std::string> label_list(const json& j, const char* what) {
  if (!j.is_array()) fail(errc::validation_failed, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) out.push_back(label_of(item));
  return out;
}

inline mask_t subset_of_ground(const json& j, const ground_set& g, const char* what) {
  return g.mask_of(label_list(j, what));
}

inline const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) fail(errc::validation_failed, std::string("missing field '") + name + "'");
  return *it;
}

inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    fail(errc::json_syntax, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                ": " + e.what());
  }
}

}  // namespace io_detail

/// Builds a matroid from its JSON spec.  Forms: bases, uniform, graphic,
/// hyperplane, and the wrappers dual/sum/relabel around nested specs.
inline matroid matroid_from_json(const json& j) {
  using namespace io_detail;
  if (!j.is_object()) fail(errc::validation_failed, "matroid spec must be a JSON object");
  std::string type = field(j, "type").is_string() ? field(j, "type").get<std::string>() : "";
  try {
    if (type == "bases") {
      ground_set g(label_list(field(j, "ground"), "ground"));
      const json& arr = field(j, "bases");
      if (!arr.is_array()) fail(errc::validation_failed, "bases must be an array of subsets");
      std::vector<mask_t> bases;
      for (const auto& b : arr) bases.push_back(subset_of_ground(b, g, "basis"));
      return matroid::from_bases(std::move(g), std::move(bases));
    }
    if (type == "uniform") {
      const json& k = field(j, "k");
      if (!k.is_number_integer()) fail(errc::validation_failed, "k must be an integer");
      return matroid::uniform(k.get<int>(), ground_set(label_list(field(j, "ground"), "ground")));
    }
    if (type == "graphic") {
      std::vector<std::string> vertices = label_list(field(j, "vertices"), "vertices");
      const json& arr = field(j, "edges");
      if (!arr.is_array()) fail(errc::validation_failed, "edges must be an array");
      std::vector<std::tuple<std::string, std::string, std::string>> edges;
      for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 3)
          fail(errc::validation_failed, "each edge is [endpoint, endpoint, label]");
        edges.emplace_back(label_of(e[0]), label_of(e[1]), label_of(e[2]));
      }
      return matroid::graphic(vertices, edges);
    }
    if (type == "hyperplane") {
      ground_set g(label_list(field(j, "ground"), "ground"));
      mask_t support = subset_of_ground(field(j, "support"), g, "support");
      return matroid::hyperplane(std::move(g), support);
    }
    if (type == "dual") return matroid_from_json(field(j, "of")).dual();
    if (type == "sum")
      return matroid::direct_sum(matroid_from_json(field(j, "left")),
                                 matroid_from_json(field(j, "right")));
    if (type == "relabel") {
      matroid m = matroid_from_json(field(j, "of"));
      const json& table = field(j, "map");
      if (!table.is_object()) fail(errc::validation_failed, "map must be an object");
      std::map<std::string, std::string> f;
      for (const auto& [k, v] : table.items()) {
        check_label(k);
        f[k] = label_of(v);
      }
      return m.relabel(f);
    }
  } catch (const error& e) {
    if (e.code() == errc::json_syntax || e.code() == errc::unknown_type ||
        e.code() == errc::validation_failed)
      throw;
    fail(errc::validation_failed, e.what());
  }
  fail(errc::unknown_type, "unknown matroid spec type '" + type + "'");
}

inline matroid parse_matroid(const std::string& text) {
  return matroid_from_json(io_detail::parse_text(text));
}

inline ordered_json subset_to_json(const ground_set& g, mask_t s) {
  ordered_json arr = ordered_json::array();
  for (const auto& l : g.labels_of(s)) arr.push_back(l);
  return arr;
}

/// Canonical rendering: always the bases form, family in canonical order,
/// each subset as labels in ground order.  Deterministic byte-for-byte.
inline ordered_json matroid_to_json(const matroid& m) {
  ordered_json j;
  j["type"] = "bases";
  j["ground"] = ordered_json::array();
  for (const auto& l : m.ground().labels()) j["ground"].push_back(l);
  j["bases"] = ordered_json::array();
  for (mask_t b : m.bases()) j["bases"].push_back(subset_to_json(m.ground(), b));
  return j;
}

inline std::string render_matroid(const matroid& m) { return matroid_to_json(m).dump(); }

/// A system spec is a bare array of members, or an object with "members"
/// and an optional "ground" (which must then match the given ground set).
inline set_system system_from_json(const json& j, const ground_set& ground) {
  using namespace io_detail;
  const json* members = nullptr;
  if (j.is_array()) {
    members = &j;
  } else if (j.is_object()) {
    if (j.contains("ground")) {
      ground_set declared(label_list(j.at("ground"), "ground"));
      if (declared != ground)
        fail(errc::ground_set_mismatch, "system declares a different ground set");
    }
    members = &field(j, "members");
  } else {
    fail(errc::validation_failed, "system spec must be an array or an object");
  }
  if (!members->is_array()) fail(errc::validation_failed, "members must be an array of subsets");
  std::vector<mask_t> ms;
  for (const auto& m : *members) ms.push_back(subset_of_ground(m, ground, "member"));
  return set_system(ground, std::move(ms));
}

inline set_system parse_system(const std::string& text, const ground_set& ground) {
  return system_from_json(io_detail::parse_text(text), ground);
}

/// A standalone system (for the transversal command) must carry its ground.
inline set_system parse_standalone_system(const std::string& text) {
  using namespace io_detail;
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("ground"))
    fail(errc::validation_failed, "a standalone system needs an explicit \"ground\"");
  ground_set g(label_list(j.at("ground"), "ground"));
  return system_from_json(j, g);
}

inline ordered_json system_to_json(const set_system& s) {
  ordered_json j;
  j["ground"] = ordered_json::array();
  for (const auto& l : s.ground().labels()) j["ground"].push_back(l);
  j["members"] = ordered_json::array();
  for (int i = 0; i < s.count(); ++i) j["members"].push_back(subset_to_json(s.ground(), s.member(i)));
  return j;
}

/// Graph spec: {"left": [...], "right": [...], "edges": [[l, r], ...]}.
inline bipartite_graph parse_graph(const std::string& text) {
  using namespace io_detail;
  json j = parse_text(text);
  if (!j.is_object()) fail(errc::validation_failed, "graph spec must be a JSON object");
  ground_set left(label_list(field(j, "left"), "left"));
  ground_set right(label_list(field(j, "right"), "right"));
  const json& arr = field(j, "edges");
  if (!arr.is_array()) fail(errc::validation_failed, "edges must be an array");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2)
      fail(errc::validation_failed, "each edge is [left-label, right-label]");
    edges.emplace_back(label_of(e[0]), label_of(e[1]));
  }
  return bipartite_graph(std::move(left), std::move(right), edges);
}

/// Monomial spec: {"flats": [[...], ...], "exponents": [a1, ...]}.
inline simplicial_monomial monomial_from_json(const json& j, const matroid& m) {
  using namespace io_detail;
  if (!j.is_object()) fail(errc::validation_failed, "monomial spec must be a JSON object");
  const json& flats = field(j, "flats");
  const json& exps = field(j, "exponents");
  if (!flats.is_array() || !exps.is_array())
    fail(errc::validation_failed, "flats and exponents must be arrays");
  std::vector<mask_t> fs;
  for (const auto& f : flats) fs.push_back(subset_of_ground(f, m.ground(), "flat"));
  std::vector<int> as;
  for (const auto& a : exps) {
    if (!a.is_number_integer()) fail(errc::validation_failed, "exponents must be integers");
    as.push_back(a.get<int>());
  }
  return simplicial_monomial(m, std::move(fs), std::move(as));
}

inline ordered_json monomial_to_json(const matroid& m, const simplicial_monomial& mono) {
  ordered_json j;
  j["flats"] = ordered_json::array();
  for (mask_t f : mono.flats()) j["flats"].push_back(subset_to_json(m.ground(), f));
  j["exponents"] = mono.exponents();
  return j;
}

inline ordered_json fan_to_json(const bergman_fan& f) {
  ordered_json j;
  j["ground"] = ordered_json::array();
  for (const auto& l : f.ground().labels()) j["ground"].push_back(l);
  j["rays"] = ordered_json::array();
  for (const auto& [flat, vec] : f.rays()) {
    ordered_json ray;
    ray["flat"] = subset_to_json(f.ground(), flat);
    ray["vector"] = vec;
    j["rays"].push_back(std::move(ray));
  }
  j["cone_count"] = f.cones().size();
  j["dimension"] = f.dimension();
  j["maximal_cones"] = ordered_json::array();
  for (const auto& cone : f.maximal_cones()) {
    ordered_json c = ordered_json::array();
    for (mask_t flat : cone) c.push_back(subset_to_json(f.ground(), flat));
    j["maximal_cones"].push_back(std::move(c));
  }
  return j;
}

}  // namespace corado
