#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "vko/certifier.hpp"
#include "vko/cocycle.hpp"
#include "vko/constructors.hpp"
#include "vko/deleted_product.hpp"
#include "vko/errors.hpp"
#include "vko/genpos.hpp"
#include "vko/group_calculus.hpp"
#include "vko/pair_system.hpp"
#include "vko/simplex.hpp"

// JSON file formats:
//   complex      {"vertices": [int...], "maximal": [[int...]...], "labels": {"id": "text"}}
//   map          {"m": int, "params": {"vertex": "p/q"...}}          (moment curve)
//                {"m": int, "points": {"vertex": ["p/q"...]}}        (explicit points)
//   spec         {"m": int, "provenance": str, "complex": {...}, "sigma": [[[v...],[v...]]...]}
//   certificate  per-condition results, digests, map parameters, verdict
//   dp dump      cells per dimension with canonical keys

namespace vko {

using json = nlohmann::json;

inline json to_json(const Complex& k) {
  json j;
  j["vertices"] = k.vertex_ids();
  json maximal = json::array();
  for (const Simplex& s : k.maximal_simplices())
    if (s.dimension() >= 1) maximal.push_back(s.vertices());
  j["maximal"] = std::move(maximal);
  if (!k.labels().empty()) {
    json labels = json::object();
    for (const auto& [v, text] : k.labels()) labels[std::to_string(v)] = text;
    j["labels"] = std::move(labels);
  }
  return j;
}

inline Complex complex_from_json(const json& j) {
  if (!j.is_object()) throw input_error("complex: expected a JSON object");
  std::vector<Simplex> maximal;
  for (const json& row : j.value("maximal", json::array())) {
    std::vector<int> verts;
    for (const json& v : row) verts.push_back(v.get<int>());
    maximal.emplace_back(std::move(verts));
  }
  std::map<int, std::string> labels;
  if (j.contains("labels"))
    for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it)
      labels[std::stoi(it.key())] = it.value().get<std::string>();
  Complex k = Complex::from_maximal(maximal);
  std::vector<int> vertices;
  for (const json& v : j.value("vertices", json::array())) vertices.push_back(v.get<int>());
  k = with_isolated_vertices(std::move(k), vertices);
  return Complex::from_maximal(k.maximal_simplices(), std::move(labels));
}

inline json to_json(const GeneralPositionMap& f) {
  json j;
  j["m"] = f.target_dim();
  if (f.is_moment()) {
    json params = json::object();
    for (const auto& [v, t] : f.parameters()) params[std::to_string(v)] = format_rational(t);
    j["params"] = std::move(params);
  } else {
    json points = json::object();
    for (const auto& [v, p] : f.points()) {
      json coords = json::array();
      for (const Rational& x : p) coords.push_back(format_rational(x));
      points[std::to_string(v)] = std::move(coords);
    }
    j["points"] = std::move(points);
  }
  return j;
}

inline GeneralPositionMap map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m")) throw input_error("map: expected {\"m\":..., ...}");
  const int m = j["m"].get<int>();
  if (j.contains("points")) {
    std::map<int, std::vector<Rational>> points;
    for (auto it = j["points"].begin(); it != j["points"].end(); ++it) {
      std::vector<Rational> p;
      for (const json& x : it.value()) p.push_back(parse_rational(x.get<std::string>()));
      points[std::stoi(it.key())] = std::move(p);
    }
    return GeneralPositionMap::explicit_points(m, std::move(points));
  }
  if (!j.contains("params")) throw input_error("map: needs \"params\" or \"points\"");
  std::map<int, Rational> params;
  for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
    params[std::stoi(it.key())] = parse_rational(it.value().get<std::string>());
  return GeneralPositionMap::moment_params(m, std::move(params));
}

inline json to_json(const PairSystem& sigma) {
  json pairs = json::array();
  for (const UnorderedCell& c : sigma.pairs)
    pairs.push_back(json::array({c.first.vertices(), c.second.vertices()}));
  return pairs;
}

inline json to_json(const ObstructorSpec& spec) {
  json j;
  j["m"] = spec.m;
  j["provenance"] = spec.provenance;
  j["complex"] = to_json(spec.complex);
  j["sigma"] = to_json(spec.sigma);
  return j;
}

inline ObstructorSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("complex") || !j.contains("sigma"))
    throw input_error("spec: expected {\"m\", \"complex\", \"sigma\", ...}");
  ObstructorSpec spec;
  spec.m = j["m"].get<int>();
  spec.complex = complex_from_json(j["complex"]);
  spec.provenance = j.value("provenance", std::string());
  std::vector<std::pair<Simplex, Simplex>> pairs;
  for (const json& row : j["sigma"]) {
    if (!row.is_array() || row.size() != 2)
      throw input_error("sigma: each pair must be [[v...],[v...]]");
    std::vector<int> a, b;
    for (const json& v : row[0]) a.push_back(v.get<int>());
    for (const json& v : row[1]) b.push_back(v.get<int>());
    pairs.emplace_back(Simplex(std::move(a)), Simplex(std::move(b)));
  }
  spec.sigma = PairSystem::create(spec.complex, spec.m, pairs);
  return spec;
}

inline json to_json(const Certificate& cert) {
  json j;
  j["complex_digest"] = cert.complex_digest;
  j["sigma_digest"] = cert.sigma_digest;
  j["m"] = cert.m;
  json c1;
  c1["pass"] = cert.condition1.pass;
  if (cert.condition1.witness) c1["witness_cell"] =
      json::array({cert.condition1.witness->first.vertices(), cert.condition1.witness->second.vertices()});
  j["condition1_cycle"] = std::move(c1);
  json c2;
  c2["pass"] = cert.condition2.pass;
  c2["count"] = cert.condition2.count;
  c2["map"] = to_json(cert.condition2.map);
  j["condition2_parity"] = std::move(c2);
  json c3;
  c3["pass"] = cert.condition3.pass;
  if (cert.condition3.witness) c3["witness_simplex"] = cert.condition3.witness->vertices();
  j["condition3_evenness"] = std::move(c3);
  j["verdict"] = cert.obstructor ? "obstructor" : "not_obstructor";
  j["meaning"] = cert.meaning;
  return j;
}

inline json to_json(const DeletedProductComplex& dp) {
  json j;
  j["source_digest"] = complex_digest(dp.source());
  j["dimension"] = dp.dimension();
  json cells = json::object();
  for (int d = 0; d <= dp.dimension(); ++d) {
    json row = json::array();
    for (const UnorderedCell& c : dp.cells(d))
      row.push_back(json::array({c.first.vertices(), c.second.vertices()}));
    cells[std::to_string(d)] = std::move(row);
  }
  j["cells"] = std::move(cells);
  return j;
}

inline json to_json(const IntersectionCochain& c) {
  json j;
  j["m"] = c.m;
  j["complex_digest"] = c.complex_digest;
  j["map_digest"] = c.map_digest;
  std::vector<int> bits(c.values.size());
  for (std::size_t i = 0; i < c.values.size(); ++i) bits[i] = c.values.get(i);
  j["values"] = std::move(bits);
  return j;
}

inline json to_json(const Derivation& d) {
  json j;
  j["expr"] = d.expr_text;
  j["rule"] = d.rule;
  j["bound"] = d.bound;
  if (!d.note.empty()) j["note"] = d.note;
  if (!d.children.empty()) {
    json kids = json::array();
    for (const Derivation& c : d.children) kids.push_back(to_json(c));
    j["children"] = std::move(kids);
  }
  return j;
}

}  // namespace vko
