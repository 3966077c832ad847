/*
   Copyright 2026 The qloop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qloop/serialize.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace qloop {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.to_string();
  return out;
}

Json to_json(const Weight& w) { return w.coords; }

Json to_json(const SparseMatrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out.push_back(Json::array({r, c, v.to_string()}));
  return out;
}

Json to_json(const RelationCheck& c) {
  Json out{{"relation_id", c.relation_id},
           {"indices", c.indices},
           {"modes", c.modes},
           {"status", to_string(c.status)}};
  if (c.witness) {
    Json vec = Json::array();
    for (const auto& x : c.witness->defect) vec.push_back(x.to_string());
    out["witness"] = {{"column", c.witness->column}, {"defect", vec}};
  }
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

Json to_json(const RelationReport& r) {
  Json families = Json::object();
  for (const auto& id : r.relation_ids()) {
    families[id] = {{"pass", r.count(id, CheckStatus::Pass)},
                    {"fail", r.count(id, CheckStatus::Fail)},
                    {"insufficient_data", r.count(id, CheckStatus::InsufficientData)}};
  }
  Json problems = Json::array();
  for (const auto& c : r.checks)
    if (c.status != CheckStatus::Pass) problems.push_back(to_json(c));
  return {{"passed", r.passed()},
          {"total", r.checks.size()},
          {"families", families},
          {"checks", problems}};
}

Json to_json(const IntertwinerResult& r) {
  return {{"kind", r.kind == IntertwinerKind::Braiding ? "braiding" : "twist"},
          {"rows", r.matrix.rows()},
          {"cols", r.matrix.cols()},
          {"matrix", to_json(r.matrix)},
          {"solution_space_dim", r.solution_space_dim},
          {"normalized", r.normalized},
          {"invertible", r.invertible}};
}

Json to_json(const UnipotenceReport& r) {
  return {{"unipotent", r.holds()},
          {"weight_preserving", r.weight_preserving},
          {"filtration_lowering", r.filtration_lowering},
          {"nilpotent", r.nilpotent}};
}

Json to_json(const YbeReport& r) {
  Json out{{"holds", r.holds}, {"abstained", r.abstained}};
  if (r.abstained) out["reason"] = r.reason;
  if (r.witness)
    out["witness"] = {{"row", r.witness->first},
                      {"col", r.witness->second},
                      {"defect", r.defect.to_string()}};
  else if (!r.abstained)
    out["max_defect"] = Rational(0).to_string();
  return out;
}

Json to_json(const CyclicityResult& r) {
  return {{"cyclic", r.cyclic},
          {"submodule_dim", r.submodule_dim},
          {"witness_basis_size", r.witness_basis_size}};
}

Json to_json(const ModuleRealization& m) {
  Json params = Json::array();
  for (const auto& p : m.spectral_params())
    params.push_back({{"node", p.node}, {"alpha", p.alpha.to_string()}, {"shift", p.shift}});
  Json ops = Json::object();
  for (const auto& [g, op] : m.data().kac_moody) ops[g.to_string()] = to_json(op);
  Json weights = Json::array();
  for (const auto& w : m.weights()) weights.push_back(to_json(w));
  return {{"dim", m.dim()},
          {"zeta", m.zeta().to_string()},
          {"coproduct", to_string(m.coproduct())},
          {"labels", m.labels()},
          {"weights", weights},
          {"spectral_params", params},
          {"drinfeld_modes", m.has_drinfeld() ? "closed_form" : "none"},
          {"mode_bound", m.has_drinfeld() ? -1 : 0},
          {"kac_moody", ops}};
}

// ------------------------------------------------------------------ parsing

void require_keys(const Json& obj, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [key, value] : obj.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw SchemaError(path + "." + key, "unknown field");
}

int int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(path, "expected a rational string \"num/den\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

DynkinDiagram diagram_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) {
      static const std::regex pattern("^([ADE])_?([0-9]+)$");
      std::smatch m;
      const std::string s = j.get<std::string>();
      if (!std::regex_match(s, m, pattern))
        throw SchemaError(path, "expected a diagram name such as \"A_2\"");
      return DynkinDiagram::from_type(m[1].str(), std::stoi(m[2].str()));
    }
    if (!j.is_object()) throw SchemaError(path, "expected a diagram name or object");
    if (j.contains("edges")) {
      require_keys(j, path, {"rank", "edges", "label"});
      if (!j.contains("rank")) throw SchemaError(path + ".rank", "missing field");
      const int rank = int_from_json(j["rank"], path + ".rank");
      std::vector<std::pair<Vertex, Vertex>> edges;
      const Json& ej = j["edges"];
      if (!ej.is_array()) throw SchemaError(path + ".edges", "expected an array");
      for (std::size_t t = 0; t < ej.size(); ++t) {
        const std::string ep = path + ".edges[" + std::to_string(t) + "]";
        if (!ej[t].is_array() || ej[t].size() != 2) throw SchemaError(ep, "expected [i, j]");
        edges.emplace_back(int_from_json(ej[t][0], ep + "[0]"), int_from_json(ej[t][1], ep + "[1]"));
      }
      const std::string label = j.contains("label") ? j["label"].get<std::string>() : "custom";
      return DynkinDiagram(rank, edges, label);
    }
    require_keys(j, path, {"type", "rank"});
    if (!j.contains("type") || !j["type"].is_string())
      throw SchemaError(path + ".type", "expected \"A\", \"D\" or \"E\"");
    if (!j.contains("rank")) throw SchemaError(path + ".rank", "missing field");
    return DynkinDiagram::from_type(j["type"].get<std::string>(),
                                    int_from_json(j["rank"], path + ".rank"));
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

Coproduct coproduct_from_json(const Json& j, const std::string& path) {
  if (j == "circ") return Coproduct::Circ;
  if (j == "bullet") return Coproduct::Bullet;
  if (j == "drinfeld") return Coproduct::Drinfeld;
  throw SchemaError(path, "expected \"circ\", \"bullet\" or \"drinfeld\"");
}

}  // namespace qloop
