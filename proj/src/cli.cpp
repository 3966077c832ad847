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

#include "qloop/cli.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace qloop {

namespace {

struct Context {
  DynkinDiagram diagram = DynkinDiagram::type_a(1);
  Rational zeta{2};
  Coproduct coproduct = Coproduct::Circ;
};

Rational zeta_from_json(const Json& j, const std::string& path) {
  const Rational z = rational_from_json(j, path);
  if (!is_valid_zeta(z)) throw SchemaError(path, "zeta must be nonzero and not a root of unity");
  return z;
}

Context context_from_job(const Json& job) {
  Context ctx;
  if (!job.contains("diagram")) throw SchemaError("$.diagram", "missing field");
  ctx.diagram = diagram_from_json(job["diagram"], "$.diagram");
  if (!ctx.diagram.is_type_a())
    throw SchemaError("$.diagram", "modules are built from type A evaluation modules");
  if (job.contains("zeta")) ctx.zeta = zeta_from_json(job["zeta"], "$.zeta");
  if (job.contains("coproduct")) ctx.coproduct = coproduct_from_json(job["coproduct"], "$.coproduct");
  return ctx;
}

StandardFactor factor_from_json(const Json& f, const std::string& path, const Rational& alpha,
                                const DynkinDiagram& d) {
  require_keys(f, path, {"node", "alpha", "tau"});
  if (!f.contains("node")) throw SchemaError(path + ".node", "missing field");
  StandardFactor out{int_from_json(f["node"], path + ".node"), alpha, 0};
  if (out.node < 1 || out.node > d.rank()) throw SchemaError(path + ".node", "vertex outside the diagram");
  if (f.contains("alpha")) out.alpha = rational_from_json(f["alpha"], path + ".alpha");
  if (out.alpha.is_zero()) throw SchemaError(path + ".alpha", "spectral parameter must be nonzero");
  if (f.contains("tau")) out.shift = int_from_json(f["tau"], path + ".tau");
  return out;
}

std::vector<StandardFactor> factors_from_json(const Json& obj, const std::string& path,
                                              const DynkinDiagram& d) {
  if (obj.contains("factors")) {
    for (const char* k : {"node", "alpha", "tau"})
      if (obj.contains(k)) throw SchemaError(path + "." + k, "give either factors or a single node");
    const Json& fs = obj["factors"];
    if (!fs.is_array() || fs.empty()) throw SchemaError(path + ".factors", "expected a nonempty array");
    std::vector<StandardFactor> out;
    for (std::size_t t = 0; t < fs.size(); ++t)
      out.push_back(factor_from_json(fs[t], path + ".factors[" + std::to_string(t) + "]", Rational(1), d));
    return out;
  }
  Json single = Json::object();
  for (const char* k : {"node", "alpha", "tau"})
    if (obj.contains(k)) single[k] = obj[k];
  if (!single.contains("node")) throw SchemaError(path + ".node", "missing field (or give factors)");
  return {factor_from_json(single, path, Rational(1), d)};
}

ModulePtr build_module(const std::vector<StandardFactor>& spec, const Context& ctx) {
  if (ctx.coproduct == Coproduct::Drinfeld) {
    ModulePtr out;
    for (const auto& f : spec) {
      ModulePtr v = evaluation_module(ctx.diagram, f.node, f.alpha * ctx.zeta.pow(f.shift), ctx.zeta);
      out = out ? drinfeld_tensor(out, v) : v;
    }
    return out;
  }
  return standard_module(ctx.diagram, spec, ctx.zeta, ctx.coproduct);
}

std::vector<ModulePtr> modules_from_json(const Json& job, const Context& ctx, std::size_t count) {
  if (!job.contains("modules")) throw SchemaError("$.modules", "missing field");
  const Json& ms = job["modules"];
  if (!ms.is_array() || ms.size() != count)
    throw SchemaError("$.modules", "expected an array of " + std::to_string(count) + " module specs");
  std::vector<ModulePtr> out;
  for (std::size_t t = 0; t < count; ++t) {
    const std::string p = "$.modules[" + std::to_string(t) + "]";
    require_keys(ms[t], p, {"factors", "node", "alpha", "tau"});
    out.push_back(build_module(factors_from_json(ms[t], p, ctx.diagram), ctx));
  }
  return out;
}

Json context_json(const Context& ctx) {
  return {{"diagram", ctx.diagram.type_label()},
          {"zeta", ctx.zeta.to_string()},
          {"coproduct", to_string(ctx.coproduct)}};
}

std::string poly_display(const LaurentPoly& p) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coef = c.abs().denominator() == 1 ? c.abs().numerator().get_str()
                                                  : c.abs().to_string();
    std::string mono = e == 0 ? coef : (c.abs().is_one() ? "" : coef + "*") + (e == 1 ? "z" : "z^" + std::to_string(e));
    if (out.empty()) out = (c.sign() < 0 ? "-" : "") + mono;
    else out += (c.sign() < 0 ? " - " : " + ") + mono;
  }
  return out.empty() ? "0" : out;
}

// ------------------------------------------------------------ standard suite

struct PatternJob {
  std::size_t config;
  std::size_t pattern;
  std::string name;
  Context ctx;
  std::vector<StandardFactor> factors;
};

struct PatternOutcome {
  bool cyclic = false;
  bool cocyclic = false;
  Index submodule_dim = 0;
  Index dim = 0;
};

PatternOutcome run_pattern(const PatternJob& job) {
  const ModulePtr m = standard_module(job.ctx.diagram, job.factors, job.ctx.zeta, Coproduct::Circ);
  const Vector v = highest_weight_tensor(*m);
  const CyclicityResult c = cyclicity(*m, v);
  return {c.cyclic, is_cocyclic(m, v), c.submodule_dim, m->dim()};
}

// "descending" when (tau 2, tau 0) is the cyclic order of the A_1-type pair at vertex 1.
std::string detect_orientation(const Context& ctx) {
  const Rational one(1);
  const bool desc = run_pattern({0, 0, "", ctx, {{1, one, 2}, {1, one, 0}}}).cyclic;
  const bool asc = run_pattern({0, 0, "", ctx, {{1, one, 0}, {1, one, 2}}}).cyclic;
  if (desc && !asc) return "descending";
  if (asc && !desc) return "ascending";
  return "undetected";
}

}  // namespace

Json default_suite_configs() {
  auto f = [](int node, int tau) { return Json{{"node", node}, {"tau", tau}}; };
  auto pat = [](const std::string& name, Json factors) {
    return Json{{"name", name}, {"factors", std::move(factors)}};
  };
  Json a1{{"diagram", "A_1"},
          {"zeta", "2/1"},
          {"alpha", "1/1"},
          {"patterns",
           {pat("critical-descending", {f(1, 2), f(1, 0)}),
            pat("critical-ascending", {f(1, 0), f(1, 2)}),
            pat("generic-descending", {f(1, 1), f(1, 0)}),
            pat("generic-ascending", {f(1, 0), f(1, 3)}),
            pat("length3-descending", {f(1, 4), f(1, 2), f(1, 0)}),
            pat("length3-ascending", {f(1, 0), f(1, 2), f(1, 4)}),
            pat("length3-plateau", {f(1, 2), f(1, 2), f(1, 0)}),
            pat("length3-mixed", {f(1, 2), f(1, 0), f(1, 2)})}}};
  Json a2{{"diagram", "A_2"},
          {"zeta", "2/1"},
          {"alpha", "1/1"},
          {"patterns",
           {pat("critical-descending", {f(1, 2), f(1, 0)}),
            pat("critical-ascending", {f(1, 0), f(1, 2)}),
            pat("mixed-nodes-descending", {f(1, 3), f(2, 0)}),
            pat("mixed-nodes-ascending", {f(2, 0), f(1, 3)}),
            pat("length3-descending", {f(1, 2), f(2, 1), f(1, 0)}),
            pat("length3-ascending", {f(1, 0), f(2, 1), f(1, 2)})}}};
  return Json::array({a1, a2});
}

JobResult standard_suite(const Json& configs, int jobs, const std::string& path) {
  if (!configs.is_array()) throw SchemaError(path, "expected an array of configs");
  std::vector<PatternJob> work;
  std::vector<Context> contexts;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const std::string cp = path + "[" + std::to_string(c) + "]";
    const Json& cfg = configs[c];
    require_keys(cfg, cp, {"diagram", "zeta", "alpha", "patterns"});
    Context ctx;
    if (!cfg.contains("diagram")) throw SchemaError(cp + ".diagram", "missing field");
    ctx.diagram = diagram_from_json(cfg["diagram"], cp + ".diagram");
    if (!ctx.diagram.is_type_a()) throw SchemaError(cp + ".diagram", "standard modules are built in type A");
    if (cfg.contains("zeta")) ctx.zeta = zeta_from_json(cfg["zeta"], cp + ".zeta");
    const Rational alpha = cfg.contains("alpha") ? rational_from_json(cfg["alpha"], cp + ".alpha") : Rational(1);
    if (!cfg.contains("patterns") || !cfg["patterns"].is_array())
      throw SchemaError(cp + ".patterns", "expected an array");
    contexts.push_back(ctx);
    for (std::size_t p = 0; p < cfg["patterns"].size(); ++p) {
      const std::string pp = cp + ".patterns[" + std::to_string(p) + "]";
      const Json& pj = cfg["patterns"][p];
      require_keys(pj, pp, {"name", "factors"});
      if (!pj.contains("factors") || !pj["factors"].is_array() || pj["factors"].empty())
        throw SchemaError(pp + ".factors", "expected a nonempty array");
      PatternJob job{c, p, pj.contains("name") ? pj["name"].get<std::string>() : "pattern" + std::to_string(p), ctx, {}};
      for (std::size_t t = 0; t < pj["factors"].size(); ++t)
        job.factors.push_back(factor_from_json(pj["factors"][t], pp + ".factors[" + std::to_string(t) + "]", alpha, ctx.diagram));
      work.push_back(std::move(job));
    }
  }

  // Independent jobs; results are stored by position so the report order is fixed.
  std::vector<PatternOutcome> outcomes(work.size());
  std::vector<std::string> orientations(contexts.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  std::size_t next = 0;
  while (next < work.size() + contexts.size()) {
    std::vector<std::future<void>> batch;
    for (std::size_t w = 0; w < workers && next < work.size() + contexts.size(); ++w, ++next) {
      const std::size_t k = next;
      auto task = [&, k] {
        if (k < contexts.size()) orientations[k] = detect_orientation(contexts[k]);
        else outcomes[k - contexts.size()] = run_pattern(work[k - contexts.size()]);
      };
      if (workers == 1) task();
      else batch.push_back(std::async(std::launch::async, task));
    }
    for (auto& f : batch) f.get();
  }

  JobResult res;
  const std::string orientation = orientations.empty() ? "none" : orientations.front();
  bool all_ok = orientation != "undetected";
  std::size_t failures = 0;
  Json cfg_reports = Json::array();
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    const bool consistent = orientations[c] == orientation;
    if (!consistent) all_ok = false;
    Json pats = Json::array();
    for (std::size_t k = 0; k < work.size(); ++k) {
      if (work[k].config != c) continue;
      const auto& job = work[k];
      const auto& out = outcomes[k];
      std::vector<int> shifts, nodes;
      for (const auto& f : job.factors) {
        shifts.push_back(f.shift);
        nodes.push_back(f.node);
      }
      const bool non_increasing = std::is_sorted(shifts.rbegin(), shifts.rend());
      const bool non_decreasing = std::is_sorted(shifts.begin(), shifts.end());
      // Orientation "descending": tau_1 >= ... >= tau_n is cyclic, the reverse cocyclic.
      const bool want_cyclic = orientation == "descending" ? non_increasing : non_decreasing;
      const bool want_cocyclic = orientation == "descending" ? non_decreasing : non_increasing;
      bool pass = true;
      if (want_cyclic && !out.cyclic) pass = false;
      if (want_cocyclic && !out.cocyclic) pass = false;
      if (!pass) {
        ++failures;
        all_ok = false;
      }
      pats.push_back({{"name", job.name},
                      {"nodes", nodes},
                      {"shifts", shifts},
                      {"alpha", job.factors.front().alpha.to_string()},
                      {"dim", out.dim},
                      {"cyclic", out.cyclic},
                      {"submodule_dim", out.submodule_dim},
                      {"cocyclic", out.cocyclic},
                      {"expect_cyclic", want_cyclic},
                      {"expect_cocyclic", want_cocyclic},
                      {"pass", pass}});
    }
    cfg_reports.push_back({{"diagram", contexts[c].diagram.type_label()},
                           {"zeta", contexts[c].zeta.to_string()},
                           {"orientation", orientations[c]},
                           {"orientation_consistent", consistent},
                           {"patterns", pats}});
  }
  res.report = {{"command", "standard-suite"},
                {"orientation", orientation},
                {"configs", cfg_reports},
                {"patterns_total", work.size()},
                {"failures", failures},
                {"passed", all_ok}};
  res.exit_code = all_ok ? kExitOk : kExitMathFailure;
  return res;
}

// ---------------------------------------------------------------- execute

namespace {

JobResult execute_checked(const Json& job, const JobOptions& opts) {
  require_keys(job, "$", {"command", "diagram", "zeta", "coproduct", "factors", "node", "alpha",
                          "tau", "modules", "mode_bound", "series_order", "kind", "configs"});
  if (!job.contains("command") || !job["command"].is_string())
    throw SchemaError("$.command", "missing or not a string");
  const std::string cmd = job["command"].get<std::string>();
  JobResult res;

  if (cmd == "standard-suite") {
    for (const char* k : {"diagram", "zeta", "factors", "node", "alpha", "tau", "modules"})
      if (job.contains(k)) throw SchemaError(std::string("$.") + k, "not used by standard-suite; put it in a config");
    return standard_suite(job.contains("configs") ? job["configs"] : default_suite_configs(), opts.jobs);
  }

  const Context ctx = context_from_job(job);
  Json report = context_json(ctx);
  report["command"] = cmd;

  auto single = [&] { return build_module(factors_from_json(job, "$", ctx.diagram), ctx); };

  if (cmd == "build" || cmd == "tensor") {
    const ModulePtr m = single();
    report["module"] = to_json(*m);
    report["highest_weight"] = to_json(m->weights()[0]);
  } else if (cmd == "verify-relations") {
    int mb = job.contains("mode_bound") ? int_from_json(job["mode_bound"], "$.mode_bound") : 2;
    if (opts.mode_bound) mb = *opts.mode_bound;
    if (mb < 0) throw SchemaError("$.mode_bound", "must be nonnegative");
    const ModulePtr m = single();
    const RelationReport rel = verify_relations(*m, mb);
    const RelationReport km = verify_kac_moody_relations(*m);
    report["mode_bound"] = mb;
    report["relations"] = to_json(rel);
    report["kac_moody_relations"] = to_json(km);
    if (rel.count(CheckStatus::Fail) || km.count(CheckStatus::Fail)) res.exit_code = kExitMathFailure;
  } else if (cmd == "cyclic" || cmd == "cocyclic") {
    const ModulePtr m = single();
    const Vector v = highest_weight_tensor(*m);
    report.update(to_json(cmd == "cyclic" ? cyclicity(*m, v) : cocyclicity(m, v)));
    report["dim"] = m->dim();
  } else if (cmd == "drinfeld-poly") {
    const ModulePtr m = single();
    Json polys = Json::object(), shown = Json::object();
    const auto ps = drinfeld_polynomials(*m);
    for (std::size_t t = 0; t < ps.size(); ++t) {
      polys[std::to_string(t + 1)] = to_json(ps[t]);
      shown[std::to_string(t + 1)] = poly_display(ps[t]);
    }
    report["polynomials"] = polys;
    report["display"] = shown;
  } else if (cmd == "rmatrix") {
    const auto ms = modules_from_json(job, ctx, 2);
    std::string kind = "braiding";
    if (job.contains("kind")) {
      if (job["kind"] != "braiding" && job["kind"] != "twist")
        throw SchemaError("$.kind", "expected \"braiding\" or \"twist\"");
      kind = job["kind"].get<std::string>();
    }
    const IntertwinerResult r = kind == "twist" ? solve_drinfeld_twist(ms[0], ms[1])
                                                : solve_intertwiner(ms[0], ms[1]);
    report["intertwiner"] = to_json(r);
    if (r.normalized && r.invertible) report["unipotence"] = to_json(unipotence_report(*ms[0], *ms[1], r));
  } else if (cmd == "ybe") {
    const auto ms = modules_from_json(job, ctx, 3);
    const YbeReport y = yang_baxter_report(ms[0], ms[1], ms[2]);
    report["ybe"] = to_json(y);
    if (!y.holds && !y.abstained) res.exit_code = kExitMathFailure;
  } else {
    throw SchemaError("$.command", "unknown command '" + cmd + "'");
  }
  res.report = std::move(report);
  return res;
}

}  // namespace

JobResult execute(const Json& job, const JobOptions& opts) {
  std::string cmd = job.is_object() && job.contains("command") && job["command"].is_string()
                        ? job["command"].get<std::string>()
                        : "";
  try {
    return execute_checked(job, opts);
  } catch (const SchemaError& e) {
    return {{{"command", cmd}, {"error", e.what()}, {"path", e.path()}}, kExitUsage};
  } catch (const ArithmeticError& e) {
    return {{{"command", cmd}, {"error", e.what()}}, kExitMathFailure};
  } catch (const InsufficientData& e) {
    return {{{"command", cmd}, {"error", e.what()}}, kExitMathFailure};
  } catch (const std::logic_error& e) {
    // invalid_argument and out_of_range are precondition violations on the input
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e))
      return {{{"command", cmd}, {"error", e.what()}, {"path", "$"}}, kExitUsage};
    return {{{"command", cmd}, {"error", e.what()}}, kExitMathFailure};
  }
}

std::string pretty_summary(const Json& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    if (value.is_object() || value.is_array()) {
      if (key == "relations" || key == "kac_moody_relations") {
        os << key << ": " << (value["passed"].get<bool>() ? "all pass" : "FAILURES") << " ("
           << value["total"] << " checks)\n";
        for (const auto& [fam, counts] : value["families"].items())
          os << "  " << fam << ": " << counts["pass"] << " pass, " << counts["fail"] << " fail, "
             << counts["insufficient_data"] << " insufficient\n";
      } else if (key == "configs") {
        for (const auto& cfg : value) {
          os << cfg["diagram"].get<std::string>() << " zeta=" << cfg["zeta"].get<std::string>() << "\n";
          for (const auto& p : cfg["patterns"])
            os << "  " << (p["pass"].get<bool>() ? "ok   " : "FAIL ") << p["name"].get<std::string>()
               << " shifts=" << p["shifts"].dump() << " cyclic=" << p["cyclic"]
               << " cocyclic=" << p["cocyclic"] << " sub=" << p["submodule_dim"] << "/" << p["dim"] << "\n";
        }
      } else {
        os << key << ": " << value.dump() << "\n";
      }
    } else {
      os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return os.str();
}

}  // namespace qloop
