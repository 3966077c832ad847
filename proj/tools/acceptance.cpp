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

// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qloop/cli.hpp"
#include "qloop/rmatrix.hpp"
#include "qloop/structure.hpp"

namespace qloop {
namespace {

using G = GeneratorSymbol;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;  // printed under the verdict
  std::vector<std::string> info;   // informational lines, never affect the verdict

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

std::vector<G> kac_moody_generators(const DynkinDiagram& d) {
  std::vector<G> out;
  for (Vertex i = 0; i <= d.rank(); ++i)
    for (const G g : {G::e(i), G::f(i), G::kkac(i, 1), G::kkac(i, -1)}) out.push_back(g);
  return out;
}

std::string str(const Rational& r) { return r.to_string(); }

// ------------------------------------------------------------------ 1

Outcome relation_suite() {
  Outcome o;
  std::size_t modules = 0, checks = 0;
  for (int n = 1; n <= 3; ++n) {
    const DynkinDiagram d = DynkinDiagram::type_a(n);
    for (Vertex k = 1; k <= n; ++k)
      for (const Rational zeta : {Rational(2), Rational(3, 2)})
        for (const Rational alpha : {Rational(1), Rational(3), Rational(5, 2)}) {
          const auto m = evaluation_module(d, k, alpha, zeta);
          const RelationReport r = verify_relations(*m, 3);
          const RelationReport km = verify_kac_moody_relations(*m);
          ++modules;
          checks += r.checks.size() + km.checks.size();
          const std::string tag = "A_" + std::to_string(n) + " node " + std::to_string(k) +
                                  " zeta " + str(zeta) + " alpha " + str(alpha);
          o.require(r.passed() && r.count(CheckStatus::InsufficientData) == 0, tag + " Drinfeld relations");
          o.require(km.passed(), tag + " Kac-Moody relations");
          if (n > 1) o.require(r.count("serre", CheckStatus::Pass) > 0, tag + " Serre family exercised");
        }
  }
  o.notes.push_back(std::to_string(modules) + " modules, " + std::to_string(checks) +
                    " relation checks, mode bound 3");
  return o;
}

// ------------------------------------------------------------------ 2

// Delta°^{(2)}(tau g) expanded by hand, tau applied factor-wise, evaluated on M1 (x) M2 (x) M3.
SparseMatrix tau_iterated_circ(const ModuleRealization& m1, const ModuleRealization& m2,
                               const ModuleRealization& m3, const G& g) {
  SparseMatrix out(m1.dim() * m2.dim() * m3.dim(), m1.dim() * m2.dim() * m3.dim());
  for (const auto& outer : coproduct_circ(tau(g)).terms) {
    for (const auto& inner : coproduct_circ(outer.right).terms) {
      const Scalar c = (outer.coeff * inner.coeff).conjugate();
      const Rational coef = c.at(m1.zeta());
      out += coef * kron(kron(evaluate(m1, tau(outer.left)), evaluate(m2, tau(inner.left))),
                         evaluate(m3, tau(inner.right)));
    }
  }
  return out;
}

Outcome coproduct_laws() {
  Outcome o;
  const DynkinDiagram a1 = DynkinDiagram::type_a(1);
  const auto v = evaluation_module(a1, 1, Rational(1), Rational(2));
  const auto left = tensor(tensor(v, v), v), right = tensor(v, tensor(v, v));
  const auto bullet3 = tensor(tensor(v, v, Coproduct::Bullet), v, Coproduct::Bullet);
  o.require(left->dim() == 8, "V (x) V (x) V has dimension 8");
  const std::vector<Word> words{{G::e(1), G::f(0)}, {G::f(1), G::e(0), G::kkac(1, -1)}, {G::e(0), G::e(1), G::f(1)}};
  for (const auto& g : kac_moody_generators(a1)) {
    o.require(left->act(g) == right->act(g), "coassociativity on " + g.to_string());
    o.require(tau_iterated_circ(*v, *v, *v, g) == bullet3->act(g), "tau identity on V(x)V(x)V for " + g.to_string());
  }
  for (const auto& w : words) o.require(evaluate(*left, w) == evaluate(*right, w), "coassociativity on " + to_string(w));

  const DynkinDiagram a2 = DynkinDiagram::type_a(2);
  const auto x = evaluation_module(a2, 1, Rational(1), Rational(2));
  const auto y = evaluation_module(a2, 2, Rational(3), Rational(2));
  const auto xy_bullet = tensor(x, y, Coproduct::Bullet);
  const auto xyx_l = tensor(tensor(x, y), x), xyx_r = tensor(x, tensor(y, x));
  for (const auto& g : kac_moody_generators(a2)) {
    o.require(evaluate(*x, *y, tau(coproduct_circ(tau(g)))) == xy_bullet->act(g),
              "tau identity on the A_2 pair for " + g.to_string());
    o.require(xyx_l->act(g) == xyx_r->act(g), "coassociativity on the A_2 triple for " + g.to_string());
  }
  o.notes.push_back("A_1: dim 8, " + std::to_string(kac_moody_generators(a1).size()) +
                    " generators and 3 words; A_2 pair 3 (x) 3");
  return o;
}

// ------------------------------------------------------------------ 3

Outcome dichotomy() {
  Outcome o;
  const DynkinDiagram d = DynkinDiagram::type_a(1);
  const Rational zeta(2);
  auto pair = [&](const Rational& a, const Rational& b) {
    return standard_module(d, {{1, a, 0}, {1, b, 0}}, zeta);
  };
  const auto first = pair(zeta * zeta, Rational(1)), second = pair(Rational(1), zeta * zeta);
  const auto c1 = cyclicity(*first, highest_weight_tensor(*first));
  const auto c2 = cyclicity(*second, highest_weight_tensor(*second));
  o.require(c1.cyclic != c2.cyclic, "exactly one ordering of the critical pair is cyclic");
  const auto& cyc = c1.cyclic ? first : second;
  const auto& other = c1.cyclic ? second : first;
  const auto& c_cyc = c1.cyclic ? c1 : c2;
  const auto& c_other = c1.cyclic ? c2 : c1;
  o.require(c_cyc.submodule_dim == 4, "cyclic ordering generates dimension 4");
  o.require(c_other.submodule_dim == 3, "other ordering generates dimension 3");
  o.require(is_cocyclic(other, highest_weight_tensor(*other)), "non-cyclic ordering is cocyclic");
  o.notes.push_back(std::string("critical pair: cyclic ordering is (") + (c1.cyclic ? "zeta^2, 1" : "1, zeta^2") + ")");

  for (const auto& m : {pair(Rational(3), Rational(1)), pair(Rational(1), Rational(3))}) {
    const Vector v = highest_weight_tensor(*m);
    o.require(is_cyclic(*m, v) && is_cocyclic(m, v), "generic ratio 3: cyclic and cocyclic");
  }

  const JobResult suite = standard_suite(default_suite_configs(), 2);
  const Json& rep = suite.report;
  o.require(rep["passed"].get<bool>(), "standard suite grid");
  o.require(rep["patterns_total"].get<int>() >= 10, "grid has at least 10 patterns");
  bool length3 = false;
  for (const auto& cfg : rep["configs"]) {
    o.require(cfg["orientation"] == rep["orientation"], "orientation consistent on " + cfg["diagram"].get<std::string>());
    for (const auto& p : cfg["patterns"]) {
      if (p["shifts"].size() >= 3) length3 = true;
      if (!p["pass"].get<bool>()) o.notes.push_back("pattern " + p["name"].get<std::string>() + " on " + cfg["diagram"].get<std::string>());
    }
  }
  o.require(length3, "grid contains length-3 products");
  o.notes.push_back("grid: " + std::to_string(rep["patterns_total"].get<int>()) + " patterns, orientation " +
                    rep["orientation"].get<std::string>() + " shifts cyclic");
  return o;
}

// ------------------------------------------------------------------ 4

Outcome drinfeld_polys() {
  Outcome o;
  std::size_t fundamental = 0;
  for (int n = 1; n <= 3; ++n) {
    const DynkinDiagram d = DynkinDiagram::type_a(n);
    for (Vertex k = 1; k <= n; ++k)
      for (const Rational zeta : {Rational(2), Rational(3, 2)})
        for (const Rational alpha : {Rational(1), Rational(3), Rational(5, 2)}) {
          const auto ps = drinfeld_polynomials(*evaluation_module(d, k, alpha, zeta));
          ++fundamental;
          for (Vertex j = 1; j <= n; ++j) {
            const LaurentPoly expect = j == k ? LaurentPoly::var() - LaurentPoly(alpha / zeta) : LaurentPoly(1);
            o.require(ps[j - 1] == expect, "P_" + std::to_string(j) + " of A_" + std::to_string(n) + " node " +
                                               std::to_string(k) + " alpha " + str(alpha));
          }
        }
  }

  std::mt19937 rng(1729);
  std::uniform_int_distribution<int> rank(1, 3), num(-9, 9), den(1, 7);
  auto random_alpha = [&] {
    int a = 0;
    while (a == 0) a = num(rng);
    return Rational(a, den(rng));
  };
  const int trials = 6;
  for (int t = 0; t < trials; ++t) {
    const int n = rank(rng);
    const DynkinDiagram d = DynkinDiagram::type_a(n);
    std::uniform_int_distribution<int> node(1, n);
    const Rational zeta = t % 2 ? Rational(2) : Rational(3, 2);
    const auto v = evaluation_module(d, node(rng), random_alpha(), zeta);
    const auto w = evaluation_module(d, node(rng), random_alpha(), zeta);
    const auto pv = drinfeld_polynomials(*v), pw = drinfeld_polynomials(*w);
    for (const auto& m : {tensor(v, w), drinfeld_tensor(v, w)}) {
      const auto p = drinfeld_polynomials(*m);
      for (int j = 0; j < n; ++j)
        o.require(p[j] == pv[j] * pw[j], "multiplicativity, trial " + std::to_string(t) + " vertex " + std::to_string(j + 1));
    }
  }
  o.notes.push_back(std::to_string(fundamental) + " fundamental modules, " + std::to_string(trials) +
                    " random tensor products (both coproducts)");
  return o;
}

// ------------------------------------------------------------------ 5

Outcome rmatrix_suite() {
  Outcome o;
  const DynkinDiagram a1 = DynkinDiagram::type_a(1);
  const Rational zeta(2);
  auto v = [&](const Rational& a) { return evaluation_module(a1, 1, a, zeta); };
  const std::vector<std::pair<Rational, Rational>> pairs{
      {Rational(1), Rational(3)}, {Rational(3), Rational(1)}, {Rational(1), Rational(5, 2)}, {Rational(2), Rational(-7)}};
  for (const auto& [a, b] : pairs) {
    const auto m1 = v(a), m2 = v(b);
    const std::string tag = "(" + str(a) + ", " + str(b) + ")";
    const IntertwinerResult r = solve_intertwiner(m1, m2);
    o.require(r.solution_space_dim == 1, tag + " solution space dimension 1");
    o.require(r.invertible, tag + " invertible");
    if (!r.invertible || !r.normalized) continue;
    const UnipotenceReport u = unipotence_report(*m1, *m2, r);
    o.require(u.holds(), tag + " unipotence_check on flip o R (weight preserving " +
                             std::string(u.weight_preserving ? "yes" : "no") + ", filtration lowering " +
                             (u.filtration_lowering ? "yes" : "no") + ", nilpotent " + (u.nilpotent ? "yes" : "no") + ")");
    const IntertwinerResult tw = solve_drinfeld_twist(m1, m2);
    const bool twist_ok = tw.solution_space_dim == 1 && tw.invertible && unipotence_check(*m1, *m2, tw);
    o.info.push_back(tag + " Drinfeld-coproduct twist is unipotent: " + (twist_ok ? "yes" : "no"));
  }
  o.require(yang_baxter_check(v(Rational(1)), v(Rational(3)), v(Rational(9))), "Yang-Baxter on (1, 3, 9)");
  const DynkinDiagram a2 = DynkinDiagram::type_a(2);
  const YbeReport y = yang_baxter_report(evaluation_module(a2, 1, Rational(1), zeta),
                                         evaluation_module(a2, 1, Rational(3), zeta),
                                         evaluation_module(a2, 2, Rational(7), zeta));
  o.require(y.holds && !y.abstained, "Yang-Baxter on the A_2 triple (omega_1:1, omega_1:3, omega_2:7)");
  o.notes.push_back(std::to_string(pairs.size()) + " generic A_1 pairs checked for uniqueness, invertibility and unipotence; Yang-Baxter " +
                    std::string(y.holds ? "holds" : "fails") + " on the A_2 triple");
  return o;
}

// ------------------------------------------------------------------ 6

Outcome partial_r() {
  Outcome o;
  const LaurentPoly qq = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
  o.require(partial_r_coefficient(0) == LaurentPoly(1), "c_0 = 1");
  o.require(partial_r_coefficient(1) == -qq, "c_1 = -(q - q^-1)");
  o.require(partial_r_inverse_coefficient(1) == qq, "c-bar_1 = q - q^-1");
  o.notes.push_back("c_1 = " + partial_r_coefficient(1).to_string() + ", c-bar_1 = " +
                    partial_r_inverse_coefficient(1).to_string());

  const DynkinDiagram a1 = DynkinDiagram::type_a(1), a2 = DynkinDiagram::type_a(2);
  const auto v = evaluation_module(a1, 1, Rational(1), Rational(2));
  const auto w = evaluation_module(a1, 1, Rational(3), Rational(2));
  o.require(partial_R_i(*v, *w, 1) * partial_R_i_inverse(*v, *w, 1) == SparseMatrix::identity(4), "2 (x) 2");
  const auto x = evaluation_module(a2, 1, Rational(1), Rational(3, 2));
  const auto y = evaluation_module(a2, 2, Rational(5), Rational(3, 2));
  const auto z = evaluation_module(a2, 1, Rational(2), Rational(3, 2));
  for (Vertex i = 1; i <= 2; ++i) {
    o.require(partial_R_i(*x, *y, i) * partial_R_i_inverse(*x, *y, i) == SparseMatrix::identity(9),
              "3 (x) 3-bar, vertex " + std::to_string(i));
    o.require(partial_R_i(*x, *z, i) * partial_R_i_inverse(*x, *z, i) == SparseMatrix::identity(9),
              "3 (x) 3, vertex " + std::to_string(i));
  }
  return o;
}

// ------------------------------------------------------------------ 7

Outcome triangular() {
  Outcome o;
  const DynkinDiagram d = DynkinDiagram::type_a(1);
  const std::vector<std::pair<Rational, Rational>> pairs{{Rational(1), Rational(3)}, {Rational(5, 2), Rational(1)}};
  for (const auto& [a, b] : pairs) {
    const auto m1 = evaluation_module(d, 1, a, Rational(2));
    const auto m2 = evaluation_module(d, 1, b, Rational(2));
    for (int r = -1; r <= 2; ++r) {
      const TriangularReport t = triangular_coproduct_report(m1, m2, 1, r, 3);
      o.require(t.holds(), "(" + str(a) + ", " + str(b) + ") r = " + std::to_string(r) + " " + t.detail);
    }
  }
  return o;
}

// ------------------------------------------------------------------ 8

template <class F>
bool throws_invalid(F&& f) {
  try {
    f();
  } catch (const std::invalid_argument&) {
    return true;
  }
  return false;
}

Outcome guard_rails() {
  Outcome o;
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  for (const Rational z : {Rational(0), Rational(1), Rational(-1)}) {
    const std::string tag = "zeta = " + str(z);
    o.require(!is_valid_zeta(z), tag + " is_valid_zeta");
    o.require(throws_invalid([&] { evaluation_module(d, 1, Rational(1), z); }), tag + " evaluation_module");
    o.require(throws_invalid([&] { trivial_module(d, z); }), tag + " trivial_module");
    o.require(throws_invalid([&] { standard_module(d, {{1, Rational(1), 0}}, z); }), tag + " standard_module");
    const Json job{{"command", "cyclic"}, {"diagram", "A_2"}, {"zeta", z.to_string()}, {"node", 1}};
    const JobResult r = execute(job, {});
    o.require(r.exit_code == kExitUsage && r.report["path"] == "$.zeta", tag + " CLI job");
    const Json cfg = Json::array({{{"diagram", "A_1"}, {"zeta", z.to_string()}, {"patterns", Json::array()}}});
    o.require(execute({{"command", "standard-suite"}, {"configs", cfg}}, {}).exit_code == kExitUsage, tag + " suite config");
  }

  ModuleData km = evaluation_module(d, 1, Rational(1), Rational(2))->data();
  SparseMatrix& f0 = km.kac_moody.at(G::f(0));
  Index row = 0;
  while (f0.row(row).empty()) ++row;
  const auto [col, val] = *f0.row(row).begin();
  f0.set(row, col, val + Rational(1));
  const RelationReport rk = verify_kac_moody_relations(ModuleRealization(std::move(km)));
  const RelationCheck* fk = rk.first_failure();
  o.require(fk && fk->witness && !is_zero(fk->witness->defect), "corrupted f_0 caught with a witness");
  if (fk && fk->witness)
    o.notes.push_back("f_0 corruption: " + fk->relation_id + " fails at column " + std::to_string(fk->witness->column));

  ModuleData dr = evaluation_module(d, 2, Rational(3), Rational(2))->data();
  (*dr.drinfeld)[0].x_plus.front().param *= Rational(2);
  const RelationReport rd = verify_relations(ModuleRealization(std::move(dr)), 3);
  const RelationCheck* fd = rd.first_failure();
  o.require(fd && fd->witness && !is_zero(fd->witness->defect), "corrupted x^+ mode caught with a witness");
  if (fd && fd->witness)
    o.notes.push_back("x^+ corruption: " + fd->relation_id + " fails at column " + std::to_string(fd->witness->column));
  return o;
}

}  // namespace
}  // namespace qloop

int main() {
  using namespace qloop;
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "relation suite", relation_suite},
      {2, "coproduct laws", coproduct_laws},
      {3, "cyclic / cocyclic dichotomy", dichotomy},
      {4, "Drinfeld polynomials", drinfeld_polys},
      {5, "R-matrix suite", rmatrix_suite},
      {6, "partial R-matrix", partial_r},
      {7, "triangular coproduct", triangular},
      {8, "guard rails", guard_rails},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(2);
    t << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << t.str() << " s)\n";
    for (const auto& n : o.notes) std::cout << "     " << n << "\n";
    for (const auto& n : o.info) std::cout << "     INFO " << n << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
