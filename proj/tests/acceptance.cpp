// Copyright 2026 The hadamard-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks. Each criterion prints one line:
//   [PASS] c<id> <name>: <detail> (<seconds>s)
// Usage: acceptance [id...]; no ids runs all of them. Exit status is the
// number of failed criteria (capped at 125).
//
// All comparisons are exact (zero tolerance). Wall-clock limits are pinned
// per criterion below.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hadamard/cli/pipeline.hpp"
#include "support.hpp"

namespace hadamard {
namespace {

using Q = Rational;
using Fp = PrimeFieldElement;
using cli::Json;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

// Passes when no verdict of the report is a mismatch; lists the failures.
Outcome verdicts_outcome(const Json& report, const std::string& label) {
  Outcome o;
  std::size_t total = 0;
  std::vector<std::string> bad;
  for (const auto& v : report["verdicts"]) {
    if (v["status"] == "not_applicable") continue;
    ++total;
    if (v["status"] == "mismatch")
      bad.push_back(v["id"].get<std::string>() + " (expected " + v["expected"].dump() + ", computed " +
                    v["computed"].dump() + ")");
  }
  o.pass = bad.empty() && total > 0;
  std::ostringstream d;
  d << label << " " << (total - bad.size()) << "/" << total << " verdicts match";
  for (const auto& b : bad) d << "; mismatch " << b;
  o.detail = d.str();
  return o;
}

Outcome example(const std::string& id, unsigned k = 1, std::uint64_t prime = 0) {
  cli::ExampleOptions eo;
  eo.data_dir = HADAMARD_DATA_DIR;
  eo.k = k;
  std::string label = id;
  if (id == "4.4") label += " k=" + std::to_string(k);
  if (prime) {
    eo.field = CoeffField::modular(prime);
    label += " over Z/" + std::to_string(prime);
  }
  return verdicts_outcome(cli::verify_example(id, eo), label);
}

struct SuitePart {
  std::vector<FactorShape> shapes;
  std::vector<long> ambients;
  unsigned seeds;
};

// Runs the generic suite part by part. Every certified instance must match
// all its verdicts, and each id in `required` must be checked on every one.
Outcome suite(const std::vector<SuitePart>& parts, std::size_t min_instances, const std::set<std::string>& required) {
  std::size_t certified = 0, matched = 0, verdicts = 0;
  std::vector<std::string> problems;
  for (const auto& part : parts) {
    cli::SuiteConfig cfg;
    cfg.shapes = {part.shapes};
    cfg.ambients = part.ambients;
    cfg.seeds = part.seeds;
    cfg.jobs = 1;
    Json rep = cli::suite_generic(cfg);
    for (const auto& inst : rep["computed"]["instances"]) {
      std::string where = "n=" + inst["ambient"].dump() + " seed=" + inst["seed"].dump();
      std::string status = inst["status"];
      if (status == "skipped_non_generic") continue;
      if (status == "budget_exceeded") {
        problems.push_back(where + " exceeded its budget");
        continue;
      }
      ++certified;
      std::set<std::string> seen;
      for (const auto& v : inst["verdicts"]) {
        if (v["status"] == "not_applicable") continue;
        ++verdicts;
        seen.insert(v["id"].get<std::string>());
        if (v["status"] == "match") ++matched;
        else problems.push_back(where + " " + v["id"].get<std::string>());
      }
      for (const auto& r : required)
        if (!seen.count(r)) problems.push_back(where + " lacks " + r);
    }
  }
  Outcome o;
  o.pass = problems.empty() && certified >= min_instances;
  std::ostringstream d;
  d << certified << " certified instances, " << matched << "/" << verdicts << " verdicts match";
  if (certified < min_instances) d << "; fewer than " << min_instances << " instances";
  for (const auto& p : problems) d << "; " << p;
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------------------
// Property checks on a corpus of products.

struct CorpusItem {
  std::string label;
  std::vector<VarietyPresentation<Q>> factors;
  std::size_t n;
  std::optional<std::vector<VarietyPresentation<Fp>>> modular;  // same factors mod p
};

constexpr std::uint64_t kPrime = 32003;

std::vector<CorpusItem> corpus() {
  std::vector<CorpusItem> out;
  for (const char* id : {"4.1", "4.2", "4.3"}) {
    cli::Scenario sc = cli::load_scenario(cli::example_path(HADAMARD_DATA_DIR, id));
    CorpusItem c{std::string("example ") + id, cli::build_product_factors<Q>(sc),
                 static_cast<std::size_t>(sc.ambient), std::nullopt};
    sc.field = CoeffField::modular(kPrime);
    c.modular = cli::build_product_factors<Fp>(sc);
    out.push_back(std::move(c));
  }
  struct G {
    std::vector<FactorShape> shapes;
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<G> generic{{{{1, 1}, {1, 1}}, 3, 1}, {{{1, 2}, {1, 1}}, 3, 2}, {{{1, 2}, {1, 1}}, 4, 3},
                         {{{1, 1}, {1, 2}}, 5, 4}};
  for (const auto& g : generic) {
    auto inst = sample_generic_instance<Q>(g.shapes, g.n, g.seed);
    if (!inst.certified) continue;
    std::ostringstream label;
    label << "generic n=" << g.n << " seed=" << g.seed;
    out.push_back({label.str(), inst.factors, g.n, std::nullopt});
  }
  return out;
}

// Each generator g of I(X * Y) satisfies g(y0 z0, ..., yn zn) in I(X)(y) + I(Y)(z).
bool elimination_sound(const Ideal<Q>& product, const Ideal<Q>& a, const Ideal<Q>& b) {
  std::size_t n1 = a.ring().size();
  std::vector<std::string> names = Ring::indexed("y", n1);
  for (const auto& s : Ring::indexed("z", n1)) names.push_back(s);
  RingPtr yz = Ring::make(names, a.ring().field());
  std::vector<std::size_t> to_y(n1), to_z(n1);
  std::vector<Polynomial<Q>> images;
  for (std::size_t i = 0; i < n1; ++i) {
    to_y[i] = i;
    to_z[i] = n1 + i;
    images.push_back(Polynomial<Q>::variable(yz, i) * Polynomial<Q>::variable(yz, n1 + i));
  }
  std::vector<Polynomial<Q>> gens;
  for (const auto& g : a.groebner_basis()) gens.push_back(g.mapped(yz, to_y));
  for (const auto& g : b.groebner_basis()) gens.push_back(g.mapped(yz, to_z));
  Ideal<Q> lifted(yz, gens);
  for (const auto& g : product.generators())
    if (!g.is_zero() && !ideal_member(g.substitute(images), lifted)) return false;
  return true;
}

Outcome properties() {
  std::vector<std::string> problems;
  std::size_t checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) problems.push_back(what);
  };
  for (const auto& c : corpus()) {
    const std::string& L = c.label;
    std::vector<Ideal<Q>> ideals;
    for (const auto& f : c.factors) ideals.push_back(implicit_ideal(f));
    Ideal<Q> prod = hadamard_ideal(ideals[0], ideals[1]);

    for (const auto& i : ideals) expect(is_groebner_basis(i.groebner_basis()), L + ": factor basis certificate");
    expect(is_groebner_basis(prod.groebner_basis()), L + ": product basis certificate");
    expect(is_groebner_basis(prod.groebner_basis(MonomialOrder::lex())), L + ": product lex basis certificate");

    expect(elimination_sound(prod, ideals[0], ideals[1]), L + ": elimination soundness");

    InvariantReport rep = variety_invariants(prod, 6);
    auto lm = leading_monomials(prod.groebner_basis(MonomialOrder::degrevlex()));
    for (unsigned t = 0; t <= 6; ++t)
      expect(rep.hilbert_function[t] == testing::standard_monomial_count(lm, c.n + 1, t),
             L + ": HF(" + std::to_string(t) + ") against standard monomials");

    expect(ideal_equal(prod, hadamard_ideal(ideals[1], ideals[0])), L + ": commutativity");
    auto ones = all_ones_ideal<Q>(c.n, prod.ring().field());
    expect(ideal_equal(hadamard_ideal(ideals[0], ones), ideals[0]), L + ": all-ones identity");

    bool parametric = true;
    for (const auto& f : c.factors) parametric = parametric && f.is_parametric();
    if (parametric) {
      std::size_t skipped = 0;
      expect(product_point_failures(prod, c.factors, 20, 7, &skipped) == 0, L + ": sampled points vanish");
      expect(skipped < 20, L + ": some sampled points defined");
    }

    if (c.modular) {
      std::vector<Ideal<Fp>> mi;
      for (const auto& f : *c.modular) mi.push_back(implicit_ideal(f));
      Ideal<Fp> mprod = hadamard_ideal(mi[0], mi[1]);
      auto a = leading_monomials(prod.groebner_basis());
      auto b = leading_monomials(mprod.groebner_basis());
      expect(a == b, L + ": leading terms agree mod " + std::to_string(kPrime));
    }
  }
  Outcome o;
  o.pass = problems.empty();
  o.detail = std::to_string(checks - problems.size()) + "/" + std::to_string(checks) + " property checks hold";
  for (const auto& p : problems) o.detail += "; failed " + p;
  return o;
}

Outcome sweep() {
  auto t0 = std::chrono::steady_clock::now();
  SweepResult s = lemma_sweep(4);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o;
  o.pass = s.failures.empty() && s.checked > 0 && secs < 1.0;
  std::ostringstream d;
  d << s.checked << " inequalities checked, " << s.failures.size() << " failures, " << secs << "s (limit 1s)";
  for (const auto& f : s.failures) d << "; " << f;
  o.detail = d.str();
  return o;
}

std::vector<Criterion> criteria() {
  const std::set<std::string> large{"product.dimension", "product.degree", "hf.multiplicative", "singular.smooth",
                                    "points.vanish", "equivalence.certificate"};
  const std::set<std::string> small{"product.dimension", "product.degree", "hf.smaller_at_1",
                                    "singular.dimension_lower_bound", "points.vanish"};
  const std::set<std::string> smooth{"product.dimension", "product.degree", "singular.smooth", "points.vanish"};
  return {
      {1, "line_and_quadric_surface_in_p5", 300, [] { return example("4.1"); }},
      {2, "line_and_conic_with_center_on_segre_veronese", 300, [] { return example("4.2"); }},
      {3, "two_lines_in_p3_singular_bound_attained", 300, [] { return example("4.3"); }},
      // k = 2 over Q exceeds the 30 minute allowance on one core; it is
      // checked over a prime field instead.
      {4, "conic_and_subspace", 1800,
       [] {
         Outcome k1 = example("4.4", 1);
         Outcome k2 = example("4.4", 2, 32003);
         return Outcome{k1.pass && k2.pass, k1.detail + " | " + k2.detail};
       }},
      {5, "large_ambient_generic_suite", 300,
       [large] {
         return suite({{{{1, 1}, {1, 1}}, {3}, 3},
                       {{{1, 1}, {1, 2}}, {5}, 3},
                       {{{1, 2}, {1, 2}}, {8}, 2},
                       {{{1, 1}, {1, 1}, {1, 1}}, {7}, 2}},
                      10, large);
       }},
      {6, "small_ambient_generic_suite", 300,
       [small, smooth] {
         Outcome sing = suite({{{{1, 2}, {1, 1}}, {3, 4}, 5}}, 10, small);
         Outcome sm = suite({{{{1, 2}, {1, 2}}, {6, 7}, 1}}, 2, smooth);
         return Outcome{sing.pass && sm.pass, "singular range: " + sing.detail + " | smooth range: " + sm.detail};
       }},
      {7, "property_suites", 300, [] { return properties(); }},
      {8, "predictor_exhaustive_sweep", 1, [] { return sweep(); }},
  };
}

}  // namespace
}  // namespace hadamard

int main(int argc, char** argv) {
  using namespace hadamard;
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds && c.id != 8) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + "s limit";
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "c" << c.id << " " << c.name << ": " << o.detail << " ("
              << secs << "s)" << std::endl;
    if (!o.pass) ++failed;
  }
  return failed > 125 ? 125 : failed;
}
