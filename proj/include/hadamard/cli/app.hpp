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

#ifndef HADAMARD_CLI_APP_HPP
#define HADAMARD_CLI_APP_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hadamard/cli/pipeline.hpp"

#ifndef HADAMARD_DATA_DIR
#define HADAMARD_DATA_DIR "data/examples"
#endif

namespace hadamard::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kInputError = 2, kBudget = 3 };

/// "1:1,1:2" -> signatures; an optional third field is h.
inline std::vector<FactorSignature> parse_signatures(const std::string& text) {
  std::vector<FactorSignature> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::vector<long> parts;
    std::stringstream is(item);
    std::string p;
    while (std::getline(is, p, ':')) {
      try {
        std::size_t pos = 0;
        long v = std::stol(p, &pos);
        if (pos != p.size()) throw std::invalid_argument(p);
        parts.push_back(v);
      } catch (const std::exception&) {
        throw InputError("bad factor signature '" + item + "'");
      }
    }
    if (parts.size() < 2 || parts.size() > 3 || parts[0] < 1 || parts[1] < 1)
      throw InputError("factor signatures are r:d or r:d:h with r, d >= 1");
    FactorSignature s{static_cast<unsigned>(parts[0]), static_cast<unsigned>(parts[1]), {}};
    if (parts.size() == 3) s.h = parts[2];
    out.push_back(s);
  }
  if (out.empty()) throw InputError("no factor signatures");
  return out;
}

inline std::vector<FactorShape> shapes_of(const std::vector<FactorSignature>& sigs) {
  std::vector<FactorShape> out;
  for (const auto& s : sigs) out.push_back({s.r, s.d});
  return out;
}

/// "3..6" or "3,5,7".
inline std::vector<long> parse_range(const std::string& text) {
  std::vector<long> out;
  try {
    if (auto dots = text.find(".."); dots != std::string::npos) {
      long a = std::stol(text.substr(0, dots)), b = std::stol(text.substr(dots + 2));
      for (long n = a; n <= b; ++n) out.push_back(n);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    }
  } catch (const std::exception&) {
    throw InputError("bad range '" + text + "'");
  }
  for (long n : out)
    if (n < 1) throw InputError("ambient dimensions must be at least 1");
  return out;
}

inline int exit_for(const Json& report) {
  for (const auto& v : report["verdicts"])
    if (v["status"] == "mismatch") return kMismatch;
  return kOk;
}

/// Runs the tool on `args` (without the program name).
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hadamard products of projective varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string report_kind = "text", out_path;
  app.add_option("--report", report_kind, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write the report to a file");
  unsigned truncation = 5;
  std::size_t budget = 0;
  app.add_option("--truncate", truncation, "Hilbert function truncation T");
  app.add_option("--budget", budget, "Maximum pair reductions per Groebner basis");

  std::string scenario_path, factor_name, factors_text, n_text, mode = "parametric", data_dir = HADAMARD_DATA_DIR,
                                                                  example_id;
  bool no_singular = false;
  long n_value = 0;
  unsigned k = 1, seeds = 3, jobs = 1;
  std::uint64_t seed = 0, prime = 0;

  auto* c_had = app.add_subcommand("hadamard", "Compute a Hadamard product from a scenario");
  auto* c_imp = app.add_subcommand("implicitize", "Implicit equations of parametric factors");
  auto* c_inv = app.add_subcommand("invariants", "Dimension, degree and Hilbert function of each factor");
  auto* c_sing = app.add_subcommand("singular", "Singular locus of the product or of one factor");
  for (auto* c : {c_had, c_imp, c_inv, c_sing}) c->add_option("--scenario", scenario_path)->required();
  for (auto* c : {c_imp, c_sing}) c->add_option("--factor", factor_name);
  c_had->add_flag("--no-singular", no_singular);
  auto* c_pred = app.add_subcommand("predict", "Closed-form predictions");
  c_pred->add_option("--factors", factors_text, "r:d[:h],...")->required();
  c_pred->add_option("--n", n_value)->required();
  c_pred->add_option("--mode", mode)->check(CLI::IsMember({"span", "parametric"}));
  auto* c_ver = app.add_subcommand("verify-example", "Run a built-in worked example");
  c_ver->add_option("id", example_id)->required()->check(CLI::IsMember({"4.1", "4.2", "4.3", "4.4"}));
  c_ver->add_option("--k", k);
  c_ver->add_option("--seed", seed);
  c_ver->add_option("--data-dir", data_dir);
  c_ver->add_option("--prime", prime, "sample example 4.4 over Z/p instead of Q");
  c_ver->add_flag("--no-singular", no_singular);
  auto* c_suite = app.add_subcommand("suite", "Generic-instance suite");
  c_suite->add_option("--factors", factors_text, "shape sets r:d,...;r:d,...")->required();
  c_suite->add_option("--n", n_text, "ambient range a..b or list");
  c_suite->add_option("--seeds", seeds);
  c_suite->add_option("--seed-base", seed);
  c_suite->add_option("--jobs", jobs);
  c_suite->add_option("--prime", prime, "sample over Z/p instead of Q");
  c_suite->add_flag("--no-singular", no_singular);
  auto* c_sample = app.add_subcommand("sample-generic", "Sample a generic instance as a scenario");
  c_sample->add_option("--factors", factors_text, "r:d,...")->required();
  c_sample->add_option("--n", n_value)->required();
  c_sample->add_option("--seed", seed);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  AnalysisOptions opts;
  opts.truncation = truncation;
  if (budget) opts.gb.max_pair_reductions = budget;
  opts.singular = !no_singular;
  bool json = report_kind == "json";
  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write '" + out_path + "'");
    f << text;
  };

  try {
    Json report;
    if (c_had->parsed() || c_imp->parsed() || c_inv->parsed() || c_sing->parsed()) {
      Scenario sc = load_scenario(scenario_path);
      if (sc.budget && !budget) opts.gb.max_pair_reductions = *sc.budget;
      if (!app.get_option("--truncate")->count()) opts.truncation = sc.truncation;
      opts.seed = sc.seed;
      report = with_field(sc.field, [&](auto tag) -> Json {
        using K = typename decltype(tag)::type;
        if (c_had->parsed()) {
          Analysis<K> a = analyze(build_product_factors<K>(sc), static_cast<std::size_t>(sc.ambient), opts);
          return full_report("hadamard", a, expectation_verdicts(a, sc), sc.notes);
        }
        if (c_imp->parsed() || c_inv->parsed()) {
          Json factors = Json::array();
          for (const auto& spec : sc.factors) {
            if (!factor_name.empty() && spec.name != factor_name) continue;
            if (c_imp->parsed() && !spec.parametric) continue;
            auto v = build_factor<K>(sc, spec);
            Ideal<K> i = implicit_ideal(v, opts.gb);
            factors.push_back(Json{{"name", spec.name},
                                   {"ideal", generators_json(i.groebner_basis(opts.gb))},
                                   {"invariants", to_json(variety_invariants(i, opts.truncation,
                                                                             MonomialOrder::degrevlex(), opts.gb))}});
          }
          if (factors.empty()) throw InputError("no matching factors");
          return make_report(c_imp->parsed() ? "implicitize" : "invariants", Json{{"factors", factors}}, Json(), {},
                             Json());
        }
        Ideal<K> target = factor_name.empty()
                              ? hadamard_product(build_product_factors<K>(sc), static_cast<std::size_t>(sc.ambient),
                                                 opts.gb).ideal
                              : implicit_ideal(build_factor<K>(sc, sc.factor(factor_name)), opts.gb);
        InvariantReport inv = variety_invariants(target, opts.truncation, MonomialOrder::degrevlex(), opts.gb);
        Json computed{{"variety", factor_name.empty() ? "product" : factor_name}, {"invariants", to_json(inv)}};
        if (inv.dimension >= 0) computed["singular"] = to_json(singular_locus(target, inv.dimension, opts.truncation, opts.gb));
        return make_report("singular", computed, Json(), {}, Json());
      });
    } else if (c_pred->parsed()) {
      auto sigs = parse_signatures(factors_text);
      Prediction p = predict(sigs, n_value, mode == "span" ? ThresholdMode::Span : ThresholdMode::Parametric);
      Json sj = Json::array();
      for (const auto& s : sigs) sj.push_back(to_json(s));
      Json pj = to_json(p);
      pj["signatures"] = sj;
      pj["ambient"] = n_value;
      report = make_report("predict", Json(), pj, {}, Json());
    } else if (c_ver->parsed()) {
      ExampleOptions eo{data_dir, k, seed, opts};
      if (prime) eo.field = CoeffField::modular(prime);
      report = verify_example(example_id, eo);
    } else if (c_suite->parsed()) {
      SuiteConfig cfg;
      std::stringstream ss(factors_text);
      std::string set;
      while (std::getline(ss, set, ';')) cfg.shapes.push_back(shapes_of(parse_signatures(set)));
      if (!n_text.empty()) cfg.ambients = parse_range(n_text);
      cfg.seeds = seeds;
      cfg.seed_base = seed;
      cfg.jobs = jobs;
      cfg.analysis = opts;
      if (prime) cfg.field = CoeffField::modular(prime);
      report = suite_generic(cfg);
    } else if (c_sample->parsed()) {
      if (n_value < 1) throw InputError("ambient dimension must be at least 1");
      auto shapes = shapes_of(parse_signatures(factors_text));
      auto inst = sample_generic_instance<Rational>(shapes, static_cast<std::size_t>(n_value), seed);
      std::string text = write_scenario(inst.factors, static_cast<std::size_t>(n_value), CoeffField::rational(), seed,
                                        {std::string("sampled generic instance, certified ") +
                                         (inst.certified ? "yes" : "no")});
      if (!json) {
        emit(text);
        return kOk;
      }
      report = make_report("sample-generic", Json{{"scenario", text}}, Json(), {},
                           Json{{"certified_generic", inst.certified},
                                {"coefficient_rank", inst.rank},
                                {"expected_rank", inst.expected_rank},
                                {"attempts", inst.attempts}});
    }
    emit(render(report, json));
    return exit_for(report);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace hadamard::cli

#endif  // HADAMARD_CLI_APP_HPP
