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

// The compute-and-compare pipeline behind the command-line tool: analysis
// of one product, the built-in worked examples, and the generic-instance
// suite.

#ifndef HADAMARD_CLI_PIPELINE_HPP
#define HADAMARD_CLI_PIPELINE_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "hadamard/cli/report.hpp"
#include "hadamard/cli/scenario.hpp"
#include "hadamard/geometry/certificate.hpp"
#include "hadamard/geometry/hadamard.hpp"
#include "hadamard/geometry/sampling.hpp"
#include "hadamard/geometry/segre.hpp"
#include "hadamard/geometry/singular.hpp"
#include "hadamard/predictor.hpp"

namespace hadamard::cli {

/// Calls f(std::type_identity<K>{}) with K matching the field.
template <class F>
decltype(auto) with_field(const CoeffField& field, F&& f) {
  if (field.is_rational()) return f(std::type_identity<Rational>{});
  return f(std::type_identity<PrimeFieldElement>{});
}

struct AnalysisOptions {
  unsigned truncation = 5;
  bool singular = true;
  bool certificates = true;
  std::size_t point_samples = 20;
  std::uint64_t seed = 0;
  GroebnerOptions gb;
  // Largest N for which the Segre-Veronese ideal is implicitized to test
  // membership of the projection center.
  long max_segre_ambient = 12;
};

template <Field K>
struct Analysis {
  std::size_t n = 0;
  std::vector<VarietyPresentation<K>> factors;
  std::vector<InvariantReport> factor_invariants;
  std::vector<FactorSignature> signatures;
  std::optional<Ideal<K>> product;
  InvariantReport invariants;
  std::optional<SingularReport<K>> singular;
  std::optional<Prediction> prediction;
  // Certificates (parametric factors only).
  std::optional<std::size_t> coefficient_rank, expected_rank;
  std::optional<K> m_prime_determinant;
  std::optional<ProjectionSpec<K>> projection;
  std::optional<bool> center_on_segre_veronese;
  std::optional<std::size_t> point_failures, point_skipped;
};

/// (r, d, h) of a factor: parametric factors give r and d directly; for
/// implicit ones r is the dimension and d the degree's r-th root when the
/// degree is a perfect power (the degree itself otherwise). h = HF(1) - 1.
template <Field K>
FactorSignature infer_signature(const VarietyPresentation<K>& v, const InvariantReport& inv) {
  FactorSignature s;
  long h = inv.hilbert_function.size() > 1 ? inv.hilbert_function[1].get_si() - 1 : 0;
  if (v.is_parametric()) {
    s.r = static_cast<unsigned>(v.parameter_count() - 1);
    s.d = v.form_degree();
  } else {
    if (inv.dimension < 1 || !inv.degree) throw InputError("factor '" + v.name() + "' has no positive dimension");
    s.r = static_cast<unsigned>(inv.dimension);
    long deg = inv.degree->get_si();
    s.d = static_cast<unsigned>(deg);
    for (long d = 1; d <= deg; ++d) {
      Integer p = 1;
      for (unsigned k = 0; k < s.r; ++k) p *= d;
      if (p == deg) {
        s.d = static_cast<unsigned>(d);
        break;
      }
      if (p > deg) break;
    }
  }
  s.h = h;
  return s;
}

template <Field K>
Analysis<K> analyze(const std::vector<VarietyPresentation<K>>& factors, std::size_t n, const AnalysisOptions& o) {
  Analysis<K> a;
  a.n = n;
  a.factors = factors;
  bool all_parametric = true, all_linear = true;
  for (const auto& f : factors) {
    Ideal<K> i = implicit_ideal(f, o.gb);
    a.factor_invariants.push_back(variety_invariants(i, o.truncation, MonomialOrder::degrevlex(), o.gb));
    all_parametric = all_parametric && f.is_parametric();
    all_linear = all_linear && f.is_parametric() && f.form_degree() == 1;
  }
  HadamardResult<K> h = hadamard_product(factors, n, o.gb);
  a.product = h.ideal;
  a.invariants = variety_invariants(h.ideal, o.truncation, MonomialOrder::degrevlex(), o.gb);
  if (o.singular && a.invariants.dimension >= 0) a.singular = singular_locus(h.ideal, a.invariants.dimension, o.truncation, o.gb);
  try {
    for (std::size_t i = 0; i < factors.size(); ++i) a.signatures.push_back(infer_signature(factors[i], a.factor_invariants[i]));
    a.prediction = predict(a.signatures, static_cast<long>(n));
  } catch (const InputError&) {
    a.signatures.clear();
  }
  if (o.certificates && all_parametric) {
    Matrix<K> m = coefficient_matrix(factors);
    a.coefficient_rank = rank(m);
    a.expected_rank = std::min(m.rows(), m.cols());
    if (all_linear && m.rows() == m.cols()) a.m_prime_determinant = determinant(m);
    a.projection = projection_center(coefficient_points(factors), factors.front().field());
    long big_n = static_cast<long>(m.cols()) - 1;
    if (!a.projection->center.empty() && big_n <= o.max_segre_ambient) {
      std::vector<unsigned> degs, dims;
      for (const auto& f : factors) {
        degs.push_back(f.form_degree());
        dims.push_back(static_cast<unsigned>(f.parameter_count() - 1));
      }
      auto sv = segre_veronese<K>(degs, dims, factors.front().field());
      a.center_on_segre_veronese = center_on_variety(*a.projection, sv.implicit_ideal(o.gb));
    }
    std::size_t skipped = 0;
    a.point_failures = product_point_failures(h.ideal, factors, o.point_samples, o.seed, &skipped);
    a.point_skipped = skipped;
  }
  return a;
}

template <Field K>
Json vector_json(const std::vector<K>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

template <Field K>
Json computed_json(const Analysis<K>& a) {
  Json c;
  c["ambient"] = a.n;
  Json fs = Json::array();
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    Json f;
    f["name"] = a.factors[i].name();
    f["kind"] = a.factors[i].is_parametric() ? "parametric" : "implicit";
    f["invariants"] = to_json(a.factor_invariants[i]);
    if (i < a.signatures.size()) f["signature"] = to_json(a.signatures[i]);
    fs.push_back(f);
  }
  c["factors"] = fs;
  c["product"] = Json{{"ideal", generators_json(a.product->groebner_basis())}, {"invariants", to_json(a.invariants)},
                      {"closure", true}};
  if (a.singular) c["singular"] = to_json(*a.singular);
  Json hf = Json::array();
  for (unsigned t = 0; t < a.invariants.hilbert_function.size(); ++t) {
    Integer p = 1;
    for (const auto& f : a.factor_invariants) p *= f.hilbert_function[t];
    hf.push_back(integer_json(p));
  }
  c["hf_factor_product"] = hf;
  return c;
}

template <Field K>
Json certificates_json(const Analysis<K>& a) {
  Json c = Json::object();
  if (a.coefficient_rank) {
    c["coefficient_rank"] = *a.coefficient_rank;
    c["expected_rank"] = *a.expected_rank;
    c["certified_generic"] = *a.coefficient_rank == *a.expected_rank;
  }
  if (a.m_prime_determinant) c["m_prime_determinant"] = a.m_prime_determinant->to_string();
  if (a.projection) {
    Json centers = Json::array();
    for (const auto& v : a.projection->center) centers.push_back(vector_json(v));
    c["center"] = centers;
    c["center_dimension"] = a.projection->center_dimension;
  }
  if (a.center_on_segre_veronese) c["center_on_segre_veronese"] = *a.center_on_segre_veronese;
  if (a.point_failures)
    c["point_vanishing"] = Json{{"failures", *a.point_failures}, {"skipped", *a.point_skipped}};
  return c;
}

/// Verdicts for "expect" lines of a scenario.
template <Field K>
std::vector<Verdict> expectation_verdicts(const Analysis<K>& a, const Scenario& sc) {
  std::vector<Verdict> out;
  auto num = [](const std::string& s) -> Json {
    try {
      std::size_t pos = 0;
      long v = std::stol(s, &pos);
      if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    return s;
  };
  for (const auto& [key, value] : sc.expect) {
    Json expected = num(value);
    Json computed;
    if (key == "dimension") computed = a.invariants.dimension;
    else if (key == "degree") computed = a.invariants.degree ? integer_json(*a.invariants.degree) : Json(nullptr);
    else if (!a.singular) {
      out.push_back({"expect." + key, "scenario expectation", expected, nullptr, Status::NotApplicable});
      continue;
    } else if (key == "singular_dimension") computed = a.singular->invariants.dimension;
    else if (key == "singular_degree")
      computed = a.singular->invariants.degree ? integer_json(*a.singular->invariants.degree) : Json(nullptr);
    else if (key == "smooth") {
      expected = value == "yes" || value == "true";
      computed = a.singular->smooth;
    }
    out.push_back(compare("expect." + key, "scenario expectation", expected, computed));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Worked examples.

struct ExampleOptions {
  std::string data_dir;
  unsigned k = 1;          // size parameter of the conic-and-subspace example
  std::uint64_t seed = 0;  // its sampling seed
  AnalysisOptions analysis;
  CoeffField field = CoeffField::rational();  // of the conic-and-subspace example
};

inline std::string example_path(const std::string& dir, const std::string& id) {
  std::string file = id;
  for (auto& c : file)
    if (c == '.') c = '_';
  return dir + "/ex" + file + ".txt";
}

template <Field K>
Json full_report(const std::string& command, const Analysis<K>& a, const std::vector<Verdict>& verdicts,
                 const std::vector<std::string>& notes = {}) {
  Json r = make_report(command, computed_json(a), a.prediction ? to_json(*a.prediction) : Json(), verdicts,
                       certificates_json(a));
  if (!notes.empty()) r["notes"] = notes;
  return r;
}

inline Json integer_or_null(const std::optional<Integer>& v) { return v ? integer_json(*v) : Json(nullptr); }

/// Generic conic C and k-plane L in P^(2k+1), sampled over the example's field.
template <Field K>
Json conic_subspace_example(const ExampleOptions& eo) {
  AnalysisOptions o = eo.analysis;
  long k = eo.k;
  std::size_t n = static_cast<std::size_t>(2 * k + 1);
  auto inst = sample_generic_instance<K>({{1, 2}, {eo.k, 1}}, n, eo.seed, eo.field);
  inst.factors[0] = VarietyPresentation<K>::parametric("C", n, inst.factors[0].forms(), 2);
  inst.factors[1] = VarietyPresentation<K>::parametric("L", n, inst.factors[1].forms(), 1);
  o.seed = eo.seed;
  Analysis<K> a = analyze(inst.factors, n, o);
  std::vector<Verdict> v;
  v.push_back(compare("instance.certified_generic", "sampled conic and subspace are generic", true, inst.certified));
  v.push_back(compare("product.dimension", "dim(C * L) = k + 1", k + 1, a.invariants.dimension));
  v.push_back(compare("product.degree", "deg(C * L) = 2(k + 1)", 2 * (k + 1), integer_or_null(a.invariants.degree)));
  if (a.singular)
    v.push_back(check("singular.dimension_lower_bound", "dim Sing(C * L) >= 1", ">= 1",
                      a.singular->invariants.dimension, a.singular->invariants.dimension >= 1));
  if (a.prediction) {
    v.push_back(compare("predictor.regime", "n lies in the small-ambient range", "small", to_string(a.prediction->regime)));
    v.push_back(compare("predictor.degree", "formula degree 2(k + 1)", 2 * (k + 1), integer_json(a.prediction->degree)));
    v.push_back(compare("predictor.singular_bound", "formula bound 2 + 2k - (2k + 1) = 1", 1,
                        a.prediction->singular_bound));
  }
  return full_report("verify-example", a, v, {"example 4.4 with k = " + std::to_string(k) + ", seed " +
                                                std::to_string(eo.seed) + ", field " + eo.field.to_string()});
}

inline Json verify_example(const std::string& id, const ExampleOptions& eo) {
  AnalysisOptions o = eo.analysis;
  if (id == "4.4") {
    if (eo.k < 1 || eo.k > 2) throw InputError("k must be 1 or 2");
    return with_field(eo.field, [&](auto tag) {
      using K = typename decltype(tag)::type;
      Json r = conic_subspace_example<K>(eo);
      r["example"] = id;
      return r;
    });
  }
  if (id != "4.1" && id != "4.2" && id != "4.3") throw InputError("unknown example '" + id + "'");
  Scenario sc = load_scenario(example_path(eo.data_dir, id));
  if (sc.budget) o.gb.max_pair_reductions = *sc.budget;
  o.truncation = sc.truncation;
  o.seed = sc.seed;
  auto factors = build_product_factors<Rational>(sc);
  Analysis<Rational> a = analyze(factors, static_cast<std::size_t>(sc.ambient), o);
  std::vector<Verdict> v = expectation_verdicts(a, sc);
  const RingPtr x = a.product->ring_ptr();
  if (id == "4.1") {
    auto l1 = build_factor<Rational>(sc, sc.factor("L1"));
    auto l2 = build_factor<Rational>(sc, sc.factor("L2"));
    Matrix<Rational> m = build_m_prime<Rational>({l1, l2});
    Rational det = determinant(m);
    v.push_back(compare("m_prime.determinant", "det M' = 0", "0", det.to_string()));
    Integer hx = a.factor_invariants[0].hilbert_function[1], hy = a.factor_invariants[1].hilbert_function[1];
    Integer hp = a.invariants.hilbert_function[1];
    v.push_back(check("hf.product_at_1", "HF of the product differs from HF_X HF_Y", "differs",
                      Json{{"product", integer_json(hp)}, {"factors", integer_json(hx * hy)}}, hp != hx * hy));
    v.push_back(compare("transcription.span_line", "L1 parameterizes X", true,
                        ideal_equal(implicitize(l1, o.gb), a.factors[0].ideal(), o.gb)));
    bool plane_ok = true;
    for (const auto& g : a.factors[1].ideal().generators())
      if (g.total_degree() == 1 && !g.substitute(l2.forms()).is_zero()) plane_ok = false;
    v.push_back(compare("transcription.span_plane", "L2 parameterizes the plane of Y", true, plane_ok));
    Json r = full_report("verify-example", a, v, sc.notes);
    r["certificates"]["m_prime"] = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) r["certificates"]["m_prime"].push_back(vector_json(m.row(i)));
    r["certificates"]["m_prime_rank"] = rank(m);
    r["example"] = id;
    return r;
  }
  if (id == "4.2") {
    v.push_back(check("product.degree_below_formula", "deg(X * Y) = 3 is below the formula value 4",
                      a.prediction ? "< " + a.prediction->degree.get_str() : std::string("< formula"),
                      integer_or_null(a.invariants.degree),
                      a.prediction && a.invariants.degree && *a.invariants.degree < a.prediction->degree));
    v.push_back(compare("m_prime.rank", "M' has maximum rank 5", 5, a.coefficient_rank ? Json(*a.coefficient_rank) : Json()));
    bool point_ok = false;
    Json center = Json::array();
    if (a.projection && a.projection->center.size() == 1) {
      ProjectivePoint<Rational> got(a.projection->center[0]);
      std::vector<Rational> want{Rational(0), Rational(0), Rational(-2), Rational(0), Rational(0), Rational(1)};
      point_ok = got == ProjectivePoint<Rational>(want);
      center = vector_json(got.normalized().coords());
    }
    v.push_back(check("center.point", "the projection center is the point [0:0:-2:0:0:1]", "[0:0:-2:0:0:1]", center,
                      point_ok));
    v.push_back(compare("center.on_segre_veronese", "the center lies on the Segre-Veronese variety S", true,
                        a.center_on_segre_veronese ? Json(*a.center_on_segre_veronese) : Json()));
    for (const auto& [param, eqs] : {std::pair<std::string, std::string>{"X", "Xeq"}, {"Y", "Yeq"}}) {
      auto p = build_factor<Rational>(sc, sc.factor(param));
      auto e = build_factor<Rational>(sc, sc.factor(eqs));
      v.push_back(compare("transcription." + param, "parameterization of " + param + " matches its equations", true,
                          ideal_equal(implicitize(p, o.gb), e.ideal(), o.gb)));
    }
    Json r = full_report("verify-example", a, v, sc.notes);
    r["example"] = id;
    return r;
  }
  // 4.3
  if (a.singular && a.prediction)
    v.push_back(compare("singular.bound_attained", "dim Sing(X * Y) = 2r + 2s - n", 2 * a.prediction->dimension - static_cast<long>(a.n),
                        a.singular->invariants.dimension));
  if (a.prediction) {
    v.push_back(compare("predictor.regime", "n = 3 lies in the small-ambient range", "small", to_string(a.prediction->regime)));
    v.push_back(compare("predictor.degree", "formula degree 4", integer_json(a.prediction->degree),
                        integer_or_null(a.invariants.degree)));
  }
  Json r = full_report("verify-example", a, v, sc.notes);
  r["example"] = id;
  return r;
}

// ---------------------------------------------------------------------------
// Generic-instance suite.

struct SuiteConfig {
  std::vector<std::vector<FactorShape>> shapes;
  std::vector<long> ambients;  // empty: use each shape set's own ranges
  unsigned seeds = 3;
  std::uint64_t seed_base = 0;
  unsigned jobs = 1;
  AnalysisOptions analysis;
  CoeffField field = CoeffField::rational();
};

struct SuiteInstance {
  std::vector<FactorShape> shapes;
  long n = 0;
  std::uint64_t seed = 0;
};

inline std::vector<FactorSignature> signatures_of(const std::vector<FactorShape>& shapes) {
  std::vector<FactorSignature> s;
  for (const auto& f : shapes) s.push_back({f.r, f.d, {}});
  return s;
}

/// Instance verdicts: the predictor's claims checked against the computation.
template <Field K>
std::vector<Verdict> instance_verdicts(const Analysis<K>& a, const Prediction& p, unsigned truncation) {
  std::vector<Verdict> v;
  bool in_range = p.hf != HfRelation::NotApplicable;
  if (!in_range) {
    v.push_back({"predictor.range", "n lies in a range covered by the formulas", "large or small", to_string(p.regime),
                 Status::NotApplicable});
    return v;
  }
  v.push_back(compare("product.dimension", "dim = sum of r_i", p.dimension, a.invariants.dimension));
  v.push_back(compare("product.degree", "deg = multinomial * prod d_i^r_i", integer_json(p.degree),
                      integer_or_null(a.invariants.degree)));
  if (p.hf == HfRelation::Multiplicative) {
    bool all = true;
    for (unsigned t = 0; t <= truncation; ++t) {
      Integer prod = 1;
      for (const auto& f : a.factor_invariants) prod *= f.hilbert_function[t];
      all = all && prod == a.invariants.hilbert_function[t];
    }
    v.push_back(compare("hf.multiplicative", "HF = product of factor HFs for t <= T", true, all));
  } else {
    Integer prod = 1;
    for (const auto& f : a.factor_invariants) prod *= f.hilbert_function[1];
    v.push_back(check("hf.smaller_at_1", "HF(1) < product of factor HF(1)", integer_json(prod),
                      integer_json(a.invariants.hilbert_function[1]), a.invariants.hilbert_function[1] < prod));
  }
  if (a.singular) {
    if (p.smoothness == Smoothness::Smooth)
      v.push_back(compare("singular.smooth", "the product is smooth", true, a.singular->smooth));
    else if (p.smoothness == Smoothness::SingularWithBound)
      v.push_back(check("singular.dimension_lower_bound", "dim Sing >= 2 sum r_i - n", ">= " + std::to_string(p.singular_bound),
                        a.singular->invariants.dimension, a.singular->invariants.dimension >= p.singular_bound));
  }
  if (a.point_failures)
    v.push_back(compare("points.vanish", "generators vanish at sampled product points", 0, *a.point_failures));
  return v;
}

template <Field K>
Json run_instance(const SuiteInstance& in, const SuiteConfig& cfg) {
  Json r;
  Json shapes = Json::array();
  for (const auto& s : in.shapes) shapes.push_back(Json{{"r", s.r}, {"d", s.d}});
  r["shapes"] = shapes;
  r["ambient"] = in.n;
  r["seed"] = in.seed;
  try {
    auto inst = sample_generic_instance<K>(in.shapes, static_cast<std::size_t>(in.n), in.seed, cfg.field);
    r["certified_generic"] = inst.certified;
    r["coefficient_rank"] = inst.rank;
    Prediction p = predict(signatures_of(in.shapes), in.n);
    r["predicted"] = to_json(p);
    if (!inst.certified) {
      r["status"] = "skipped_non_generic";
      r["verdicts"] = Json::array();
      return r;
    }
    AnalysisOptions o = cfg.analysis;
    o.seed = in.seed;
    o.singular = o.singular && p.hf != HfRelation::NotApplicable;
    Analysis<K> a = analyze(inst.factors, static_cast<std::size_t>(in.n), o);
    auto v = instance_verdicts(a, p, o.truncation);
    if (p.regime == Regime::Large) {
      auto cert = equivalence_certificate(*a.product, inst.factors, o.truncation, o.gb);
      v.push_back(compare("equivalence.certificate", "product is a linear image of the Segre-Veronese variety", true,
                          cert.holds()));
    }
    r["computed"] = Json{{"invariants", to_json(a.invariants)}};
    if (a.singular) r["computed"]["singular"] = to_json(a.singular->invariants);
    r["verdicts"] = verdicts_json(v);
    r["status"] = any_mismatch(v) ? "mismatch" : "match";
  } catch (const BudgetExceeded& e) {
    r["status"] = "budget_exceeded";
    r["error"] = e.what();
    r["verdicts"] = Json::array();
  }
  return r;
}

/// Default n values: the large-ambient threshold plus the small range.
inline std::vector<long> default_ambients(const std::vector<FactorShape>& shapes) {
  auto sigs = signatures_of(shapes);
  long big_n = ambient_threshold(sigs, ThresholdMode::Parametric);
  long sum = dimension_sum(sigs);
  std::vector<long> out;
  for (long n = std::max(sum + 1, big_n - sum); n <= big_n; ++n) out.push_back(n);
  return out;
}

inline Json suite_generic(const SuiteConfig& cfg) {
  std::vector<SuiteInstance> instances;
  for (const auto& s : cfg.shapes) {
    auto ns = cfg.ambients.empty() ? default_ambients(s) : cfg.ambients;
    for (long n : ns)
      for (unsigned k = 0; k < cfg.seeds; ++k) instances.push_back({s, n, cfg.seed_base + k});
  }
  std::vector<Json> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++)
      results[i] = with_field(cfg.field, [&](auto tag) {
        using K = typename decltype(tag)::type;
        return run_instance<K>(instances[i], cfg);
      });
  };
  unsigned jobs = std::max(1u, cfg.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Json agg{{"instances", results.size()}, {"match", 0}, {"mismatch", 0}, {"skipped_non_generic", 0},
           {"budget_exceeded", 0}, {"verdicts_matched", 0}, {"verdicts_total", 0}};
  std::vector<Verdict> summary;
  for (const auto& r : results) {
    agg[r["status"].get<std::string>()] = agg[r["status"].get<std::string>()].get<long>() + 1;
    for (const auto& v : r["verdicts"]) {
      if (v["status"] == "not_applicable") continue;
      agg["verdicts_total"] = agg["verdicts_total"].get<long>() + 1;
      if (v["status"] == "match") agg["verdicts_matched"] = agg["verdicts_matched"].get<long>() + 1;
    }
  }
  summary.push_back(compare("suite.all_match", "every certified instance matches its predictions",
                            agg["verdicts_total"], agg["verdicts_matched"]));
  Json report = make_report("suite", Json{{"instances", results}}, Json(), summary, Json{{"aggregate", agg}});
  return report;
}

}  // namespace hadamard::cli

#endif  // HADAMARD_CLI_PIPELINE_HPP
