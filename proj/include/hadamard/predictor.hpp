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

// Closed-form predictions for Hadamard products of generic varieties:
// ambient thresholds, regimes, dimension and degree, secant dimensions,
// smoothness, and the numeric tables guaranteeing the small-ambient
// hypotheses.

#ifndef HADAMARD_PREDICTOR_HPP
#define HADAMARD_PREDICTOR_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hadamard/arith.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/invariants.hpp"

namespace hadamard {

struct FactorSignature {
  unsigned r = 1;              // dimension
  unsigned d = 1;              // degree of the parameterization
  std::optional<long> h;       // linear-span dimension, default C(r+d,d) - 1

  long span() const { return h ? *h : detail::binomial(r + d, d).get_si() - 1; }
};

enum class ThresholdMode { Span, Parametric };
enum class Regime { Large, Small, OutOfRange };
enum class HfRelation { Multiplicative, StrictlySmallerAtOne, NotApplicable };
enum class Smoothness { Smooth, SingularWithBound, NotClassified };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::Large: return "large";
    case Regime::Small: return "small";
    default: return "out_of_range";
  }
}
inline const char* to_string(HfRelation r) {
  switch (r) {
    case HfRelation::Multiplicative: return "multiplicative";
    case HfRelation::StrictlySmallerAtOne: return "strictly_smaller_at_1";
    default: return "not_applicable";
  }
}
inline const char* to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth: return "smooth";
    case Smoothness::SingularWithBound: return "singular_with_bound";
    default: return "not_classified";
  }
}

struct TableHit {
  std::string table;       // "disjoint_range", "secant_below_range", "singular_range"
  int row = 0;             // 1-based row of the table
  std::string inequality;  // instantiated with numbers
  long n_min = 0, n_max = 0;  // n-range, singular_range table only
  bool holds = false;
};

struct Prediction {
  long threshold = 0;  // N
  ThresholdMode mode = ThresholdMode::Parametric;
  Regime regime = Regime::OutOfRange;
  bool exceeds_dimension_sum = false;  // n > Σr
  long dimension = 0;
  Integer degree;          // multinomial · Π d_i^r_i
  Integer degree_literal;  // multinomial · Π d_i
  HfRelation hf = HfRelation::NotApplicable;
  long secant_dimension = 0;
  Smoothness smoothness = Smoothness::NotClassified;
  long singular_bound = 0;  // lower bound on dim Sing when SingularWithBound
  std::vector<TableHit> hits;
};

inline long dimension_sum(const std::vector<FactorSignature>& sigs) {
  long s = 0;
  for (const auto& f : sigs) s += f.r;
  return s;
}

inline long ambient_threshold(const std::vector<FactorSignature>& sigs, ThresholdMode mode) {
  if (sigs.empty()) throw InputError("no factor signatures");
  Integer prod = 1;
  for (const auto& f : sigs) {
    if (f.r < 1 || f.d < 1) throw InputError("factor dimension and degree must be positive");
    prod *= mode == ThresholdMode::Span ? Integer(f.span() + 1) : detail::binomial(f.r + f.d, f.d);
  }
  prod -= 1;
  if (!prod.fits_slong_p()) throw InputError("threshold too large");
  return prod.get_si();
}

struct RegimeInfo {
  Regime regime = Regime::OutOfRange;
  bool exceeds_dimension_sum = false;
  long threshold = 0;
};

inline RegimeInfo classify_regime(const std::vector<FactorSignature>& sigs, long n,
                                  ThresholdMode mode = ThresholdMode::Parametric) {
  if (n < 1) throw InputError("ambient dimension must be at least 1");
  RegimeInfo info;
  info.threshold = ambient_threshold(sigs, mode);
  long sum = dimension_sum(sigs);
  info.exceeds_dimension_sum = n > sum;
  if (n >= info.threshold) info.regime = Regime::Large;
  else if (n >= info.threshold - sum) info.regime = Regime::Small;
  return info;
}

/// (Σr)! / Π r_i!
inline Integer multinomial(const std::vector<FactorSignature>& sigs) {
  Integer out = 1;
  long acc = 0;
  for (const auto& f : sigs) {
    acc += f.r;
    out *= detail::binomial(acc, f.r);
  }
  return out;
}

/// dim σ2 of the Segre-Veronese variety of the signatures' type.
inline long secant_dim_formula(const std::vector<FactorSignature>& sigs) {
  if (sigs.size() < 2) throw InputError("secant formula needs at least two factors");
  long sum = dimension_sum(sigs);
  if (sigs.size() == 2 && sigs[0].d == 1 && sigs[1].d == 1) return 2 * sum - 1;
  return std::min(ambient_threshold(sigs, ThresholdMode::Parametric), 2 * sum + 1);
}

namespace detail {

struct TableRow {
  std::function<bool(unsigned, unsigned, unsigned, unsigned)> matches;  // (dX, dY, r, s)
  std::function<std::pair<long, long>(unsigned, unsigned)> n_range;      // (r, s), singular_range only
};

inline const std::vector<TableRow>& disjoint_range_rows() {
  static const std::vector<TableRow> rows{
      {[](unsigned dx, unsigned, unsigned, unsigned) { return dx >= 2; }, {}},
      {[](unsigned, unsigned dy, unsigned, unsigned) { return dy >= 2; }, {}},
      {[](unsigned dx, unsigned dy, unsigned r, unsigned s) { return dx == 1 && dy == 1 && r >= 3 && s >= 2; }, {}},
      {[](unsigned dx, unsigned dy, unsigned r, unsigned s) { return dx == 1 && dy == 1 && r >= 2 && s >= 3; }, {}},
  };
  return rows;
}

inline const std::vector<TableRow>& secant_below_range_rows() {
  static const std::vector<TableRow> rows{
      {[](unsigned dx, unsigned dy, unsigned, unsigned) { return dx >= 2 && dy >= 2; }, {}},
      {[](unsigned dx, unsigned dy, unsigned, unsigned) { return dx >= 3 && dy == 1; }, {}},
      {[](unsigned dx, unsigned dy, unsigned r, unsigned) { return dx == 2 && dy == 1 && r >= 2; }, {}},
      {[](unsigned dx, unsigned dy, unsigned, unsigned) { return dx == 1 && dy >= 3; }, {}},
      {[](unsigned dx, unsigned dy, unsigned, unsigned s) { return dx == 1 && dy == 2 && s >= 2; }, {}},
      {[](unsigned dx, unsigned dy, unsigned r, unsigned s) { return dx == 1 && dy == 1 && r == 3 && s >= 5; }, {}},
      {[](unsigned dx, unsigned dy, unsigned r, unsigned s) { return dx == 1 && dy == 1 && r == 4 && s >= 4; }, {}},
      {[](unsigned dx, unsigned dy, unsigned r, unsigned s) { return dx == 1 && dy == 1 && r == 5 && s >= 3; }, {}},
  };
  return rows;
}

inline const std::vector<TableRow>& singular_range_rows() {
  using P = std::pair<long, long>;
  static const std::vector<TableRow> rows{
      {[](unsigned dx, unsigned dy, unsigned r, unsigned) { return dx == 2 && dy == 1 && r == 1; },
       [](unsigned, unsigned s) { return P{2L * s + 1, 2L * s + 2}; }},
      {[](unsigned dx, unsigned dy, unsigned, unsigned s) { return dx == 1 && dy == 2 && s == 1; },
       [](unsigned r, unsigned) { return P{2L * r + 1, 2L * r + 2}; }},
      {[](unsigned dx, unsigned dy, unsigned r, unsigned s) { return dx == 1 && dy == 1 && r == 2 && s >= 3; },
       [](unsigned, unsigned s) { return P{2L * s, 2L * s + 2}; }},
      {[](unsigned dx, unsigned dy, unsigned r, unsigned s) { return dx == 1 && dy == 1 && r >= 3 && s == 2; },
       [](unsigned r, unsigned) { return P{2L * r, 2L * r + 2}; }},
      {[](unsigned dx, unsigned dy, unsigned r, unsigned s) { return dx == 1 && dy == 1 && r == 3 && s == 3; },
       [](unsigned, unsigned) { return P{9, 10}; }},
      {[](unsigned dx, unsigned dy, unsigned r, unsigned s) { return dx == 1 && dy == 1 && r == 3 && s == 4; },
       [](unsigned, unsigned) { return P{12, 12}; }},
      {[](unsigned dx, unsigned dy, unsigned r, unsigned s) { return dx == 1 && dy == 1 && r == 4 && s == 3; },
       [](unsigned, unsigned) { return P{12, 12}; }},
  };
  return rows;
}

}  // namespace detail

/// Rows of the three two-factor tables matching the signatures, each with
/// its implied inequality instantiated and checked. For the singular-range
/// table a given n must also fall in the row's n-range.
inline std::vector<TableHit> lemma_table_lookup(const std::vector<FactorSignature>& sigs,
                                                std::optional<long> n = std::nullopt) {
  if (sigs.size() != 2) return {};
  unsigned dx = sigs[0].d, dy = sigs[1].d, r = sigs[0].r, s = sigs[1].r;
  long big_n = ambient_threshold(sigs, ThresholdMode::Parametric);
  long sum = r + s;
  long low = big_n - sum;
  long sec = secant_dim_formula(sigs);
  auto num = [](long v) { return std::to_string(v); };
  std::vector<TableHit> hits;
  const auto& t1 = detail::disjoint_range_rows();
  for (std::size_t i = 0; i < t1.size(); ++i)
    if (t1[i].matches(dx, dy, r, s))
      hits.push_back({"disjoint_range", static_cast<int>(i + 1), "N-(r+s) = " + num(low) + " > r+s = " + num(sum), 0, 0,
                      low > sum});
  const auto& t2 = detail::secant_below_range_rows();
  for (std::size_t i = 0; i < t2.size(); ++i)
    if (t2[i].matches(dx, dy, r, s))
      hits.push_back({"secant_below_range", static_cast<int>(i + 1),
                      "N-(r+s) = " + num(low) + " >= dim sigma2 = " + num(sec), 0, 0, low >= sec});
  const auto& t3 = detail::singular_range_rows();
  for (std::size_t i = 0; i < t3.size(); ++i) {
    if (!t3[i].matches(dx, dy, r, s)) continue;
    auto [lo, hi] = t3[i].n_range(r, s);
    if (n && (*n < lo || *n > hi)) continue;
    long a = n ? *n : lo, b = n ? *n : hi;
    bool ok = sum < low && low <= a && b <= sec && b <= big_n - 1;
    hits.push_back({"singular_range", static_cast<int>(i + 1),
                    "r+s = " + num(sum) + " < N-(r+s) = " + num(low) + " <= " + num(a) + " <= n <= " + num(b) +
                        " <= dim sigma2 = " + num(sec),
                    lo, hi, ok});
  }
  return hits;
}

/// Full prediction for generic factors of the given signatures in P^n.
inline Prediction predict(const std::vector<FactorSignature>& sigs, long n,
                          ThresholdMode mode = ThresholdMode::Parametric) {
  Prediction p;
  RegimeInfo info = classify_regime(sigs, n, mode);
  p.mode = mode;
  p.threshold = info.threshold;
  p.regime = info.regime;
  p.exceeds_dimension_sum = info.exceeds_dimension_sum;
  p.dimension = dimension_sum(sigs);
  Integer lit = multinomial(sigs), full = lit;
  for (const auto& f : sigs) {
    lit *= f.d;
    for (unsigned k = 0; k < f.r; ++k) full *= f.d;
  }
  p.degree = full;
  p.degree_literal = lit;
  if (sigs.size() >= 2) p.secant_dimension = secant_dim_formula(sigs);
  bool small_ok = p.regime == Regime::Small && p.exceeds_dimension_sum;
  if (p.regime == Regime::Large) {
    p.hf = HfRelation::Multiplicative;
    p.smoothness = Smoothness::Smooth;
  } else if (small_ok) {
    p.hf = HfRelation::StrictlySmallerAtOne;
    if (n >= p.secant_dimension) {
      p.smoothness = Smoothness::Smooth;
    } else {
      p.smoothness = Smoothness::SingularWithBound;
      p.singular_bound = 2 * p.dimension - n;
    }
  }
  p.hits = lemma_table_lookup(sigs, n);
  return p;
}

/// (dimension, degree, HF relation); only defined inside a theorem's range.
struct PredictedInvariants {
  long dimension;
  Integer degree;
  HfRelation hf;
};

inline PredictedInvariants predicted_invariants(const std::vector<FactorSignature>& sigs, long n,
                                                ThresholdMode mode = ThresholdMode::Parametric) {
  Prediction p = predict(sigs, n, mode);
  if (p.hf == HfRelation::NotApplicable)
    throw InputError("n = " + std::to_string(n) + " is outside the range where the formulas apply");
  return {p.dimension, p.degree, p.hf};
}

inline Smoothness smoothness_prediction(const std::vector<FactorSignature>& sigs, long n, long* bound = nullptr) {
  Prediction p = predict(sigs, n);
  if (p.regime == Regime::OutOfRange) throw InputError("n is outside both ambient regimes");
  if (bound) *bound = p.singular_bound;
  return p.smoothness;
}

struct SweepResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

/// Every table row instantiated for all d_X, d_Y, r, s in [1, limit] (and
/// every n of the singular-range rows), with the implied inequality checked.
inline SweepResult lemma_sweep(unsigned limit = 4) {
  SweepResult out;
  for (unsigned dx = 1; dx <= limit; ++dx)
    for (unsigned dy = 1; dy <= limit; ++dy)
      for (unsigned r = 1; r <= limit; ++r)
        for (unsigned s = 1; s <= limit; ++s) {
          std::vector<FactorSignature> sigs{{r, dx, {}}, {s, dy, {}}};
          for (const auto& hit : lemma_table_lookup(sigs)) {
            std::vector<TableHit> each{hit};
            if (hit.table == "singular_range") {
              each.clear();
              for (long n = hit.n_min; n <= hit.n_max; ++n)
                for (const auto& h : lemma_table_lookup(sigs, n))
                  if (h.table == hit.table && h.row == hit.row) each.push_back(h);
            }
            for (const auto& h : each) {
              ++out.checked;
              if (!h.holds)
                out.failures.push_back(h.table + " row " + std::to_string(h.row) + " (" + std::to_string(dx) + "," +
                                       std::to_string(dy) + "," + std::to_string(r) + "," + std::to_string(s) +
                                       "): " + h.inequality);
            }
          }
        }
  return out;
}

}  // namespace hadamard

#endif  // HADAMARD_PREDICTOR_HPP
