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

// Line-oriented scenario files.
//
//   ambient <n>
//   field rational | field prime <p>
//   factor <name> param vars <v0> ... <vr> degree <d>
//     coord <i> = <poly>            (n + 1 lines, any order)
//   factor <name> ideal
//     gen = <poly>                  (one or more lines)
//   truncate <T>
//   seed <u64>
//   budget <pairs>
//   product <name> <name> ...       (factors to multiply; default all)
//   expect <key> <value>            (dimension, degree, singular_dimension,
//                                    singular_degree, smooth)
//   note <text>
//
// '#' starts a comment; blank lines are ignored.

#ifndef HADAMARD_CLI_SCENARIO_HPP
#define HADAMARD_CLI_SCENARIO_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hadamard/geometry/presentation.hpp"
#include "hadamard/parse.hpp"

namespace hadamard::cli {

struct FactorSpec {
  std::string name;
  bool parametric = true;
  std::vector<std::string> vars;
  unsigned degree = 0;
  std::map<std::size_t, std::string> coords;
  std::vector<std::string> gens;
  std::size_t line = 0;
};

struct Scenario {
  long ambient = -1;
  CoeffField field = CoeffField::rational();
  std::vector<FactorSpec> factors;
  std::vector<std::string> product;
  unsigned truncation = 5;
  std::uint64_t seed = 0;
  std::optional<std::size_t> budget;
  std::map<std::string, std::string> expect;
  std::vector<std::string> notes;

  const FactorSpec& factor(const std::string& name) const {
    for (const auto& f : factors)
      if (f.name == name) return f;
    throw InputError("unknown factor '" + name + "'");
  }

  /// Factors entering the product, in order.
  std::vector<std::string> product_names() const {
    if (!product.empty()) return product;
    std::vector<std::string> out;
    for (const auto& f : factors) out.push_back(f.name);
    return out;
  }
};

namespace detail {

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& w, std::size_t line, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(w, &pos);
    if (pos != w.size() || v < 0) throw std::invalid_argument(w);
    return static_cast<T>(v);
  } catch (const std::exception&) {
    throw InputError(std::string("line ") + std::to_string(line) + ": bad " + what + " '" + w + "'");
  }
}

}  // namespace detail

inline Scenario parse_scenario(std::istream& in) {
  using detail::parse_number;
  Scenario sc;
  std::string raw;
  std::size_t lineno = 0;
  FactorSpec* cur = nullptr;
  std::set<std::string> names;
  auto fail = [&](const std::string& msg) -> InputError {
    return InputError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto w = detail::words(line);
    const std::string& kw = w[0];
    if (kw == "ambient") {
      if (w.size() != 2) throw fail("expected 'ambient <n>'");
      sc.ambient = parse_number<long>(w[1], lineno, "ambient dimension");
      if (sc.ambient < 1) throw fail("ambient dimension must be at least 1");
    } else if (kw == "field") {
      if (w.size() == 2 && w[1] == "rational") sc.field = CoeffField::rational();
      else if (w.size() == 3 && w[1] == "prime") sc.field = CoeffField::modular(parse_number<std::uint64_t>(w[2], lineno, "prime"));
      else throw fail("expected 'field rational' or 'field prime <p>'");
    } else if (kw == "factor") {
      if (w.size() < 3) throw fail("incomplete factor header");
      FactorSpec f;
      f.name = w[1];
      f.line = lineno;
      if (!names.insert(f.name).second) throw fail("duplicate factor name '" + f.name + "'");
      if (w[2] == "ideal") {
        if (w.size() != 3) throw fail("expected 'factor <name> ideal'");
        f.parametric = false;
      } else if (w[2] == "param") {
        if (w.size() < 7 || w[3] != "vars" || w[w.size() - 2] != "degree")
          throw fail("expected 'factor <name> param vars <v0..vr> degree <d>'");
        f.vars.assign(w.begin() + 4, w.end() - 2);
        f.degree = parse_number<unsigned>(w.back(), lineno, "degree");
        if (f.degree == 0) throw fail("degree must be positive");
      } else {
        throw fail("factor kind must be 'param' or 'ideal'");
      }
      sc.factors.push_back(std::move(f));
      cur = &sc.factors.back();
    } else if (kw == "coord") {
      if (!cur || !cur->parametric) throw fail("'coord' outside a parametric factor");
      auto eq = line.find('=');
      if (eq == std::string::npos || w.size() < 4 || w[2] != "=") throw fail("expected 'coord <i> = <poly>'");
      std::size_t i = parse_number<std::size_t>(w[1], lineno, "coordinate index");
      if (!cur->coords.emplace(i, detail::trim(line.substr(eq + 1))).second)
        throw fail("coordinate " + std::to_string(i) + " given twice");
    } else if (kw == "gen") {
      if (!cur || cur->parametric) throw fail("'gen' outside an ideal factor");
      auto eq = line.find('=');
      if (eq == std::string::npos || w.size() < 3 || w[1] != "=") throw fail("expected 'gen = <poly>'");
      cur->gens.push_back(detail::trim(line.substr(eq + 1)));
    } else if (kw == "truncate") {
      if (w.size() != 2) throw fail("expected 'truncate <T>'");
      sc.truncation = parse_number<unsigned>(w[1], lineno, "truncation");
    } else if (kw == "seed") {
      if (w.size() != 2) throw fail("expected 'seed <u64>'");
      sc.seed = parse_number<std::uint64_t>(w[1], lineno, "seed");
    } else if (kw == "budget") {
      if (w.size() != 2) throw fail("expected 'budget <pairs>'");
      sc.budget = parse_number<std::size_t>(w[1], lineno, "budget");
    } else if (kw == "product") {
      if (w.size() < 3) throw fail("a product needs at least two factors");
      sc.product.assign(w.begin() + 1, w.end());
    } else if (kw == "expect") {
      if (w.size() != 3) throw fail("expected 'expect <key> <value>'");
      static const std::set<std::string> keys{"dimension", "degree", "singular_dimension", "singular_degree", "smooth"};
      if (!keys.count(w[1])) throw fail("unknown expectation '" + w[1] + "'");
      sc.expect[w[1]] = w[2];
    } else if (kw == "note") {
      sc.notes.push_back(detail::trim(line.substr(4)));
    } else {
      throw fail("unknown keyword '" + kw + "'");
    }
  }
  if (sc.ambient < 0) throw InputError("missing 'ambient' line");
  if (sc.factors.empty()) throw InputError("no factors");
  for (const auto& f : sc.factors) {
    if (f.parametric) {
      for (std::size_t i = 0; i <= static_cast<std::size_t>(sc.ambient); ++i)
        if (!f.coords.count(i))
          throw InputError("factor '" + f.name + "' is missing coordinate " + std::to_string(i));
      if (f.coords.size() != static_cast<std::size_t>(sc.ambient) + 1)
        throw InputError("factor '" + f.name + "' has coordinates beyond the ambient space");
    } else if (f.gens.empty()) {
      throw InputError("factor '" + f.name + "' has no generators");
    }
  }
  for (const auto& p : sc.product)
    if (!names.count(p)) throw InputError("product names unknown factor '" + p + "'");
  return sc;
}

inline Scenario parse_scenario_text(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file '" + path + "'");
  return parse_scenario(in);
}

/// Presentation of one factor over K.
template <Field K>
VarietyPresentation<K> build_factor(const Scenario& sc, const FactorSpec& f) {
  std::size_t n = static_cast<std::size_t>(sc.ambient);
  if (f.parametric) {
    RingPtr params = Ring::make(f.vars, sc.field, MonomialOrder::degrevlex());
    std::vector<Polynomial<K>> forms;
    for (const auto& [i, text] : f.coords) forms.push_back(parse_poly<K>(text, params));
    return VarietyPresentation<K>::parametric(f.name, n, std::move(forms), f.degree);
  }
  RingPtr x = ambient_ring(n, sc.field);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : f.gens) gens.push_back(parse_poly<K>(g, x));
  return VarietyPresentation<K>::implicit(f.name, Ideal<K>(x, gens));
}

template <Field K>
std::vector<VarietyPresentation<K>> build_product_factors(const Scenario& sc) {
  std::vector<VarietyPresentation<K>> out;
  for (const auto& name : sc.product_names()) out.push_back(build_factor<K>(sc, sc.factor(name)));
  return out;
}

/// Scenario text for a list of parametric factors.
template <Field K>
std::string write_scenario(const std::vector<VarietyPresentation<K>>& factors, std::size_t n, const CoeffField& field,
                           std::uint64_t seed, const std::vector<std::string>& notes = {}) {
  std::ostringstream out;
  for (const auto& s : notes) out << "note " << s << "\n";
  out << "ambient " << n << "\n";
  if (field.kind == CoeffField::Kind::Prime) out << "field prime " << field.prime << "\n";
  else out << "field rational\n";
  out << "seed " << seed << "\n";
  for (const auto& f : factors) {
    out << "factor " << f.name() << " param vars";
    for (const auto& v : f.parameter_ring()->names()) out << " " << v;
    out << " degree " << f.form_degree() << "\n";
    for (std::size_t i = 0; i < f.forms().size(); ++i) out << "coord " << i << " = " << to_string(f.forms()[i]) << "\n";
  }
  return out.str();
}

}  // namespace hadamard::cli

#endif  // HADAMARD_CLI_SCENARIO_HPP
