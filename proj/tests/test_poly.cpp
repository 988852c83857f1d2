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

#include <gtest/gtest.h>

#include <random>

#include "hadamard/parse.hpp"
#include "support.hpp"

namespace hadamard {
namespace {

using testing::monomials_of_degree;
using testing::random_poly;
using Q = Rational;
using Fp = PrimeFieldElement;

RingPtr qring(std::size_t n, MonomialOrder order = MonomialOrder::degrevlex()) {
  return Ring::make(Ring::indexed("x", n), CoeffField::rational(), order);
}

TEST(MonomialOrder, DegrevlexAndLexOnThreeVariables) {
  auto dr = MonomialOrder::degrevlex();
  auto lx = MonomialOrder::lex();
  Monomial x0x2{1, 0, 1}, x1sq{0, 2, 0}, x0{1, 0, 0}, x1x2{0, 1, 1};
  EXPECT_TRUE(dr.greater(x1sq, x0x2));  // smaller last exponent wins
  EXPECT_TRUE(lx.greater(x0x2, x1sq));
  EXPECT_TRUE(dr.greater(x1x2, x0));
  EXPECT_TRUE(lx.greater(x0, x1x2));
}

TEST(MonomialOrder, BlockOrderComparesFirstBlockFirst) {
  auto blk = MonomialOrder::block({1});
  Monomial a{1, 0, 0}, b{0, 5, 5};
  EXPECT_TRUE(blk.greater(a, b));
  EXPECT_TRUE(blk.greater(Monomial{0, 2, 0}, Monomial{0, 1, 1}));
}

TEST(MonomialOrder, TotalAndMultiplicativeOnRandomMonomials) {
  std::mt19937_64 gen(5);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::block({2})};
  auto pool = monomials_of_degree(4, 3);
  for (const auto& m : monomials_of_degree(4, 2)) pool.push_back(m);
  for (const auto& order : orders) {
    for (int i = 0; i < 400; ++i) {
      const Monomial& a = pool[gen() % pool.size()];
      const Monomial& b = pool[gen() % pool.size()];
      const Monomial& c = pool[gen() % pool.size()];
      auto ab = order.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ab, 0 <=> order.compare(b, a));
      EXPECT_EQ(order.compare(a * c, b * c), ab);
      EXPECT_TRUE(order.compare(a * c, a) >= 0);
    }
  }
}

TEST(Polynomial, RingAxiomsOnRandomPolynomials) {
  auto r = qring(3);
  std::mt19937_64 gen(17);
  for (int i = 0; i < 60; ++i) {
    auto f = random_poly<Q>(gen, r, 3, 5), g = random_poly<Q>(gen, r, 3, 5), h = random_poly<Q>(gen, r, 2, 4);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f * Polynomial<Q>::one(r), f);
  }
}

TEST(Polynomial, EvaluationIsARingMap) {
  auto r = Ring::make(Ring::indexed("x", 3), CoeffField::modular(65521));
  std::mt19937_64 gen(19);
  for (int i = 0; i < 60; ++i) {
    auto f = random_poly<Fp>(gen, r, 3, 6), g = random_poly<Fp>(gen, r, 3, 6);
    std::vector<Fp> pt;
    for (int k = 0; k < 3; ++k) pt.push_back(testing::small_scalar<Fp>(gen, r->field(), -50, 50));
    EXPECT_EQ((f * g).evaluate(pt), f.evaluate(pt) * g.evaluate(pt));
    EXPECT_EQ((f + g).evaluate(pt), f.evaluate(pt) + g.evaluate(pt));
  }
}

TEST(Polynomial, DerivativeSatisfiesLeibniz) {
  auto r = qring(3);
  std::mt19937_64 gen(23);
  for (int i = 0; i < 40; ++i) {
    auto f = random_poly<Q>(gen, r, 3, 4), g = random_poly<Q>(gen, r, 3, 4);
    for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ((f * g).derivative(v), f.derivative(v) * g + f * g.derivative(v));
  }
}

TEST(Polynomial, SubstitutionComposes) {
  auto r = qring(2);
  auto x0 = Polynomial<Q>::variable(r, 0), x1 = Polynomial<Q>::variable(r, 1);
  auto f = parse_poly<Q>("x0^2 - 3*x0*x1 + 2", r);
  auto g = f.substitute({x0 + x1, x1});
  EXPECT_EQ(g, parse_poly<Q>("x0^2 - x0*x1 - 2*x1^2 + 2", r));
}

TEST(Parse, RoundTripsFiveHundredRandomPolynomials) {
  auto r = Ring::make({"x0", "x1", "x2", "y0", "y1"});
  auto rp = Ring::make({"x0", "x1", "x2", "y0", "y1"}, CoeffField::modular(65521));
  std::mt19937_64 gen(29);
  for (int i = 0; i < 250; ++i) {
    auto f = random_poly<Q>(gen, r, 4, 1 + gen() % 7);
    f = f.scaled(rat_normalize(Integer(1), Integer(1 + static_cast<long>(gen() % 5))));
    EXPECT_EQ(parse_poly<Q>(to_string(f), r), f) << to_string(f);
    auto g = random_poly<Fp>(gen, rp, 4, 1 + gen() % 7);
    EXPECT_EQ(parse_poly<Fp>(to_string(g), rp), g) << to_string(g);
  }
}

TEST(Parse, PrintsInDescendingOrderWithUnitCoefficientsOmitted) {
  auto r = qring(3);
  EXPECT_EQ(to_string(parse_poly<Q>("x2 + x0^2 - x1*x0 + 1/2", r)), "x0^2 - x0*x1 + x2 + 1/2");
  EXPECT_EQ(to_string(parse_poly<Q>("-(x0 - x1)*(x0 - x1)", r)), "-x0^2 + 2*x0*x1 - x1^2");
  EXPECT_EQ(to_string(Polynomial<Q>(r)), "0");
}

TEST(Parse, ReportsErrorPositions) {
  auto r = qring(2);
  try {
    parse_poly<Q>("x0 + + x1", r);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_poly<Q>("x0 + x7", r), ParseError);
  EXPECT_THROW(parse_poly<Q>("x0 / 0", r), InputError);
  EXPECT_THROW(parse_poly<Q>("", r), ParseError);
  EXPECT_THROW(parse_poly<Q>("(x0 + x1)^2", r), ParseError);
}

TEST(Parse, NormalizesJuxtaposedInput) {
  auto r = qring(6);
  auto f = parse_poly<Q>(normalize_juxtaposition("2x_0x_2 - 5x_1^2 + 3(x_4+x_5)x_3", *r), r);
  EXPECT_EQ(f, parse_poly<Q>("2*x0*x2 - 5*x1^2 + 3*x3*x4 + 3*x3*x5", r));
}

}  // namespace
}  // namespace hadamard
