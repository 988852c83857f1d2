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

#include <algorithm>
#include <numeric>
#include <random>

#include "hadamard/parse.hpp"
#include "support.hpp"

namespace hadamard {
namespace {

using Q = Rational;
const CoeffField kQ = CoeffField::rational();

Matrix<Q> random_matrix(std::mt19937_64& gen, std::size_t r, std::size_t c, long lo = -5, long hi = 5) {
  std::vector<Q> data;
  for (std::size_t i = 0; i < r * c; ++i) data.push_back(testing::small_scalar<Q>(gen, kQ, lo, hi));
  return Matrix<Q>(r, c, std::move(data));
}

// Sum over permutations; the oracle for small determinants.
Q leibniz(const Matrix<Q>& a) {
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Q total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    Q term(1);
    for (std::size_t i = 0; i < perm.size(); ++i) term *= a(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(Linalg, DeterminantAgreesWithLeibnizExpansion) {
  std::mt19937_64 gen(47);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int i = 0; i < 20; ++i) {
      Matrix<Q> a = random_matrix(gen, n, n, -2, 2);
      EXPECT_EQ(determinant(a), leibniz(a));
    }
}

TEST(Linalg, RankPlusNullityIsTheColumnCount) {
  std::mt19937_64 gen(53);
  for (int i = 0; i < 40; ++i) {
    std::size_t rows = 1 + gen() % 5, cols = 1 + gen() % 6;
    // A product of thin factors has rank at most the inner size.
    std::size_t inner = 1 + gen() % 4;
    Matrix<Q> a = random_matrix(gen, rows, inner), b = random_matrix(gen, inner, cols);
    std::vector<Q> data;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        Q s;
        for (std::size_t k = 0; k < inner; ++k) s += a(r, k) * b(k, c);
        data.push_back(s);
      }
    Matrix<Q> m(rows, cols, data);
    auto ker = kernel_basis(m, kQ);
    EXPECT_EQ(rank(m) + ker.size(), cols);
    EXPECT_LE(rank(m), std::min({rows, cols, inner}));
    for (const auto& v : ker) {
      for (const auto& x : mat_vec(m, v, kQ)) EXPECT_TRUE(x.is_zero());
      auto first = std::find_if(v.begin(), v.end(), [](const Q& x) { return !x.is_zero(); });
      ASSERT_NE(first, v.end());
      EXPECT_TRUE(first->is_one());
    }
  }
}

TEST(Linalg, CompletionToAnInvertibleMatrixKeepsTheGivenColumns) {
  std::mt19937_64 gen(59);
  for (int i = 0; i < 20; ++i) {
    Matrix<Q> a = random_matrix(gen, 6, 3);
    if (rank(a) < 3) continue;
    Matrix<Q> m = complete_to_invertible(a, kQ);
    ASSERT_EQ(m.rows(), 6u);
    ASSERT_EQ(m.cols(), 6u);
    EXPECT_FALSE(determinant(m).is_zero());
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(m(r, c), a(r, c));
  }
  Matrix<Q> deficient(3, 2, std::vector<Q>{1, 2, 2, 4, 3, 6});
  EXPECT_THROW(complete_to_invertible(deficient, kQ), CannotComplete);
}

TEST(Linalg, PolynomialDeterminantAndMinors) {
  auto r = Ring::make(Ring::indexed("x", 3));
  auto p = [&](const char* s) { return parse_poly<Q>(s, r); };
  Matrix<Polynomial<Q>> a(2, 3, {p("x0"), p("x1"), p("x2"), p("x1"), p("x2"), p("x0")});
  auto ms = minors(a, 2);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_EQ(ms[0], p("x0*x2 - x1^2"));
  EXPECT_EQ(ms[1], p("x0^2 - x1*x2"));
  EXPECT_EQ(ms[2], p("x1*x0 - x2^2"));
  Matrix<Polynomial<Q>> sq(2, 2, {p("x0"), p("x1"), p("x1"), p("x0")});
  // Reducing modulo x0 - x1 at each step gives zero.
  auto reduce = [&](const Polynomial<Q>& f) { return f.substitute({p("x1"), p("x1"), p("x2")}); };
  EXPECT_EQ(determinant(sq), p("x0^2 - x1^2"));
  EXPECT_TRUE(determinant(sq, std::function<Polynomial<Q>(const Polynomial<Q>&)>(reduce)).is_zero());
}

}  // namespace
}  // namespace hadamard
