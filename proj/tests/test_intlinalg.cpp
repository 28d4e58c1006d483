#include <random>

#include "doctest.h"
#include "ktinv/error.hpp"
#include "ktinv/intlinalg.hpp"
#include "support.hpp"

using namespace ktinv;
using namespace ktinv::linalg;
using namespace ktinv::testing;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

bool is_diagonal_chain(const SmithForm& s) {
  const Matrix& d = s.diagonal;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && sgn(d(i, j)) != 0) return false;
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(d(i, i)) < 0) return false;
    if ((i < s.rank) != (sgn(d(i, i)) != 0)) return false;
    if (i + 1 < s.rank && !mpz_divisible_p(d(i + 1, i + 1).get_mpz_t(), d(i, i).get_mpz_t()))
      return false;
  }
  return true;
}

BigInt abs_det(const Matrix& m) { return abs(determinant(m)); }

// Laplace expansion, used as an independent check on small matrices.
BigInt laplace(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    BigInt term = m(0, c) * laplace(minor);
    if (c % 2 == 0) total += term; else total -= term;
  }
  return total;
}

}  // namespace

TEST_CASE("circulant matches multiplication") {
  auto q = elem(4, {1, 2, 0, -1});
  auto x = elem(4, {3, -1, 4, 1});
  CHECK(circulant(q).apply(to_vec(x)) == to_vec(mul(q, x)));
  auto c = circulant(elem(3, {1, 1, 0}));
  CHECK(c(0, 0) == 1);
  CHECK(c(1, 0) == 1);
  CHECK(c(2, 0) == 0);
  CHECK(c(0, 2) == 1);
}

TEST_CASE("smith normal form on a textbook matrix") {
  auto a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  auto s = smith_normal_form(a);
  CHECK(s.left * a * s.right == s.diagonal);
  CHECK(is_diagonal_chain(s));
  CHECK(s.rank == 3);
  CHECK(s.diagonal(0, 0) == 2);
  CHECK(s.diagonal(1, 1) == 6);
  CHECK(s.diagonal(2, 2) == 12);
  CHECK(abs_det(s.left) == 1);
  CHECK(abs_det(s.right) == 1);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = static_cast<long>(rng() % 13) - 6;
    auto s = smith_normal_form(a);
    CHECK(s.left * a * s.right == s.diagonal);
    CHECK(is_diagonal_chain(s));
    CHECK(abs_det(s.left) == 1);
    CHECK(abs_det(s.right) == 1);
  }
}

TEST_CASE("integer solving") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(rng() % 9) - 4;
    std::vector<BigInt> x(n);
    for (auto& v : x) v = static_cast<long>(rng() % 11) - 5;
    auto b = a.apply(x);
    auto s = smith_normal_form(a);
    auto sol = solve_integer(s, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
  }
  auto two = from_rows({{2}});
  CHECK_FALSE(solve_integer(smith_normal_form(two), big({1})).has_value());
  CHECK(solve_integer(smith_normal_form(two), big({6})) == big({3}));
  auto zero = from_rows({{0, 0}, {0, 0}});
  CHECK_FALSE(solve_integer(smith_normal_form(zero), big({0, 1})).has_value());
}

TEST_CASE("determinant agrees with Laplace expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(rng() % 7) - 3;
    CHECK(determinant(a) == laplace(a));
  }
  CHECK(determinant(Matrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), Error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == big({-1, 1}));
  CHECK(cyclotomic(2) == big({1, 1}));
  CHECK(cyclotomic(3) == big({1, 1, 1}));
  CHECK(cyclotomic(4) == big({1, 0, 1}));
  CHECK(cyclotomic(6) == big({1, -1, 1}));
  CHECK(cyclotomic(12) == big({1, 0, -1, 0, 1}));
  // 105 is the first index with a coefficient outside {-1, 0, 1}.
  auto c105 = cyclotomic(105);
  CHECK(degree(c105) == 48);
  CHECK(c105[7] == -2);
  // t^n - 1 is the product of Phi_d over d | n.
  for (std::uint32_t n = 1; n <= 30; ++n) {
    IntPoly prod{1};
    for (auto d : divisors(n)) {
      auto f = cyclotomic(d);
      IntPoly out(prod.size() + f.size() - 1);
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += prod[i] * f[j];
      prod = out;
    }
    IntPoly expect(n + 1);
    expect[0] = -1;
    expect[n] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("resultants") {
  // Res(t + 1, Phi_d) = Phi_d(-1) up to sign.
  CHECK(abs(resultant(big({1, 1}), cyclotomic(3))) == 1);
  CHECK(resultant(big({1, 1}), cyclotomic(2)) == 0);
  CHECK(abs(resultant(big({1, 1}), cyclotomic(1))) == 2);
  CHECK(abs(resultant(big({2}), cyclotomic(3))) == 4);
  CHECK(abs(resultant(big({1, 1, 1}), cyclotomic(3))) == 0);
  // Res(t - a, g) = g(a) up to sign.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    long a = static_cast<long>(rng() % 11) - 5;
    auto g = big(random_vector(rng, 1 + rng() % 5, -4, 4));
    trim(g);
    if (g.empty()) continue;
    BigInt val = 0, pw = 1;
    for (const auto& c : g) {
      val += c * pw;
      pw *= a;
    }
    CHECK(abs(resultant(big({-a, 1}), g)) == abs(val));
  }
  CHECK(resultant({}, cyclotomic(3)) == 0);
}

TEST_CASE("exact division refuses inexact quotients") {
  CHECK(exact_divide(big({-1, 0, 1}), big({-1, 1})) == big({1, 1}));
  CHECK_THROWS_AS(exact_divide(big({1, 0, 1}), big({-1, 1})), Error);
}

TEST_CASE("stripping common primes") {
  CHECK(strip_common_primes(12, 2) == 3);
  CHECK(strip_common_primes(-45, 3) == 5);
  CHECK(strip_common_primes(8, 6) == 1);
  CHECK(strip_common_primes(7, 1) == 7);
  CHECK(strip_common_primes(0, 5) == 0);
  CHECK(strip_common_primes(30, 0) == 1);
}
