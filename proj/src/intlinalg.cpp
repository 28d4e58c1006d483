#include "ktinv/intlinalg.hpp"

#include <utility>

#include "ktinv/error.hpp"

namespace ktinv::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BigInt> Matrix::apply(const std::vector<BigInt>& v) const {
  std::vector<BigInt> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      mpz_addmul(out[i].get_mpz_t(), (*this)(i, j).get_mpz_t(), v[j].get_mpz_t());
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        mpz_addmul(c(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

Matrix circulant(const RingElement& q) {
  const std::size_t n = q.order();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = q[(i + n - j) % n];
  return m;
}

namespace {

int cmpabs(const BigInt& a, const BigInt& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] -= q * row[src]
void row_axpy(Matrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    mpz_submul(m(dst, j).get_mpz_t(), q.get_mpz_t(), m(src, j).get_mpz_t());
}

void col_axpy(Matrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    mpz_submul(m(i, dst).get_mpz_t(), q.get_mpz_t(), m(i, src).get_mpz_t());
}

}  // namespace

SmithForm smith_normal_form(const Matrix& a) {
  SmithForm s{Matrix::identity(a.rows()), a, Matrix::identity(a.cols()), 0};
  Matrix& d = s.diagonal;
  const std::size_t rows = a.rows(), cols = a.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(d(i, j)) != 0 && (pi == rows || cmpabs(d(i, j), d(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    swap_rows(d, t, pi);
    swap_rows(s.left, t, pi);
    swap_cols(d, t, pj);
    swap_cols(s.right, t, pj);

    for (;;) {
      bool clean = true;
      BigInt q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_axpy(d, i, t, q);
        row_axpy(s.left, i, t, q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_axpy(d, j, t, q);
        col_axpy(s.right, j, t, q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // Move a smaller remainder into the pivot and repeat.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(d(i, t)) != 0 && cmpabs(d(i, t), d(bi, bj)) < 0) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(d(t, j)) != 0 && cmpabs(d(t, j), d(bi, bj)) < 0) { bi = t; bj = j; }
        swap_rows(d, t, bi);
        swap_rows(s.left, t, bi);
        swap_cols(d, t, bj);
        swap_cols(s.right, t, bj);
        continue;
      }
      // Divisibility chain: fold an offending row into the pivot row.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      const BigInt minus_one = -1;
      row_axpy(d, t, bad, minus_one);
      row_axpy(s.left, t, bad, minus_one);
    }
    if (sgn(d(t, t)) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) s.left(t, j) = -s.left(t, j);
    }
    s.rank = t + 1;
  }
  return s;
}

std::optional<std::vector<BigInt>> solve_integer(const SmithForm& snf,
                                                 const std::vector<BigInt>& b) {
  const auto y = snf.left.apply(b);
  std::vector<BigInt> z(snf.right.rows());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf.rank) {
      const BigInt& di = snf.diagonal(i, i);
      if (!mpz_divisible_p(y[i].get_mpz_t(), di.get_mpz_t())) return std::nullopt;
      mpz_divexact(z[i].get_mpz_t(), y[i].get_mpz_t(), di.get_mpz_t());
    } else if (sgn(y[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf.right.apply(z);
}

BigInt determinant(Matrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) fail(ErrorKind::internal, "determinant of a non-square matrix");
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

void trim(IntPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

IntPoly exact_divide(const IntPoly& f, const IntPoly& g) {
  IntPoly rem = f;
  trim(rem);
  if (g.empty()) fail(ErrorKind::internal, "division by the zero polynomial");
  if (rem.size() < g.size()) {
    if (!rem.empty()) fail(ErrorKind::internal, "inexact polynomial division");
    return {};
  }
  IntPoly quot(rem.size() - g.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& lead = rem[k + g.size() - 1];
    if (!mpz_divisible_p(lead.get_mpz_t(), g.back().get_mpz_t()))
      fail(ErrorKind::internal, "inexact polynomial division");
    mpz_divexact(quot[k].get_mpz_t(), lead.get_mpz_t(), g.back().get_mpz_t());
    for (std::size_t j = 0; j < g.size(); ++j) rem[k + j] -= quot[k] * g[j];
  }
  trim(rem);
  if (!rem.empty()) fail(ErrorKind::internal, "inexact polynomial division");
  trim(quot);
  return quot;
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

IntPoly cyclotomic(std::uint32_t d) {
  IntPoly f(d + 1);
  f[0] = -1;
  f[d] = 1;
  for (auto e : divisors(d))
    if (e < d) f = exact_divide(f, cyclotomic(e));
  return f;
}

BigInt resultant(const IntPoly& f_in, const IntPoly& g_in) {
  IntPoly f = f_in, g = g_in;
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  const std::size_t m = static_cast<std::size_t>(degree(f));
  const std::size_t n = static_cast<std::size_t>(degree(g));
  if (m == 0 && n == 0) return 1;
  Matrix s(m + n, m + n);
  // n shifted rows of f, then m shifted rows of g, highest coefficient first.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = f[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = g[n - k];
  return determinant(std::move(s));
}

IntPoly to_poly(const RingElement& q) {
  IntPoly f(q.coeffs().begin(), q.coeffs().end());
  trim(f);
  return f;
}

BigInt strip_common_primes(const BigInt& a, const BigInt& b) {
  BigInt rest = abs(a);
  if (sgn(rest) == 0) return 0;
  BigInt g;
  const BigInt bb = abs(b);
  for (;;) {
    mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), bb.get_mpz_t());
    if (g == 1) return rest;
    // b == 0 has every prime; gcd(rest, 0) = rest collapses to 1.
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace ktinv::linalg
