#pragma once

// Exact integer linear algebra and univariate polynomial helpers: Smith
// normal form, Bareiss determinants, resultants and cyclotomic polynomials.

#include <cstdint>
#include <optional>
#include <vector>

#include "ktinv/ring.hpp"

namespace ktinv::linalg {

/// Dense row-major integer matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<BigInt> apply(const std::vector<BigInt>& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Matrix of multiplication by q on coefficient vectors:
/// entry (i, j) = q[(i - j) mod n].
Matrix circulant(const RingElement& q);

/// left * input * right == diagonal, left and right unimodular, diagonal
/// entries d_0 | d_1 | ... nonnegative.
struct SmithForm {
  Matrix left;
  Matrix diagonal;
  Matrix right;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const Matrix& a);

/// Integer solution of A x = b using a precomputed Smith form of A; free
/// variables are set to zero. nullopt when no integer solution exists.
std::optional<std::vector<BigInt>> solve_integer(const SmithForm& snf,
                                                 const std::vector<BigInt>& b);

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(Matrix a);

/// Univariate integer polynomial, coefficients low to high, no trailing zeros
/// (the zero polynomial is empty).
using IntPoly = std::vector<BigInt>;

void trim(IntPoly& f);
int degree(const IntPoly& f);
/// Exact division; fails with an internal error if g does not divide f.
IntPoly exact_divide(const IntPoly& f, const IntPoly& g);

/// Positive divisors of n, ascending.
std::vector<std::uint32_t> divisors(std::uint32_t n);

/// The d-th cyclotomic polynomial, built by dividing t^d - 1 by the lower
/// cyclotomic factors.
IntPoly cyclotomic(std::uint32_t d);

/// Res(f, g) via the determinant of the Sylvester matrix. Zero if either
/// polynomial is zero.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// Lift of a ring element to a polynomial of degree < n.
IntPoly to_poly(const RingElement& q);

/// What is left of |a| after removing every prime factor that also divides
/// |b|. Returns 0 for a == 0. Needs no factorization.
BigInt strip_common_primes(const BigInt& a, const BigInt& b);

}  // namespace ktinv::linalg
