#pragma once

// Exact arithmetic in the cyclic convolution algebra Z[t]/(t^n - 1), the
// representation ring of Z/nZ, together with character polynomials.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ktinv {

using BigInt = mpz_class;

/// Largest supported group order. Convolution is quadratic and unit
/// witnesses need an n x n integer Smith form, so this is a sanity cap.
inline constexpr std::uint32_t kMaxOrder = 1024;

/// Default cap for any "iterate until it works" loop.
inline constexpr std::uint64_t kDefaultIterationCap = 10000;

/// The cyclic group Z/nZ, n >= 2.
class GroupSpec {
 public:
  explicit GroupSpec(std::uint32_t order);

  std::uint32_t order() const noexcept { return order_; }
  bool is_prime() const noexcept { return prime_; }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) noexcept {
    return a.order_ == b.order_;
  }

 private:
  std::uint32_t order_;
  bool prime_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Element of R = Z[t]/(t^n - 1) stored densely: coeffs[i] multiplies t^i.
class RingElement {
 public:
  explicit RingElement(GroupSpec group);
  RingElement(GroupSpec group, std::vector<BigInt> coeffs);

  static RingElement zero(GroupSpec group) { return RingElement(group); }
  static RingElement one(GroupSpec group) { return constant(group, 1); }
  static RingElement constant(GroupSpec group, const BigInt& c);
  /// c * t^exponent, exponent reduced mod n (negative allowed).
  static RingElement monomial(GroupSpec group, std::int64_t exponent,
                              const BigInt& c = 1);

  const GroupSpec& group() const noexcept { return group_; }
  std::uint32_t order() const noexcept { return group_.order(); }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  bool is_nonnegative() const;
  /// All coefficients >= bound.
  bool all_at_least(long bound) const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);
  RingElement& operator*=(const BigInt& scalar);
  RingElement operator-() const;

  /// Multiplication by t^k, i.e. a cyclic rotation of the coefficients.
  RingElement shifted(std::int64_t k) const;

  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  GroupSpec group_;
  std::vector<BigInt> coeffs_;
};

inline RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
inline RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
inline RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
inline RingElement operator*(RingElement a, const BigInt& s) { return a *= s; }

RingElement add(const RingElement& a, const RingElement& b);
/// Cyclic convolution: c[k] = sum over i + j = k (mod n) of a[i] * b[j].
RingElement mul(const RingElement& a, const RingElement& b);
RingElement pow(const RingElement& a, std::uint64_t n);
/// Evaluation at t = 1.
BigInt augmentation(const RingElement& a);

/// Human-readable polynomial, e.g. "1+2t-t^3". Zero renders as "0".
std::string to_string(const RingElement& a);

/// The polynomial p_V of a representation V: nonnegative multiplicities, not
/// all zero.
class CharacterPolynomial {
 public:
  explicit CharacterPolynomial(RingElement elem);
  static CharacterPolynomial from_multiplicities(GroupSpec group,
                                                 std::vector<BigInt> mult);

  const RingElement& elem() const noexcept { return elem_; }
  const GroupSpec& group() const noexcept { return elem_.group(); }
  std::uint32_t order() const noexcept { return elem_.order(); }
  /// dim V = p_V(1).
  BigInt dimension() const { return augmentation(elem_); }
  /// Exponents i with a_i > 0, ascending.
  std::vector<std::uint32_t> support() const;

  friend bool operator==(const CharacterPolynomial& a,
                         const CharacterPolynomial& b) {
    return a.elem_ == b.elem_;
  }

 private:
  RingElement elem_;
};

/// Order of the subgroup of Z/nZ generated by the support differences
/// {i - j : a_i, a_j > 0}.
std::uint32_t difference_subgroup_order(const CharacterPolynomial& pv);

/// True iff the support differences generate Z/nZ, equivalently the
/// circulant C(p_V) is a primitive matrix. For prime n this means V contains
/// at least two distinct characters.
bool is_primitive(const CharacterPolynomial& pv);

struct DoublingResult {
  std::uint64_t n_min = 0;
  std::uint64_t constructive_bound = 0;

  friend bool operator==(const DoublingResult&, const DoublingResult&) = default;
};

/// Least N >= 1 with every coefficient of p_V^N at least 2, plus the bound
/// reached along the constructive argument (pass to p_V^r so the t^1
/// coefficient is nonzero, then multiply by p_V^r until every coefficient is
/// at least 2).
DoublingResult min_doubling_power(const CharacterPolynomial& pv,
                                  std::uint64_t cap = kDefaultIterationCap);

}  // namespace ktinv
