#include "ktinv/ring.hpp"

#include <numeric>
#include <sstream>

#include "ktinv/error.hpp"

namespace ktinv {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed_input: return "malformed_input";
    case ErrorKind::structural: return "structural";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::bound_exceeded: return "bound_exceeded";
    case ErrorKind::config: return "config";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

GroupSpec::GroupSpec(std::uint32_t order) : order_(order), prime_(ktinv::is_prime(order)) {
  if (order < 2 || order > kMaxOrder)
    fail(ErrorKind::malformed_input,
         "group order must be in [2, " + std::to_string(kMaxOrder) +
             "], got " + std::to_string(order));
}

namespace {

void require_same_group(const RingElement& a, const RingElement& b) {
  if (a.group() != b.group())
    fail(ErrorKind::structural,
         "ring elements of different orders: " + std::to_string(a.order()) +
             " vs " + std::to_string(b.order()));
}

std::size_t reduce(std::int64_t e, std::uint32_t n) {
  auto r = e % static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(r < 0 ? r + n : r);
}

}  // namespace

RingElement::RingElement(GroupSpec group)
    : group_(group), coeffs_(group.order()) {}

RingElement::RingElement(GroupSpec group, std::vector<BigInt> coeffs)
    : group_(group), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_.order())
    fail(ErrorKind::malformed_input,
         "expected " + std::to_string(group_.order()) + " coefficients, got " +
             std::to_string(coeffs_.size()));
}

RingElement RingElement::constant(GroupSpec group, const BigInt& c) {
  RingElement e(group);
  e.coeffs_[0] = c;
  return e;
}

RingElement RingElement::monomial(GroupSpec group, std::int64_t exponent,
                                  const BigInt& c) {
  RingElement e(group);
  e.coeffs_[reduce(exponent, group.order())] = c;
  return e;
}

bool RingElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool RingElement::is_nonnegative() const { return all_at_least(0); }

bool RingElement::all_at_least(long bound) const {
  for (const auto& c : coeffs_)
    if (c < bound) return false;
  return true;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_group(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_group(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  *this = mul(*this, other);
  return *this;
}

RingElement& RingElement::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RingElement RingElement::shifted(std::int64_t k) const {
  RingElement r(group_);
  const auto n = order();
  for (std::size_t i = 0; i < n; ++i)
    r.coeffs_[reduce(static_cast<std::int64_t>(i) + k, n)] = coeffs_[i];
  return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
}

RingElement add(const RingElement& a, const RingElement& b) { return a + b; }

RingElement mul(const RingElement& a, const RingElement& b) {
  require_same_group(a, b);
  const std::size_t n = a.order();
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      mpz_addmul(out[k].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return RingElement(a.group(), std::move(out));
}

RingElement pow(const RingElement& a, std::uint64_t n) {
  RingElement result = RingElement::one(a.group());
  RingElement base = a;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1U;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

BigInt augmentation(const RingElement& a) {
  BigInt s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

std::string to_string(const RingElement& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.order(); ++i) {
    const BigInt& c = a[i];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (sgn(c) < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 't';
    if (i > 1) os << '^' << i;
  }
  if (first) return "0";
  return os.str();
}

CharacterPolynomial::CharacterPolynomial(RingElement elem) : elem_(std::move(elem)) {
  if (!elem_.is_nonnegative())
    fail(ErrorKind::malformed_input, "multiplicities must be nonnegative");
  if (elem_.is_zero())
    fail(ErrorKind::malformed_input, "multiplicities must not all be zero");
}

CharacterPolynomial CharacterPolynomial::from_multiplicities(
    GroupSpec group, std::vector<BigInt> mult) {
  return CharacterPolynomial(RingElement(group, std::move(mult)));
}

std::vector<std::uint32_t> CharacterPolynomial::support() const {
  std::vector<std::uint32_t> s;
  for (std::uint32_t i = 0; i < order(); ++i)
    if (sgn(elem_[i]) > 0) s.push_back(i);
  return s;
}

std::uint32_t difference_subgroup_order(const CharacterPolynomial& pv) {
  const auto n = pv.order();
  const auto s = pv.support();
  // The differences generate gcd(n, s_i - s_0 for all i) * Z/nZ.
  std::uint32_t g = n;
  for (auto e : s) g = std::gcd(g, e - s.front());
  return n / g;
}

bool is_primitive(const CharacterPolynomial& pv) {
  return difference_subgroup_order(pv) == pv.order();
}

namespace {

std::uint64_t inverse_mod(std::uint64_t k, std::uint64_t n) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(k);
  while (new_r != 0) {
    const auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(t);
}

// Least m >= 1 with base^m having every coefficient >= 2.
std::uint64_t least_doubling_exponent(const RingElement& base, std::uint64_t cap) {
  RingElement acc = base;
  for (std::uint64_t m = 1; m <= cap; ++m) {
    if (acc.all_at_least(2)) return m;
    acc = mul(acc, base);
  }
  fail(ErrorKind::bound_exceeded,
       "doubling iteration exceeded cap " + std::to_string(cap) +
           " on a primitive input");
}

}  // namespace

DoublingResult min_doubling_power(const CharacterPolynomial& pv, std::uint64_t cap) {
  if (!is_primitive(pv))
    fail(ErrorKind::precondition,
         "p_V = " + to_string(pv.elem()) +
             " is not primitive; some power never has all coefficients >= 2");

  DoublingResult out;
  out.n_min = least_doubling_exponent(pv.elem(), cap);

  const auto n = pv.order();
  std::uint64_t r = 1;
  if (sgn(pv.elem()[1]) == 0) {
    for (auto k : pv.support()) {
      if (k != 0 && std::gcd(k, n) == 1) {
        r = inverse_mod(k, n);
        break;
      }
    }
  }
  const RingElement base = pow(pv.elem(), r);
  out.constructive_bound = r * least_doubling_exponent(base, cap);
  if (out.constructive_bound < out.n_min)
    fail(ErrorKind::internal, "constructive doubling bound below the minimum");
  return out;
}

}  // namespace ktinv
