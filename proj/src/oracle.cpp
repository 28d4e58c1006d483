#include "ktinv/oracle.hpp"

#include <algorithm>

namespace ktinv::oracle {

namespace {

bool all_nonnegative(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x >= 0; });
}

bool all_zero(const Coeffs& c) {
  return std::all_of(c.begin(), c.end(), [](const BigInt& x) { return x == 0; });
}

Coeffs unit_vector(std::size_t n) {
  Coeffs e(n);
  e[0] = 1;
  return e;
}

}  // namespace

Coeffs naive_convolve(const Coeffs& a, const Coeffs& b) {
  const std::size_t n = a.size();
  Coeffs c(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) c[k] += a[i] * b[(k + n - i) % n];
  return c;
}

PositivityResult bf_positivity(const Coeffs& num, const Coeffs& pv, const OracleConfig& cfg) {
  Coeffs acc = num;
  for (std::size_t l = 0; l <= pv.size(); ++l) {
    if (all_zero(acc)) return {PositivityOutcome::zero, 0};
    acc = naive_convolve(acc, pv);
  }
  acc = num;
  for (std::uint64_t l = 0; l <= cfg.max_l; ++l) {
    if (all_nonnegative(acc)) return {PositivityOutcome::positive, l};
    acc = naive_convolve(acc, pv);
  }
  return {PositivityOutcome::negative_up_to_bound, 0};
}

std::optional<UnitWitness> bf_unit_search(const Coeffs& num, const Coeffs& pv,
                                          const OracleConfig& cfg) {
  const std::size_t n = num.size();
  const long h = static_cast<long>(cfg.max_height);
  Coeffs target = unit_vector(n);
  for (std::uint64_t l = 0; l <= cfg.max_unit_l; ++l) {
    Coeffs r(n, BigInt(-h));
    for (;;) {
      if (naive_convolve(num, r) == target) return UnitWitness{r, l};
      // Odometer with c0 most significant.
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (r[i] < h) {
          ++r[i];
          break;
        }
        r[i] = -h;
        if (i == 0) {
          i = n + 1;  // wrapped: exhausted
          break;
        }
      }
      if (i == n + 1) break;
    }
    target = naive_convolve(target, pv);
  }
  return std::nullopt;
}

std::optional<std::uint64_t> bf_min_doubling(const Coeffs& pv, std::uint64_t cap) {
  Coeffs acc = pv;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (std::all_of(acc.begin(), acc.end(), [](const BigInt& x) { return x >= 2; })) return n;
    acc = naive_convolve(acc, pv);
  }
  return std::nullopt;
}

}  // namespace ktinv::oracle
