#pragma once

// Brute-force reference implementations. These transcribe the definitions
// literally and share no arithmetic with the decision procedures: the
// convolution here is a separate naive loop over plain coefficient vectors.

#include <cstdint>
#include <optional>
#include <vector>

#include "ktinv/ring.hpp"

namespace ktinv::oracle {

struct OracleConfig {
  std::uint64_t max_l = 50;        // positivity iterations
  std::uint64_t max_height = 20;   // |r_i| bound in unit search
  std::uint64_t max_unit_l = 6;    // l bound in unit search
};

using Coeffs = std::vector<BigInt>;

Coeffs naive_convolve(const Coeffs& a, const Coeffs& b);

enum class PositivityOutcome { positive, negative_up_to_bound, zero };

struct PositivityResult {
  PositivityOutcome outcome = PositivityOutcome::negative_up_to_bound;
  std::uint64_t l = 0;  // meaningful for positive

  friend bool operator==(const PositivityResult&, const PositivityResult&) = default;
};

/// Checks num * p_V^l for l = 0..max_l; zero if num * p_V^l = 0 for some
/// l <= order.
PositivityResult bf_positivity(const Coeffs& num, const Coeffs& pv, const OracleConfig& cfg);

struct UnitWitness {
  Coeffs r;
  std::uint64_t l = 0;

  friend bool operator==(const UnitWitness&, const UnitWitness&) = default;
};

/// First (l, r) with num * r = p_V^l, l ascending, then r lexicographic with
/// each coefficient ascending from -max_height.
std::optional<UnitWitness> bf_unit_search(const Coeffs& num, const Coeffs& pv,
                                          const OracleConfig& cfg);

/// Least N in [1, cap] with every coefficient of p_V^N >= 2.
std::optional<std::uint64_t> bf_min_doubling(const Coeffs& pv, std::uint64_t cap);

}  // namespace ktinv::oracle
