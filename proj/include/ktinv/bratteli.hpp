#pragma once

// The fixed-point algebra D^G as the direct limit of (End V^{(x)n})^G. Level n
// splits into matrix blocks M_{b_j} with b_j the coefficients of p_V^n; the
// connecting maps are multiplication by p_V, i.e. a circulant incidence.

#include <cstdint>
#include <utility>
#include <vector>

#include "ktinv/descriptor.hpp"
#include "ktinv/intlinalg.hpp"
#include "ktinv/ring.hpp"

namespace ktinv {

inline constexpr std::uint64_t kDefaultMaxDepth = 64;

struct BratteliLevel {
  std::uint64_t level = 0;
  std::vector<BigInt> block_sizes;

  friend bool operator==(const BratteliLevel&, const BratteliLevel&) = default;
};

struct BratteliDiagram {
  CharacterPolynomial pv;
  std::vector<BratteliLevel> levels;
  /// Entry (i, j) = a_{(i - j) mod n}: block j at level k feeds block i at
  /// level k + 1 with this multiplicity.
  linalg::Matrix incidence;

  friend bool operator==(const BratteliDiagram&, const BratteliDiagram&) = default;
};

std::vector<BigInt> block_sizes(const CharacterPolynomial& pv, std::uint64_t n);

BratteliDiagram build_diagram(const CharacterPolynomial& pv, std::uint64_t depth,
                              std::uint64_t max_depth = kDefaultMaxDepth);

/// Least level k whose blocks all satisfy b_j > n / 2, so pi_n of every
/// U(b_j) is already stable.
std::uint64_t stable_level(const CharacterPolynomial& pv, std::uint64_t n,
                           std::uint64_t cap = kDefaultIterationCap);

/// pi_n(U(D^G)): 0 for even n, R[p_V^{-1}] for odd n.
HomotopyGroupDescriptor homotopy_U(const CharacterPolynomial& pv, std::uint64_t n);

/// (K_0, K_1) of D^G.
std::pair<HomotopyGroupDescriptor, HomotopyGroupDescriptor> k_theory_fixed(
    const CharacterPolynomial& pv);

/// Throws a precondition error naming `what` unless pv is primitive.
void require_primitive(const CharacterPolynomial& pv, const char* what);

}  // namespace ktinv
