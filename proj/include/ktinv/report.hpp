#pragma once

// Aggregated invariants of the Z/nZ-action on D = End(V)^{(x)infinity}:
// homotopy groups of Aut(D (x) K), KU^D coefficients, fixed-point K-theory,
// which cyclotomic components survive localization, and certified positive
// units.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ktinv/bratteli.hpp"
#include "ktinv/descriptor.hpp"
#include "ktinv/localization.hpp"
#include "ktinv/ring.hpp"

namespace ktinv {

enum class Subgroup { trivial, full };
const char* to_string(Subgroup s) noexcept;

/// pi_n(Aut^G(D (x) K)): positive units at n = 0, R[p_V^{-1}] for even n > 0,
/// 0 for odd n. Requires primitive p_V.
HomotopyGroupDescriptor homotopy_aut(const CharacterPolynomial& pv, std::uint64_t n);

/// pi_n^H(KU^D) = K_n^H(D): Z[1/dim V] (trivial H) or R[p_V^{-1}] (full H)
/// in even degrees, 0 in odd degrees.
HomotopyGroupDescriptor ku_coefficients(const CharacterPolynomial& pv, Subgroup h,
                                        std::int64_t n);

struct CyclotomicComponent {
  std::uint32_t d = 1;
  std::uint32_t degree = 1;  // phi(d)
  BigInt resultant;          // |Res(p_V, Phi_d)|
  bool killed = false;       // resultant == 0

  friend bool operator==(const CyclotomicComponent&, const CyclotomicComponent&) = default;
};

struct CollapseData {
  std::vector<CyclotomicComponent> components;  // one per d | n, ascending
  std::uint32_t surviving_rank = 0;

  friend bool operator==(const CollapseData&, const CollapseData&) = default;
};

CollapseData collapse_analysis(const CharacterPolynomial& pv);

struct RingPresentation {
  std::string base_ring;     // Z[t]/(t^n-1)
  std::string localized_at;  // p_V rendered
  CollapseData collapse;
  /// Image under augmentation: Z[1/dim V].
  std::string augmentation_image;

  friend bool operator==(const RingPresentation&, const RingPresentation&) = default;
};

struct HomotopyEntry {
  std::uint64_t n = 0;
  HomotopyGroupDescriptor group;

  friend bool operator==(const HomotopyEntry&, const HomotopyEntry&) = default;
};

struct KuEntry {
  Subgroup subgroup = Subgroup::trivial;
  std::uint32_t parity = 0;
  HomotopyGroupDescriptor group;

  friend bool operator==(const KuEntry&, const KuEntry&) = default;
};

/// A positive unit num / p_V^denom_pow with its inverse witness and the
/// positivity witnesses of the element and of the inverse.
struct UnitCertificate {
  std::string origin;
  RingElement num;
  std::uint64_t denom_pow = 0;
  InverseWitness inverse;
  std::uint64_t positivity_l = 0;
  std::uint64_t inverse_positivity_l = 0;

  friend bool operator==(const UnitCertificate&, const UnitCertificate&) = default;
};

struct ReportOptions {
  std::uint64_t max_n = 6;
  std::uint64_t depth = 4;
  std::uint64_t max_depth = kDefaultMaxDepth;
  std::size_t certificate_count = 8;
  DecisionLimits limits;
};

struct InvariantReport {
  GroupSpec group;
  CharacterPolynomial pv;
  BigInt dim_v;
  bool primitive = false;
  std::optional<DoublingResult> doubling;
  RingPresentation ring;
  /// Empty when the primitivity hypothesis fails; see table_omitted_reason.
  std::vector<HomotopyEntry> homotopy_aut_table;
  std::optional<std::string> table_omitted_reason;
  std::vector<HomotopyEntry> homotopy_unitary_table;
  std::optional<std::pair<HomotopyGroupDescriptor, HomotopyGroupDescriptor>> k_theory_fixed;
  std::vector<KuEntry> ku_coefficients;
  BratteliDiagram bratteli_preview;
  std::vector<UnitCertificate> sample_certificates;
  std::vector<std::string> notes;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Positive units for the report: 1, t, p_V, 1/p_V, then r / p_V^l for
/// positive r with a positive cofactor s, r * s = p_V^l. Every entry is
/// re-verified before it is returned.
std::vector<UnitCertificate> sample_positive_units(const CharacterPolynomial& pv,
                                                   std::size_t count,
                                                   const DecisionLimits& limits = {});

/// Re-checks every witness in a certificate from raw inputs.
bool verify_certificate(const CharacterPolynomial& pv, const UnitCertificate& c);

InvariantReport generate_report(GroupSpec group, std::vector<BigInt> multiplicities,
                                const ReportOptions& options = {});

}  // namespace ktinv
