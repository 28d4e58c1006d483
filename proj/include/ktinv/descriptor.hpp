#pragma once

// Symbolic names for the homotopy and K-groups the toolkit reports. A
// descriptor is compared structurally; rendering to text is separate.

#include <optional>
#include <string>

#include "ktinv/ring.hpp"

namespace ktinv {

enum class DescriptorKind {
  zero,                 // the trivial group
  localized_ring,       // R[p_V^{-1}]
  positive_unit_group,  // GL_1(R[p_V^{-1}])_+
  integers_localized    // Z[1/m]
};

const char* to_string(DescriptorKind k) noexcept;
std::optional<DescriptorKind> descriptor_kind_from_string(const std::string& s);

struct HomotopyGroupDescriptor {
  DescriptorKind kind = DescriptorKind::zero;
  /// Set for localized_ring and positive_unit_group.
  std::optional<CharacterPolynomial> pv;
  /// Set for integers_localized.
  std::optional<BigInt> inverted;

  static HomotopyGroupDescriptor zero() { return {}; }
  static HomotopyGroupDescriptor localized_ring(const CharacterPolynomial& pv) {
    return {DescriptorKind::localized_ring, pv, std::nullopt};
  }
  static HomotopyGroupDescriptor positive_units(const CharacterPolynomial& pv) {
    return {DescriptorKind::positive_unit_group, pv, std::nullopt};
  }
  static HomotopyGroupDescriptor integers_localized(const BigInt& m) {
    return {DescriptorKind::integers_localized, std::nullopt, m};
  }

  friend bool operator==(const HomotopyGroupDescriptor&,
                         const HomotopyGroupDescriptor&) = default;
};

/// "Z[t]/(t^3-1)"
std::string base_ring_string(std::uint32_t order);
/// "Z[t]/(t^3-1) localized at 1+t"
std::string localized_ring_string(const CharacterPolynomial& pv);
/// "Z", "Z[1/2]", ...
std::string integers_localized_string(const BigInt& m);
/// Display form of any descriptor, e.g. "0" or "GL_1(Z[t]/(t^2-1) localized at 1+t)_+".
std::string render(const HomotopyGroupDescriptor& d);

}  // namespace ktinv
