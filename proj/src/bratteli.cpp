#include "ktinv/bratteli.hpp"

#include "ktinv/error.hpp"

namespace ktinv {

const char* to_string(DescriptorKind k) noexcept {
  switch (k) {
    case DescriptorKind::zero: return "zero";
    case DescriptorKind::localized_ring: return "localized_ring";
    case DescriptorKind::positive_unit_group: return "positive_units";
    case DescriptorKind::integers_localized: return "integers_localized";
  }
  return "zero";
}

std::optional<DescriptorKind> descriptor_kind_from_string(const std::string& s) {
  for (auto k : {DescriptorKind::zero, DescriptorKind::localized_ring,
                 DescriptorKind::positive_unit_group, DescriptorKind::integers_localized})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

std::string base_ring_string(std::uint32_t order) {
  return "Z[t]/(t^" + std::to_string(order) + "-1)";
}

std::string localized_ring_string(const CharacterPolynomial& pv) {
  return base_ring_string(pv.order()) + " localized at " + to_string(pv.elem());
}

std::string integers_localized_string(const BigInt& m) {
  if (m == 1) return "Z";
  return "Z[1/" + m.get_str() + "]";
}

std::string render(const HomotopyGroupDescriptor& d) {
  switch (d.kind) {
    case DescriptorKind::zero: return "0";
    case DescriptorKind::localized_ring: return localized_ring_string(*d.pv);
    case DescriptorKind::positive_unit_group:
      return "GL_1(" + localized_ring_string(*d.pv) + ")_+";
    case DescriptorKind::integers_localized: return integers_localized_string(*d.inverted);
  }
  return "0";
}

void require_primitive(const CharacterPolynomial& pv, const char* what) {
  if (!is_primitive(pv))
    fail(ErrorKind::precondition,
         std::string(what) + " requires a primitive p_V (V must contain characters whose "
                             "differences generate the group); got " +
             to_string(pv.elem()));
}

std::vector<BigInt> block_sizes(const CharacterPolynomial& pv, std::uint64_t n) {
  const auto p = pow(pv.elem(), n);
  return {p.coeffs().begin(), p.coeffs().end()};
}

BratteliDiagram build_diagram(const CharacterPolynomial& pv, std::uint64_t depth,
                              std::uint64_t max_depth) {
  if (depth > max_depth)
    fail(ErrorKind::config, "depth " + std::to_string(depth) + " exceeds the cap " +
                                std::to_string(max_depth));
  BratteliDiagram d{pv, {}, linalg::circulant(pv.elem())};
  d.levels.reserve(depth + 1);
  RingElement current = RingElement::one(pv.group());
  for (std::uint64_t k = 0; k <= depth; ++k) {
    d.levels.push_back({k, {current.coeffs().begin(), current.coeffs().end()}});
    if (k < depth) current = mul(current, pv.elem());
  }
  return d;
}

std::uint64_t stable_level(const CharacterPolynomial& pv, std::uint64_t n, std::uint64_t cap) {
  require_primitive(pv, "stable_level");
  RingElement current = RingElement::one(pv.group());
  for (std::uint64_t k = 0; k <= cap; ++k) {
    bool stable = true;
    for (const auto& b : current.coeffs())
      if (!(2 * b > n)) {
        stable = false;
        break;
      }
    if (stable) return k;
    current = mul(current, pv.elem());
  }
  fail(ErrorKind::bound_exceeded,
       "stable level search exceeded cap " + std::to_string(cap));
}

HomotopyGroupDescriptor homotopy_U(const CharacterPolynomial& pv, std::uint64_t n) {
  require_primitive(pv, "homotopy_U");
  if (n % 2 == 0) return HomotopyGroupDescriptor::zero();
  return HomotopyGroupDescriptor::localized_ring(pv);
}

std::pair<HomotopyGroupDescriptor, HomotopyGroupDescriptor> k_theory_fixed(
    const CharacterPolynomial& pv) {
  require_primitive(pv, "k_theory_fixed");
  return {HomotopyGroupDescriptor::localized_ring(pv), HomotopyGroupDescriptor::zero()};
}

}  // namespace ktinv
