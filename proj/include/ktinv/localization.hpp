#pragma once

// The localized ring R[p_V^{-1}] with its positive cone, unit test and
// positive-unit test. Every positive answer carries a witness that can be
// re-checked by exact multiplication.

#include <cstdint>
#include <optional>
#include <string>

#include "ktinv/ring.hpp"

namespace ktinv {

struct DecisionLimits {
  /// Cap on multiplications by p_V while searching a positivity witness.
  std::uint64_t iteration_cap = kDefaultIterationCap;
  /// Unit witnesses q * r = p_V^l are searched for l = 0..unit_bound.
  std::uint32_t unit_bound = 12;
};

/// The fraction num / p_V^denom_pow. Representatives are not reduced.
class LocalizedElement {
 public:
  LocalizedElement(CharacterPolynomial pv, RingElement num, std::uint64_t denom_pow = 0);

  static LocalizedElement one(const CharacterPolynomial& pv);

  const CharacterPolynomial& pv() const noexcept { return pv_; }
  const RingElement& num() const noexcept { return num_; }
  std::uint64_t denom_pow() const noexcept { return denom_pow_; }

  LocalizedElement operator-() const;

 private:
  CharacterPolynomial pv_;
  RingElement num_;
  std::uint64_t denom_pow_;
};

LocalizedElement mul(const LocalizedElement& x, const LocalizedElement& y);
LocalizedElement add(const LocalizedElement& x, const LocalizedElement& y);

/// x == 0 in R[p_V^{-1}]: num * p_V == 0. Over Q the circulant of p_V is
/// diagonalizable, so ker C^l = ker C for l >= 1 and one factor suffices.
bool is_zero(const LocalizedElement& x);
bool equals(const LocalizedElement& x, const LocalizedElement& y);

struct PositivityVerdict {
  bool positive = false;
  bool is_zero = false;
  /// Least l with num * p_V^l coefficientwise nonnegative; absent for zero
  /// and for non-positive elements.
  std::optional<std::uint64_t> witness_l;

  friend bool operator==(const PositivityVerdict&, const PositivityVerdict&) = default;
};

PositivityVerdict is_positive(const LocalizedElement& x,
                              const DecisionLimits& limits = {});

enum class UnitStatus { unit, non_unit, unknown };
const char* to_string(UnitStatus s) noexcept;

enum class ObstructionKind { zero, augmentation, resultant };
const char* to_string(ObstructionKind k) noexcept;

/// Why an element cannot be a unit. For augmentation and resultant
/// obstructions `residue` is the part of |element_norm| coprime to
/// |pv_norm|; it is > 1 or the element norm is 0.
struct Obstruction {
  ObstructionKind kind = ObstructionKind::zero;
  std::uint32_t cyclotomic_index = 1;  // d for Res(-, Phi_d)
  BigInt element_norm;
  BigInt pv_norm;
  BigInt residue;
  std::string message;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

/// num * r == p_V^l.
struct InverseWitness {
  RingElement r;
  std::uint64_t l = 0;

  friend bool operator==(const InverseWitness&, const InverseWitness&) = default;
};

struct UnitVerdict {
  UnitStatus status = UnitStatus::unknown;
  std::optional<InverseWitness> inverse_witness;
  std::optional<Obstruction> obstruction;

  friend bool operator==(const UnitVerdict&, const UnitVerdict&) = default;
};

/// Sound three-valued unit test: cheap obstructions first, then a witness
/// search over l = 0..limits.unit_bound by Smith normal form.
UnitVerdict is_unit(const LocalizedElement& x, const DecisionLimits& limits = {});

/// Obstruction checks alone, exposed for testing.
std::optional<Obstruction> unit_obstruction(const LocalizedElement& x);

enum class PositiveUnitStatus { positive_unit, unit_not_positive, non_unit, unknown };
const char* to_string(PositiveUnitStatus s) noexcept;

struct PositiveUnitVerdict {
  PositiveUnitStatus status = PositiveUnitStatus::unknown;
  UnitVerdict unit;
  PositivityVerdict element;
  /// Present iff unit.status == unit.
  std::optional<PositivityVerdict> inverse;

  friend bool operator==(const PositiveUnitVerdict&, const PositiveUnitVerdict&) = default;
};

PositiveUnitVerdict is_positive_unit(const LocalizedElement& x,
                                     const DecisionLimits& limits = {});

/// The inverse (p_V^k * r) / p_V^l built from a unit witness of x.
LocalizedElement inverse_from_witness(const LocalizedElement& x, const InverseWitness& w);

/// Throws a precondition error unless x is a certified unit.
LocalizedElement inverse(const LocalizedElement& x, const DecisionLimits& limits = {});

/// Re-checks num * r == p_V^l exactly.
bool verify_witness(const LocalizedElement& x, const InverseWitness& w);
/// Re-checks that num * p_V^l has nonnegative coefficients.
bool verify_positivity_witness(const LocalizedElement& x, std::uint64_t l);

}  // namespace ktinv
