#include "ktinv/localization.hpp"

#include "ktinv/error.hpp"
#include "ktinv/intlinalg.hpp"

namespace ktinv {

LocalizedElement::LocalizedElement(CharacterPolynomial pv, RingElement num,
                                   std::uint64_t denom_pow)
    : pv_(std::move(pv)), num_(std::move(num)), denom_pow_(denom_pow) {
  if (num_.group() != pv_.group())
    fail(ErrorKind::structural, "numerator order " + std::to_string(num_.order()) +
                                    " does not match p_V order " +
                                    std::to_string(pv_.order()));
}

LocalizedElement LocalizedElement::one(const CharacterPolynomial& pv) {
  return LocalizedElement(pv, RingElement::one(pv.group()), 0);
}

LocalizedElement LocalizedElement::operator-() const {
  return LocalizedElement(pv_, -num_, denom_pow_);
}

namespace {

void require_same_pv(const LocalizedElement& x, const LocalizedElement& y) {
  if (!(x.pv() == y.pv()))
    fail(ErrorKind::structural, "elements localized at different p_V: " +
                                    to_string(x.pv().elem()) + " vs " +
                                    to_string(y.pv().elem()));
}

}  // namespace

LocalizedElement mul(const LocalizedElement& x, const LocalizedElement& y) {
  require_same_pv(x, y);
  return LocalizedElement(x.pv(), mul(x.num(), y.num()), x.denom_pow() + y.denom_pow());
}

LocalizedElement add(const LocalizedElement& x, const LocalizedElement& y) {
  require_same_pv(x, y);
  const auto k = std::max(x.denom_pow(), y.denom_pow());
  const auto& p = x.pv().elem();
  RingElement num = mul(x.num(), pow(p, k - x.denom_pow())) +
                    mul(y.num(), pow(p, k - y.denom_pow()));
  return LocalizedElement(x.pv(), std::move(num), k);
}

bool is_zero(const LocalizedElement& x) {
  return mul(x.num(), x.pv().elem()).is_zero();
}

bool equals(const LocalizedElement& x, const LocalizedElement& y) {
  require_same_pv(x, y);
  const auto& p = x.pv().elem();
  RingElement diff = mul(x.num(), pow(p, y.denom_pow())) -
                     mul(y.num(), pow(p, x.denom_pow()));
  return is_zero(LocalizedElement(x.pv(), std::move(diff), 0));
}

namespace {

std::uint64_t positivity_witness(const LocalizedElement& x, std::uint64_t cap) {
  RingElement acc = x.num();
  for (std::uint64_t l = 0; l <= cap; ++l) {
    if (acc.is_nonnegative()) return l;
    acc = mul(acc, x.pv().elem());
  }
  fail(ErrorKind::bound_exceeded,
       "positivity witness search exceeded cap " + std::to_string(cap) +
           " for an element decided positive");
}

// The part of q supported on exponents congruent to `coset` mod `stride`.
RingElement coset_component(const RingElement& q, std::uint32_t stride, std::uint32_t coset) {
  std::vector<BigInt> c(q.order());
  for (std::uint32_t i = coset; i < q.order(); i += stride) c[i] = q[i];
  return RingElement(q.group(), std::move(c));
}

}  // namespace

PositivityVerdict is_positive(const LocalizedElement& x, const DecisionLimits& limits) {
  PositivityVerdict v;
  if (is_zero(x)) {
    v.positive = true;
    v.is_zero = true;
    return v;
  }
  const auto& pv = x.pv();
  const auto& q = x.num();
  const std::uint32_t n = pv.order();

  if (pv.support().size() == 1) {
    // p_V = a t^m: multiplying only rescales and rotates, with period n.
    RingElement acc = q;
    for (std::uint64_t l = 0; l < n; ++l) {
      if (acc.is_nonnegative()) {
        v.positive = true;
        v.witness_l = l;
        return v;
      }
      acc = mul(acc, pv.elem());
    }
    return v;
  }

  const std::uint32_t stride = n / difference_subgroup_order(pv);
  if (stride == 1) {
    // Primitive circulant: C^l q / p_V(1)^l tends to (q(1)/n)(1,...,1).
    v.positive = sgn(augmentation(q)) > 0;
  } else {
    // p_V = t^s h with h a primitive circulant on each coset of the
    // difference subgroup; cosets evolve independently.
    v.positive = true;
    for (std::uint32_t c = 0; c < stride && v.positive; ++c) {
      const RingElement part = coset_component(q, stride, c);
      if (mul(part, pv.elem()).is_zero()) continue;
      if (sgn(augmentation(part)) <= 0) v.positive = false;
    }
  }
  if (v.positive) v.witness_l = positivity_witness(x, limits.iteration_cap);
  return v;
}

const char* to_string(UnitStatus s) noexcept {
  switch (s) {
    case UnitStatus::unit: return "unit";
    case UnitStatus::non_unit: return "non_unit";
    case UnitStatus::unknown: return "unknown";
  }
  return "unknown";
}

const char* to_string(ObstructionKind k) noexcept {
  switch (k) {
    case ObstructionKind::zero: return "zero";
    case ObstructionKind::augmentation: return "augmentation";
    case ObstructionKind::resultant: return "resultant";
  }
  return "zero";
}

const char* to_string(PositiveUnitStatus s) noexcept {
  switch (s) {
    case PositiveUnitStatus::positive_unit: return "positive_unit";
    case PositiveUnitStatus::unit_not_positive: return "unit";
    case PositiveUnitStatus::non_unit: return "non_unit";
    case PositiveUnitStatus::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<Obstruction> unit_obstruction(const LocalizedElement& x) {
  if (is_zero(x)) {
    Obstruction o;
    o.kind = ObstructionKind::zero;
    o.message = "element is zero in the localization, which is a nonzero ring";
    return o;
  }

  // Augmentation lands in Z[1/p_V(1)]; units there are +-(products of
  // primes dividing p_V(1)).
  {
    Obstruction o;
    o.kind = ObstructionKind::augmentation;
    o.cyclotomic_index = 1;
    o.element_norm = augmentation(x.num());
    o.pv_norm = x.pv().dimension();
    o.residue = linalg::strip_common_primes(o.element_norm, o.pv_norm);
    if (sgn(o.element_norm) == 0 || o.residue > 1) {
      o.message = sgn(o.element_norm) == 0
                      ? "augmentation of the numerator is 0"
                      : "augmentation " + o.element_norm.get_str() +
                            " has a prime factor of " + o.residue.get_str() +
                            " not dividing dim V = " + o.pv_norm.get_str();
      return o;
    }
  }

  // Component Z[zeta_d][1/p_V(zeta_d)] for every d | n not killed by p_V.
  const auto num_poly = linalg::to_poly(x.num());
  const auto pv_poly = linalg::to_poly(x.pv().elem());
  for (auto d : linalg::divisors(x.pv().order())) {
    if (d == 1) continue;
    const auto phi = linalg::cyclotomic(d);
    BigInt pv_res = abs(linalg::resultant(pv_poly, phi));
    if (sgn(pv_res) == 0) continue;
    BigInt el_res = abs(linalg::resultant(num_poly, phi));
    BigInt residue = linalg::strip_common_primes(el_res, pv_res);
    if (sgn(el_res) == 0 || residue > 1) {
      Obstruction o;
      o.kind = ObstructionKind::resultant;
      o.cyclotomic_index = d;
      o.element_norm = el_res;
      o.pv_norm = pv_res;
      o.residue = residue;
      o.message = "|Res(q, Phi_" + std::to_string(d) + ")| = " + el_res.get_str() +
                  " has a prime factor of " + residue.get_str() +
                  " not dividing |Res(p_V, Phi_" + std::to_string(d) +
                  ")| = " + pv_res.get_str();
      if (sgn(el_res) == 0)
        o.message = "q vanishes at a primitive " + std::to_string(d) +
                    "-th root of unity where p_V does not";
      return o;
    }
  }
  return std::nullopt;
}

UnitVerdict is_unit(const LocalizedElement& x, const DecisionLimits& limits) {
  UnitVerdict v;
  if (auto o = unit_obstruction(x)) {
    v.status = UnitStatus::non_unit;
    v.obstruction = std::move(o);
    return v;
  }
  const auto snf = linalg::smith_normal_form(linalg::circulant(x.num()));
  RingElement target = RingElement::one(x.pv().group());
  for (std::uint64_t l = 0; l <= limits.unit_bound; ++l) {
    std::vector<BigInt> b(target.coeffs().begin(), target.coeffs().end());
    if (auto r = linalg::solve_integer(snf, b)) {
      InverseWitness w{RingElement(x.pv().group(), std::move(*r)), l};
      if (!verify_witness(x, w))
        fail(ErrorKind::internal, "Smith-form solution failed re-verification");
      v.status = UnitStatus::unit;
      v.inverse_witness = std::move(w);
      return v;
    }
    target = mul(target, x.pv().elem());
  }
  v.status = UnitStatus::unknown;
  return v;
}

LocalizedElement inverse_from_witness(const LocalizedElement& x, const InverseWitness& w) {
  return LocalizedElement(x.pv(), mul(pow(x.pv().elem(), x.denom_pow()), w.r), w.l);
}

LocalizedElement inverse(const LocalizedElement& x, const DecisionLimits& limits) {
  auto v = is_unit(x, limits);
  if (v.status != UnitStatus::unit)
    fail(ErrorKind::precondition, std::string("element is not a certified unit (") +
                                      to_string(v.status) + ")");
  return inverse_from_witness(x, *v.inverse_witness);
}

PositiveUnitVerdict is_positive_unit(const LocalizedElement& x, const DecisionLimits& limits) {
  PositiveUnitVerdict v;
  v.unit = is_unit(x, limits);
  v.element = is_positive(x, limits);
  switch (v.unit.status) {
    case UnitStatus::non_unit: v.status = PositiveUnitStatus::non_unit; return v;
    case UnitStatus::unknown: v.status = PositiveUnitStatus::unknown; return v;
    case UnitStatus::unit: break;
  }
  v.inverse = is_positive(inverse_from_witness(x, *v.unit.inverse_witness), limits);
  const bool both = v.element.positive && v.inverse->positive;
  v.status = both ? PositiveUnitStatus::positive_unit : PositiveUnitStatus::unit_not_positive;

  if (is_primitive(x.pv())) {
    // aug(q) * aug(r) = p_V(1)^l > 0, so the sign of aug(q) decides both.
    const bool shortcut = sgn(augmentation(x.num())) > 0;
    if (shortcut != v.element.positive || shortcut != v.inverse->positive)
      fail(ErrorKind::internal,
           "positive-unit decision disagrees with the augmentation-sign rule");
  }
  return v;
}

bool verify_witness(const LocalizedElement& x, const InverseWitness& w) {
  return mul(x.num(), w.r) == pow(x.pv().elem(), w.l);
}

bool verify_positivity_witness(const LocalizedElement& x, std::uint64_t l) {
  return mul(x.num(), pow(x.pv().elem(), l)).is_nonnegative();
}

}  // namespace ktinv
