#include "ktinv/report.hpp"

#include "ktinv/error.hpp"
#include "ktinv/intlinalg.hpp"

namespace ktinv {

const char* to_string(Subgroup s) noexcept {
  return s == Subgroup::trivial ? "trivial" : "full";
}

HomotopyGroupDescriptor homotopy_aut(const CharacterPolynomial& pv, std::uint64_t n) {
  require_primitive(pv, "homotopy_aut");
  if (n == 0) return HomotopyGroupDescriptor::positive_units(pv);
  if (n % 2 == 1) return HomotopyGroupDescriptor::zero();
  return HomotopyGroupDescriptor::localized_ring(pv);
}

HomotopyGroupDescriptor ku_coefficients(const CharacterPolynomial& pv, Subgroup h,
                                        std::int64_t n) {
  if (n % 2 != 0) return HomotopyGroupDescriptor::zero();
  if (h == Subgroup::trivial) return HomotopyGroupDescriptor::integers_localized(pv.dimension());
  return HomotopyGroupDescriptor::localized_ring(pv);
}

CollapseData collapse_analysis(const CharacterPolynomial& pv) {
  CollapseData out;
  const auto f = linalg::to_poly(pv.elem());
  for (auto d : linalg::divisors(pv.order())) {
    const auto phi = linalg::cyclotomic(d);
    CyclotomicComponent c;
    c.d = d;
    c.degree = static_cast<std::uint32_t>(linalg::degree(phi));
    c.resultant = abs(linalg::resultant(f, phi));
    c.killed = sgn(c.resultant) == 0;
    if (!c.killed) out.surviving_rank += c.degree;
    out.components.push_back(std::move(c));
  }
  return out;
}

bool verify_certificate(const CharacterPolynomial& pv, const UnitCertificate& c) {
  if (c.num.group() != pv.group() || c.inverse.r.group() != pv.group()) return false;
  const LocalizedElement x(pv, c.num, c.denom_pow);
  return verify_witness(x, c.inverse) && verify_positivity_witness(x, c.positivity_l) &&
         verify_positivity_witness(inverse_from_witness(x, c.inverse),
                                   c.inverse_positivity_l);
}

namespace {

constexpr std::uint64_t kSplitSearchLevels = 2;
constexpr std::size_t kSplitSearchBudget = 20000;

std::optional<UnitCertificate> certify(const LocalizedElement& x, std::string origin,
                                       const DecisionLimits& limits) {
  const auto v = is_positive_unit(x, limits);
  if (v.status != PositiveUnitStatus::positive_unit) return std::nullopt;
  UnitCertificate c{std::move(origin), x.num(), x.denom_pow(), *v.unit.inverse_witness,
                    v.element.witness_l.value_or(0), v.inverse->witness_l.value_or(0)};
  if (!verify_certificate(x.pv(), c))
    fail(ErrorKind::internal, "positive-unit certificate failed re-verification");
  return c;
}

bool is_shift_of(const RingElement& a, const RingElement& b) {
  for (std::uint32_t m = 0; m < a.order(); ++m)
    if (a == b.shifted(m)) return true;
  return false;
}

// r = t^m p_V^j for some shift m and 0 <= j <= max_j.
bool is_trivial_split(const RingElement& r, const CharacterPolynomial& pv, std::uint64_t max_j) {
  RingElement p = RingElement::one(pv.group());
  for (std::uint64_t j = 0; j <= max_j; ++j) {
    if (is_shift_of(r, p)) return true;
    p = mul(p, pv.elem());
  }
  return false;
}

}  // namespace

std::vector<UnitCertificate> sample_positive_units(const CharacterPolynomial& pv,
                                                   std::size_t count,
                                                   const DecisionLimits& limits) {
  std::vector<UnitCertificate> out;
  const auto g = pv.group();
  auto push = [&](const LocalizedElement& x, std::string origin) {
    if (out.size() >= count) return;
    if (auto c = certify(x, std::move(origin), limits)) out.push_back(std::move(*c));
  };
  push(LocalizedElement::one(pv), "1");
  push(LocalizedElement(pv, RingElement::monomial(g, 1), 0), "t");
  push(LocalizedElement(pv, pv.elem(), 0), "p_V");
  push(LocalizedElement(pv, RingElement::one(g), 1), "1/p_V");

  // Splits r * s = p_V^l into positive factors. Some shift of r is bounded
  // coefficientwise by p_V^l, so enumerating 0 <= r <= p_V^l covers them up
  // to shifts.
  std::vector<RingElement> found;
  for (std::uint64_t l = 1; l <= kSplitSearchLevels && out.size() < count; ++l) {
    const RingElement target = pow(pv.elem(), l);
    const BigInt target_aug = augmentation(target);
    std::size_t space = 1;
    bool too_big = false;
    for (const auto& b : target.coeffs()) {
      if (!b.fits_ulong_p() || b.get_ui() + 1 > kSplitSearchBudget / space) {
        too_big = true;
        break;
      }
      space *= b.get_ui() + 1;
    }
    if (too_big) continue;

    std::vector<unsigned long> digits(g.order(), 0);
    for (std::size_t idx = 1; idx < space && out.size() < count; ++idx) {
      for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < target[i].get_ui()) {
          ++digits[i];
          break;
        }
        digits[i] = 0;
      }
      std::vector<BigInt> c(digits.begin(), digits.end());
      RingElement r(g, std::move(c));
      const BigInt r_aug = augmentation(r);
      if (!mpz_divisible_p(target_aug.get_mpz_t(), r_aug.get_mpz_t())) continue;
      if (is_trivial_split(r, pv, l)) continue;
      bool duplicate = false;
      for (const auto& f : found)
        if (is_shift_of(r, f)) duplicate = true;
      if (duplicate) continue;
      const LocalizedElement x(pv, r, l);
      const auto before = out.size();
      push(x, "split r*s = p_V^" + std::to_string(l) + " with r = " + to_string(r));
      if (out.size() > before) found.push_back(r);
    }
  }
  return out;
}

InvariantReport generate_report(GroupSpec group, std::vector<BigInt> multiplicities,
                                const ReportOptions& options) {
  auto pv = CharacterPolynomial::from_multiplicities(group, std::move(multiplicities));
  InvariantReport r{group,
                    pv,
                    pv.dimension(),
                    is_primitive(pv),
                    std::nullopt,
                    {},
                    {},
                    std::nullopt,
                    {},
                    std::nullopt,
                    {},
                    build_diagram(pv, options.depth, options.max_depth),
                    {},
                    {}};

  r.ring = {base_ring_string(group.order()), to_string(pv.elem()), collapse_analysis(pv),
            integers_localized_string(r.dim_v)};

  if (r.primitive) {
    r.doubling = min_doubling_power(pv, options.limits.iteration_cap);
    if (!pow(pv.elem(), r.doubling->n_min).all_at_least(2) ||
        !pow(pv.elem(), r.doubling->constructive_bound).all_at_least(2))
      fail(ErrorKind::internal, "doubling power failed re-verification");
    for (std::uint64_t n = 0; n <= options.max_n; ++n) {
      r.homotopy_aut_table.push_back({n, homotopy_aut(pv, n)});
      r.homotopy_unitary_table.push_back({n, homotopy_U(pv, n)});
    }
    r.k_theory_fixed = k_theory_fixed(pv);
  } else {
    r.table_omitted_reason =
        "p_V = " + to_string(pv.elem()) +
        " is not primitive (its support differences do not generate Z/" +
        std::to_string(group.order()) +
        "Z); the homotopy computation requires that hypothesis";
  }

  for (auto h : {Subgroup::trivial, Subgroup::full})
    for (std::uint32_t parity : {0U, 1U})
      r.ku_coefficients.push_back({h, parity, ku_coefficients(pv, h, parity)});

  for (std::size_t k = 0; k + 1 < r.bratteli_preview.levels.size(); ++k)
    if (r.bratteli_preview.incidence.apply(r.bratteli_preview.levels[k].block_sizes) !=
        r.bratteli_preview.levels[k + 1].block_sizes)
      fail(ErrorKind::internal, "Bratteli recurrence failed re-verification");

  r.sample_certificates = sample_positive_units(pv, options.certificate_count, options.limits);

  r.notes.push_back(
      "homotopy tables are the pi_* shadow of a spectrum-level statement; no spectrum data "
      "is represented");
  if (!group.is_prime())
    r.notes.push_back("order " + std::to_string(group.order()) +
                      " is not prime: results use primitivity as the suitability condition, "
                      "and only the trivial and full subgroups are reported");
  if (r.ring.collapse.surviving_rank < group.order())
    r.notes.push_back("localization kills cyclotomic components; surviving rank " +
                      std::to_string(r.ring.collapse.surviving_rank) + " of " +
                      std::to_string(group.order()));
  if (r.ring.collapse.surviving_rank == 1)
    r.notes.push_back("only the augmentation component survives: the localized ring collapses to " +
                      r.ring.augmentation_image);
  r.notes.push_back("sample certificates are not a generating set of the positive unit group");
  return r;
}

}  // namespace ktinv
