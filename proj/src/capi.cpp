#include "ktinv/ktinv.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ktinv/error.hpp"
#include "ktinv/oracle.hpp"
#include "ktinv/report.hpp"
#include "ktinv/serialize.hpp"

struct ktinv_context {
  ktinv::CharacterPolynomial pv;
  ktinv::DecisionLimits limits;
  std::uint64_t max_depth = ktinv::kDefaultMaxDepth;
  std::uint64_t certificates = 8;
  ktinv::oracle::OracleConfig oracle;
};

namespace {

using ktinv::io::json;

thread_local std::string last_error;

ktinv_status status_of(ktinv::ErrorKind kind) {
  switch (kind) {
    case ktinv::ErrorKind::malformed_input:
    case ktinv::ErrorKind::structural: return KTINV_ERR_MALFORMED;
    case ktinv::ErrorKind::precondition: return KTINV_ERR_HYPOTHESIS;
    case ktinv::ErrorKind::bound_exceeded:
    case ktinv::ErrorKind::config: return KTINV_ERR_BOUND;
    case ktinv::ErrorKind::internal: return KTINV_ERR_INTERNAL;
  }
  return KTINV_ERR_INTERNAL;
}

const char* error_name(ktinv_status s) {
  switch (s) {
    case KTINV_ERR_MALFORMED: return "malformed_input";
    case KTINV_ERR_HYPOTHESIS: return "hypothesis_failure";
    case KTINV_ERR_BOUND: return "bound_exceeded";
    case KTINV_ERR_INTERNAL: return "internal";
    case KTINV_ERR_NULL: return "null_argument";
    case KTINV_OK: return "ok";
  }
  return "internal";
}

ktinv_status set_error(ktinv_status s, const std::string& message) {
  last_error = ktinv::io::error_document(error_name(s), message).dump();
  return s;
}

char* dup_string(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

// Runs body, translating exceptions into status codes.
template <class F>
ktinv_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const ktinv::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(KTINV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(KTINV_ERR_INTERNAL, e.what());
  }
}

ktinv_status emit(const json& body, char** out) {
  *out = dup_string(ktinv::io::document(body).dump());
  return KTINV_OK;
}

ktinv::LocalizedElement parse_element(const ktinv_context* ctx, const char* elem,
                                      std::uint64_t kpow) {
  auto coeffs = ktinv::io::parse_integer_list(elem);
  return ktinv::LocalizedElement(ctx->pv, ktinv::RingElement(ctx->pv.group(), std::move(coeffs)),
                                 kpow);
}

std::vector<ktinv::BigInt> as_vector(const ktinv::RingElement& x) {
  return {x.coeffs().begin(), x.coeffs().end()};
}

json oracle_positivity(const ktinv_context* ctx, const ktinv::LocalizedElement& x) {
  using ktinv::oracle::PositivityOutcome;
  const auto r = ktinv::oracle::bf_positivity(as_vector(x.num()), as_vector(ctx->pv.elem()),
                                              ctx->oracle);
  json j = {{"positive", r.outcome != PositivityOutcome::negative_up_to_bound},
            {"is_zero", r.outcome == PositivityOutcome::zero},
            {"source", "oracle"}};
  if (r.outcome == PositivityOutcome::positive) j["witness_l"] = r.l;
  if (r.outcome == PositivityOutcome::negative_up_to_bound) j["bounded"] = true;
  return j;
}

json oracle_unit(const ktinv_context* ctx, const ktinv::LocalizedElement& x, bool positive) {
  const auto w = ktinv::oracle::bf_unit_search(as_vector(x.num()), as_vector(ctx->pv.elem()),
                                               ctx->oracle);
  json unit = {{"source", "oracle"}};
  if (!w) {
    unit["status"] = "unknown";
    unit["reason"] = "no witness within the oracle bounds";
  } else {
    unit["status"] = "unit";
    json r = json::array();
    for (const auto& c : w->r) r.push_back(c.get_str());
    unit["inverse"] = {{"r", std::move(r)}, {"l", w->l}};
  }
  if (!positive) return unit;

  json j = {{"source", "oracle"}, {"unit", unit}};
  const auto elem = oracle_positivity(ctx, x);
  j["element_positivity"] = elem;
  if (!w) {
    j["status"] = "unknown";
    j["positive_unit"] = false;
    return j;
  }
  const auto inv = ktinv::inverse_from_witness(
      x, {ktinv::RingElement(ctx->pv.group(), w->r), w->l});
  const auto inv_pos = oracle_positivity(ctx, inv);
  j["inverse_positivity"] = inv_pos;
  const bool both = elem["positive"].get<bool>() && inv_pos["positive"].get<bool>();
  j["status"] = both ? "positive_unit" : "unit";
  j["positive_unit"] = both;
  return j;
}

bool read_bound(const ktinv_context* ctx, ktinv_bound which, std::uint64_t* v) {
  switch (which) {
    case KTINV_BOUND_MAX_POW: *v = ctx->limits.iteration_cap; return true;
    case KTINV_BOUND_UNIT: *v = ctx->limits.unit_bound; return true;
    case KTINV_BOUND_MAX_DEPTH: *v = ctx->max_depth; return true;
    case KTINV_BOUND_CERTIFICATES: *v = ctx->certificates; return true;
    case KTINV_BOUND_ORACLE_MAX_L: *v = ctx->oracle.max_l; return true;
    case KTINV_BOUND_ORACLE_HEIGHT: *v = ctx->oracle.max_height; return true;
    case KTINV_BOUND_ORACLE_UNIT_L: *v = ctx->oracle.max_unit_l; return true;
  }
  return false;
}

}  // namespace

extern "C" {

const char* ktinv_version(void) { return "1.0.0"; }

const char* ktinv_status_name(ktinv_status status) { return error_name(status); }

const char* ktinv_last_error(void) { return last_error.c_str(); }

ktinv_status ktinv_context_create(uint32_t order, const char* multiplicities,
                                  ktinv_context** out) {
  if (out == nullptr || multiplicities == nullptr)
    return set_error(KTINV_ERR_NULL, "context_create: NULL argument");
  *out = nullptr;
  return guarded([&] {
    auto mult = ktinv::io::parse_integer_list(multiplicities);
    auto pv = ktinv::CharacterPolynomial::from_multiplicities(ktinv::GroupSpec(order),
                                                              std::move(mult));
    *out = new ktinv_context{std::move(pv), ktinv::DecisionLimits{},
                              ktinv::kDefaultMaxDepth, 8, ktinv::oracle::OracleConfig{}};
    return KTINV_OK;
  });
}

void ktinv_context_destroy(ktinv_context* ctx) { delete ctx; }

ktinv_status ktinv_context_set_bound(ktinv_context* ctx, ktinv_bound which, uint64_t value) {
  if (ctx == nullptr) return set_error(KTINV_ERR_NULL, "set_bound: NULL context");
  last_error.clear();
  if (value == 0) return set_error(KTINV_ERR_MALFORMED, "bound must be positive");
  switch (which) {
    case KTINV_BOUND_MAX_POW: ctx->limits.iteration_cap = value; break;
    case KTINV_BOUND_UNIT:
      if (value > 100000) return set_error(KTINV_ERR_MALFORMED, "unit bound too large");
      ctx->limits.unit_bound = static_cast<std::uint32_t>(value);
      break;
    case KTINV_BOUND_MAX_DEPTH: ctx->max_depth = value; break;
    case KTINV_BOUND_CERTIFICATES: ctx->certificates = value; break;
    case KTINV_BOUND_ORACLE_MAX_L: ctx->oracle.max_l = value; break;
    case KTINV_BOUND_ORACLE_HEIGHT: ctx->oracle.max_height = value; break;
    case KTINV_BOUND_ORACLE_UNIT_L: ctx->oracle.max_unit_l = value; break;
    default: return set_error(KTINV_ERR_MALFORMED, "unknown bound");
  }
  return KTINV_OK;
}

ktinv_status ktinv_context_get_bound(const ktinv_context* ctx, ktinv_bound which,
                                     uint64_t* value) {
  if (ctx == nullptr || value == nullptr)
    return set_error(KTINV_ERR_NULL, "get_bound: NULL argument");
  last_error.clear();
  if (!read_bound(ctx, which, value)) return set_error(KTINV_ERR_MALFORMED, "unknown bound");
  return KTINV_OK;
}

ktinv_status ktinv_is_primitive(const ktinv_context* ctx, int* out) {
  if (ctx == nullptr || out == nullptr)
    return set_error(KTINV_ERR_NULL, "is_primitive: NULL argument");
  return guarded([&] {
    *out = ktinv::is_primitive(ctx->pv) ? 1 : 0;
    return KTINV_OK;
  });
}

ktinv_status ktinv_analyze(const ktinv_context* ctx, uint64_t max_n, uint64_t depth,
                           char** json_out) {
  if (ctx == nullptr || json_out == nullptr)
    return set_error(KTINV_ERR_NULL, "analyze: NULL argument");
  *json_out = nullptr;
  return guarded([&] {
    ktinv::ReportOptions opt;
    opt.max_n = max_n;
    opt.depth = depth;
    opt.max_depth = ctx->max_depth;
    opt.certificate_count = ctx->certificates;
    opt.limits = ctx->limits;
    const auto mult = as_vector(ctx->pv.elem());
    const auto report = ktinv::generate_report(ctx->pv.group(), mult, opt);
    return emit(ktinv::io::to_json(report), json_out);
  });
}

ktinv_status ktinv_positivity(const ktinv_context* ctx, const char* elem, uint64_t kpow,
                              int use_oracle, char** json_out) {
  if (ctx == nullptr || elem == nullptr || json_out == nullptr)
    return set_error(KTINV_ERR_NULL, "positivity: NULL argument");
  *json_out = nullptr;
  return guarded([&] {
    const auto x = parse_element(ctx, elem, kpow);
    if (use_oracle) return emit(oracle_positivity(ctx, x), json_out);
    return emit(ktinv::io::to_json(ktinv::is_positive(x, ctx->limits)), json_out);
  });
}

ktinv_status ktinv_unit(const ktinv_context* ctx, const char* elem, uint64_t kpow,
                        int positive, int use_oracle, char** json_out) {
  if (ctx == nullptr || elem == nullptr || json_out == nullptr)
    return set_error(KTINV_ERR_NULL, "unit: NULL argument");
  *json_out = nullptr;
  return guarded([&] {
    const auto x = parse_element(ctx, elem, kpow);
    if (use_oracle) return emit(oracle_unit(ctx, x, positive != 0), json_out);
    if (positive) return emit(ktinv::io::to_json(ktinv::is_positive_unit(x, ctx->limits)), json_out);
    return emit(ktinv::io::to_json(ktinv::is_unit(x, ctx->limits)), json_out);
  });
}

ktinv_status ktinv_bratteli(const ktinv_context* ctx, uint64_t depth, ktinv_format format,
                            char** out) {
  if (ctx == nullptr || out == nullptr)
    return set_error(KTINV_ERR_NULL, "bratteli: NULL argument");
  *out = nullptr;
  return guarded([&] {
    const auto d = ktinv::build_diagram(ctx->pv, depth, ctx->max_depth);
    if (format == KTINV_FORMAT_DOT) {
      *out = dup_string(ktinv::io::to_dot(d));
      return KTINV_OK;
    }
    if (format != KTINV_FORMAT_JSON) return set_error(KTINV_ERR_MALFORMED, "unknown format");
    return emit(ktinv::io::to_json(d), out);
  });
}

ktinv_status ktinv_doubling(const ktinv_context* ctx, int use_oracle, char** json_out) {
  if (ctx == nullptr || json_out == nullptr)
    return set_error(KTINV_ERR_NULL, "doubling: NULL argument");
  *json_out = nullptr;
  return guarded([&] {
    if (use_oracle) {
      ktinv::require_primitive(ctx->pv, "doubling");
      const auto n = ktinv::oracle::bf_min_doubling(as_vector(ctx->pv.elem()),
                                                    ctx->limits.iteration_cap);
      if (!n) ktinv::fail(ktinv::ErrorKind::bound_exceeded, "oracle doubling search hit its cap");
      return emit(json{{"n_min", *n}, {"source", "oracle"}}, json_out);
    }
    return emit(ktinv::io::to_json(ktinv::min_doubling_power(ctx->pv, ctx->limits.iteration_cap)),
                json_out);
  });
}

ktinv_status ktinv_homotopy(const ktinv_context* ctx, ktinv_target target, int64_t n,
                            ktinv_subgroup subgroup, char** json_out) {
  if (ctx == nullptr || json_out == nullptr)
    return set_error(KTINV_ERR_NULL, "homotopy: NULL argument");
  *json_out = nullptr;
  return guarded([&] {
    if (target != KTINV_TARGET_KU && n < 0)
      ktinv::fail(ktinv::ErrorKind::malformed_input, "homotopy degree must be >= 0");
    ktinv::HomotopyGroupDescriptor d;
    json extra = {{"n", n}};
    switch (target) {
      case KTINV_TARGET_AUT:
        d = ktinv::homotopy_aut(ctx->pv, static_cast<std::uint64_t>(n));
        extra["target"] = "aut";
        break;
      case KTINV_TARGET_UNITARY:
        d = ktinv::homotopy_U(ctx->pv, static_cast<std::uint64_t>(n));
        extra["target"] = "unitary";
        break;
      case KTINV_TARGET_KU: {
        if (subgroup != KTINV_SUBGROUP_TRIVIAL && subgroup != KTINV_SUBGROUP_FULL)
          ktinv::fail(ktinv::ErrorKind::malformed_input, "unknown subgroup");
        const auto h = subgroup == KTINV_SUBGROUP_TRIVIAL ? ktinv::Subgroup::trivial
                                                          : ktinv::Subgroup::full;
        d = ktinv::ku_coefficients(ctx->pv, h, n);
        extra["target"] = "ku";
        extra["subgroup"] = ktinv::to_string(h);
        break;
      }
      default: ktinv::fail(ktinv::ErrorKind::malformed_input, "unknown homotopy target");
    }
    json body = ktinv::io::to_json(d);
    for (auto it = extra.begin(); it != extra.end(); ++it) body[it.key()] = it.value();
    body["order_prime"] = ctx->pv.group().is_prime();
    return emit(body, json_out);
  });
}

void ktinv_string_free(char* s) { std::free(s); }

}  // extern "C"
