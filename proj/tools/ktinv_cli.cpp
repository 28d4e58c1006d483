// ktinv command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 answered, 1 malformed input, 2 hypothesis or bound failure.
// Results go to stdout (or --output) as JSON/DOT/text; errors go to stderr
// as a JSON document.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ktinv/ktinv.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitFailure = 2;

int report_error(const std::string& kind, const std::string& message, int code) {
  std::cerr << json{{"schema", "ktinv/1"}, {"error", kind}, {"message", message}}.dump()
            << '\n';
  return code;
}

int exit_code(ktinv_status s) {
  switch (s) {
    case KTINV_OK: return kExitOk;
    case KTINV_ERR_MALFORMED:
    case KTINV_ERR_NULL: return kExitMalformed;
    default: return kExitFailure;
  }
}

int report_status(ktinv_status s) {
  std::string doc = ktinv_last_error();
  if (doc.empty())
    doc = json{{"schema", "ktinv/1"}, {"error", ktinv_status_name(s)}, {"message", ""}}.dump();
  std::cerr << doc << '\n';
  return exit_code(s);
}

struct ContextDeleter {
  void operator()(ktinv_context* c) const { ktinv_context_destroy(c); }
};
using ContextPtr = std::unique_ptr<ktinv_context, ContextDeleter>;

struct StringDeleter {
  void operator()(char* s) const { ktinv_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Strict decimal parse of a nonnegative count; nullopt on anything else.
std::optional<std::uint64_t> parse_count(const std::string& s) {
  if (s.empty() || s.size() > 19) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

std::optional<std::int64_t> parse_signed(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const bool neg = s[0] == '-';
  auto mag = parse_count(neg || s[0] == '+' ? s.substr(1) : s);
  if (!mag || *mag > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
  return neg ? -static_cast<std::int64_t>(*mag) : static_cast<std::int64_t>(*mag);
}

struct Bound {
  const char* flag;
  const char* env;
  ktinv_bound which;
  std::string value;
};

struct Config {
  std::string order;
  std::string mult;
  std::string elem;
  std::string kpow = "0";
  std::string max_n = "6";
  std::string depth = "4";
  std::string format = "json";
  std::string output;
  std::string target;
  std::string degree;
  std::string subgroup = "full";
  bool positive = false;
  bool oracle = false;
  std::vector<Bound> bounds = {
      {"--max-pow", "KTINV_MAX_POW", KTINV_BOUND_MAX_POW, {}},
      {"--unit-bound", "KTINV_UNIT_BOUND", KTINV_BOUND_UNIT, {}},
      {"--max-depth", "KTINV_MAX_DEPTH", KTINV_BOUND_MAX_DEPTH, {}},
      {"--certificates", "KTINV_CERTIFICATES", KTINV_BOUND_CERTIFICATES, {}},
      {"--oracle-max-l", "KTINV_ORACLE_MAX_L", KTINV_BOUND_ORACLE_MAX_L, {}},
      {"--oracle-max-height", "KTINV_ORACLE_MAX_HEIGHT", KTINV_BOUND_ORACLE_HEIGHT, {}},
      {"--oracle-max-unit-l", "KTINV_ORACLE_MAX_UNIT_L", KTINV_BOUND_ORACLE_UNIT_L, {}},
  };
};

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--order", cfg.order, "Cyclic group order n >= 2")->required();
  sub->add_option("--mult", cfg.mult, "Multiplicities a_0,...,a_{n-1} of V")->required();
  sub->add_option("--output,-o", cfg.output, "Write the result to this file");
  for (auto& b : cfg.bounds) sub->add_option(b.flag, b.value)->envname(b.env);
  sub->add_flag("--oracle", cfg.oracle)->group("");  // hidden: differential testing
}

void add_element(CLI::App* sub, Config& cfg) {
  sub->add_option("--elem", cfg.elem, "Numerator coefficients c0,...,c_{n-1}")->required();
  sub->add_option("--kpow", cfg.kpow, "Denominator exponent k in q / p_V^k");
}

// Flattens a JSON document into "key: value" lines.
std::string as_text(const json& doc) {
  std::string out;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() == "schema") continue;
    out += it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
  }
  return out;
}

int write_result(const Config& cfg, const std::string& payload, bool is_json) {
  std::string text = payload;
  if (cfg.format == "text" && is_json) text = as_text(json::parse(payload));
  if (!text.empty() && text.back() != '\n') text += '\n';
  if (cfg.output.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f || !(f << text))
    return report_error("malformed_input", "cannot write output file '" + cfg.output + "'",
                        kExitMalformed);
  return kExitOk;
}

int run(const std::string& command, Config& cfg) {
  if (cfg.format != "json" && cfg.format != "text" && cfg.format != "dot")
    return report_error("malformed_input", "unknown format '" + cfg.format + "'", kExitMalformed);
  if (cfg.format == "dot" && command != "bratteli")
    return report_error("malformed_input", "dot output is only available for bratteli",
                        kExitMalformed);

  const auto order = parse_count(cfg.order);
  if (!order || *order > UINT32_MAX)
    return report_error("malformed_input", "invalid --order '" + cfg.order + "'", kExitMalformed);

  ktinv_context* raw = nullptr;
  if (auto s = ktinv_context_create(static_cast<std::uint32_t>(*order), cfg.mult.c_str(), &raw);
      s != KTINV_OK)
    return report_status(s);
  ContextPtr ctx(raw);

  for (const auto& b : cfg.bounds) {
    if (b.value.empty()) continue;
    const auto v = parse_count(b.value);
    if (!v)
      return report_error("malformed_input",
                          std::string("invalid value '") + b.value + "' for " + b.flag,
                          kExitMalformed);
    if (auto s = ktinv_context_set_bound(ctx.get(), b.which, *v); s != KTINV_OK)
      return report_status(s);
  }

  char* out = nullptr;
  ktinv_status s = KTINV_OK;
  bool is_json = true;
  const int oracle = cfg.oracle ? 1 : 0;

  auto count_arg = [](const std::string& text, const char* flag) {
    auto v = parse_count(text);
    if (!v) report_error("malformed_input", std::string("invalid ") + flag + " '" + text + "'",
                         kExitMalformed);
    return v;
  };

  if (command == "analyze") {
    const auto max_n = count_arg(cfg.max_n, "--max-n");
    const auto depth = count_arg(cfg.depth, "--depth");
    if (!max_n || !depth) return kExitMalformed;
    s = ktinv_analyze(ctx.get(), *max_n, *depth, &out);
  } else if (command == "positivity" || command == "unit") {
    const auto kpow = count_arg(cfg.kpow, "--kpow");
    if (!kpow) return kExitMalformed;
    s = command == "positivity"
            ? ktinv_positivity(ctx.get(), cfg.elem.c_str(), *kpow, oracle, &out)
            : ktinv_unit(ctx.get(), cfg.elem.c_str(), *kpow, cfg.positive ? 1 : 0, oracle, &out);
  } else if (command == "bratteli") {
    const auto depth = count_arg(cfg.depth, "--depth");
    if (!depth) return kExitMalformed;
    is_json = cfg.format != "dot";
    s = ktinv_bratteli(ctx.get(), *depth, is_json ? KTINV_FORMAT_JSON : KTINV_FORMAT_DOT, &out);
  } else if (command == "doubling") {
    s = ktinv_doubling(ctx.get(), oracle, &out);
  } else if (command == "homotopy") {
    ktinv_target target;
    if (cfg.target == "aut")
      target = KTINV_TARGET_AUT;
    else if (cfg.target == "unitary")
      target = KTINV_TARGET_UNITARY;
    else if (cfg.target == "ku")
      target = KTINV_TARGET_KU;
    else
      return report_error("malformed_input", "unknown --target '" + cfg.target + "'",
                          kExitMalformed);
    ktinv_subgroup h;
    if (cfg.subgroup == "full")
      h = KTINV_SUBGROUP_FULL;
    else if (cfg.subgroup == "trivial")
      h = KTINV_SUBGROUP_TRIVIAL;
    else
      return report_error("malformed_input", "unknown --subgroup '" + cfg.subgroup + "'",
                          kExitMalformed);
    const auto n = parse_signed(cfg.degree);
    if (!n) return report_error("malformed_input", "invalid --n '" + cfg.degree + "'", kExitMalformed);
    s = ktinv_homotopy(ctx.get(), target, *n, h, &out);
  }

  if (s != KTINV_OK) return report_status(s);
  OwnedString owned(out);
  return write_result(cfg, owned.get(), is_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact equivariant K-theory invariants of cyclic actions on UHF algebras"};
  app.set_version_flag("--version", ktinv_version());
  app.require_subcommand(1);
  Config cfg;

  auto* analyze = app.add_subcommand("analyze", "Full invariant report");
  add_common(analyze, cfg);
  analyze->add_option("--max-n", cfg.max_n, "Highest homotopy degree in the tables");
  analyze->add_option("--depth", cfg.depth, "Bratteli preview depth");
  analyze->add_option("--format", cfg.format, "json | text");

  auto* positivity = app.add_subcommand("positivity", "Is q / p_V^k in the positive cone?");
  add_common(positivity, cfg);
  add_element(positivity, cfg);
  positivity->add_option("--format", cfg.format, "json | text");

  auto* unit = app.add_subcommand("unit", "Is q / p_V^k a (positive) unit?");
  add_common(unit, cfg);
  add_element(unit, cfg);
  unit->add_flag("--positive", cfg.positive, "Decide membership in the positive unit group");
  unit->add_option("--format", cfg.format, "json | text");

  auto* bratteli = app.add_subcommand("bratteli", "Bratteli diagram of the fixed-point algebra");
  add_common(bratteli, cfg);
  bratteli->add_option("--depth", cfg.depth, "Number of levels after level 0");
  bratteli->add_option("--format", cfg.format, "json | dot | text");

  auto* doubling = app.add_subcommand("doubling", "Least N with all coefficients of p_V^N >= 2");
  add_common(doubling, cfg);
  doubling->add_option("--format", cfg.format, "json | text");

  auto* homotopy = app.add_subcommand("homotopy", "Homotopy / coefficient group descriptors");
  add_common(homotopy, cfg);
  homotopy->add_option("--target", cfg.target, "aut | unitary | ku")->required();
  homotopy->add_option("--n", cfg.degree, "Degree")->required();
  homotopy->add_option("--subgroup", cfg.subgroup, "trivial | full (ku only)");
  homotopy->add_option("--format", cfg.format, "json | text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("malformed_input", e.what(), kExitMalformed);
  }

  try {
    for (auto* sub : app.get_subcommands()) return run(sub->get_name(), cfg);
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), kExitFailure);
  }
  return report_error("malformed_input", "no command given", kExitMalformed);
}
