#include "ktinv/serialize.hpp"

#include <cctype>
#include <sstream>

#include "ktinv/error.hpp"

namespace ktinv::io {

namespace {

const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::malformed_input, std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

std::uint64_t count_at(const json& j, const char* key) {
  const auto& v = at(j, key);
  if (!v.is_number_unsigned())
    fail(ErrorKind::malformed_input, std::string("field '") + key + "' must be a count");
  return v.get<std::uint64_t>();
}

std::string string_at(const json& j, const char* key) {
  const auto& v = at(j, key);
  if (!v.is_string())
    fail(ErrorKind::malformed_input, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool bool_at(const json& j, const char* key) {
  const auto& v = at(j, key);
  if (!v.is_boolean())
    fail(ErrorKind::malformed_input, std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

json bigints_to_json(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json bigints_to_json(std::span<const BigInt> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::vector<BigInt> bigints_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::malformed_input, "expected an array of integers");
  std::vector<BigInt> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(bigint_from_json(x));
  return out;
}

CharacterPolynomial pv_from_json(const json& j) {
  auto c = bigints_from_json(j);
  const auto n = static_cast<std::uint32_t>(c.size());
  return CharacterPolynomial::from_multiplicities(GroupSpec(n), std::move(c));
}

json entry_to_json(const HomotopyEntry& e) {
  return {{"n", e.n}, {"group", to_json(e.group)}};
}

HomotopyEntry homotopy_entry_from_json(const json& j) {
  return {count_at(j, "n"), descriptor_from_json(at(j, "group"))};
}

json obstruction_to_json(const Obstruction& o) {
  return {{"kind", to_string(o.kind)},
          {"d", o.cyclotomic_index},
          {"element_norm", o.element_norm.get_str()},
          {"pv_norm", o.pv_norm.get_str()},
          {"residue", o.residue.get_str()},
          {"message", o.message}};
}

Obstruction obstruction_from_json(const json& j) {
  Obstruction o;
  const auto kind = string_at(j, "kind");
  if (kind == "zero")
    o.kind = ObstructionKind::zero;
  else if (kind == "augmentation")
    o.kind = ObstructionKind::augmentation;
  else if (kind == "resultant")
    o.kind = ObstructionKind::resultant;
  else
    fail(ErrorKind::malformed_input, "unknown obstruction kind '" + kind + "'");
  o.cyclotomic_index = static_cast<std::uint32_t>(count_at(j, "d"));
  o.element_norm = bigint_from_json(at(j, "element_norm"));
  o.pv_norm = bigint_from_json(at(j, "pv_norm"));
  o.residue = bigint_from_json(at(j, "residue"));
  o.message = string_at(j, "message");
  return o;
}

json witness_to_json(const InverseWitness& w) { return {{"r", to_json(w.r)}, {"l", w.l}}; }

InverseWitness witness_from_json(const json& j) {
  return {ring_element_from_json(at(j, "r")), count_at(j, "l")};
}

}  // namespace

std::vector<BigInt> parse_integer_list(std::string_view csv) {
  std::vector<BigInt> out;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = csv.find(',', pos);
    auto token = csv.substr(pos, comma == std::string_view::npos ? csv.npos : comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    std::size_t i = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
    if (i == token.size())
      fail(ErrorKind::malformed_input, "empty or sign-only integer in list '" +
                                           std::string(csv) + "'");
    for (std::size_t k = i; k < token.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(token[k])))
        fail(ErrorKind::malformed_input,
             "not an integer: '" + std::string(token) + "'");
    std::string digits(token[0] == '+' ? token.substr(1) : token);
    out.emplace_back(digits, 10);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::uint64_t parse_count(std::string_view text, const char* what) {
  if (text.empty() || text.size() > 19)
    fail(ErrorKind::malformed_input, std::string("invalid ") + what + ": '" +
                                         std::string(text) + "'");
  std::uint64_t v = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(ErrorKind::malformed_input, std::string("invalid ") + what + ": '" +
                                           std::string(text) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

json to_json(const BigInt& x) { return x.get_str(); }

BigInt bigint_from_json(const json& j) {
  if (!j.is_string()) fail(ErrorKind::malformed_input, "big integers must be decimal strings");
  auto v = parse_integer_list(j.get<std::string>());
  if (v.size() != 1) fail(ErrorKind::malformed_input, "expected a single integer");
  return v.front();
}

json to_json(const RingElement& x) { return bigints_to_json(x.coeffs()); }

RingElement ring_element_from_json(const json& j) {
  auto c = bigints_from_json(j);
  const auto n = static_cast<std::uint32_t>(c.size());
  return RingElement(GroupSpec(n), std::move(c));
}

json to_json(const PositivityVerdict& v) {
  json j = {{"positive", v.positive}, {"is_zero", v.is_zero}};
  if (v.witness_l) j["witness_l"] = *v.witness_l;
  return j;
}

PositivityVerdict positivity_from_json(const json& j) {
  PositivityVerdict v;
  v.positive = bool_at(j, "positive");
  v.is_zero = bool_at(j, "is_zero");
  if (j.contains("witness_l")) v.witness_l = count_at(j, "witness_l");
  return v;
}

json to_json(const UnitVerdict& v) {
  json j = {{"status", to_string(v.status)}};
  if (v.inverse_witness) j["inverse"] = witness_to_json(*v.inverse_witness);
  if (v.obstruction) {
    j["obstruction"] = to_string(v.obstruction->kind);
    j["obstruction_detail"] = obstruction_to_json(*v.obstruction);
  }
  return j;
}

UnitVerdict unit_from_json(const json& j) {
  UnitVerdict v;
  const auto s = string_at(j, "status");
  if (s == "unit")
    v.status = UnitStatus::unit;
  else if (s == "non_unit")
    v.status = UnitStatus::non_unit;
  else if (s == "unknown")
    v.status = UnitStatus::unknown;
  else
    fail(ErrorKind::malformed_input, "unknown unit status '" + s + "'");
  if (j.contains("inverse")) v.inverse_witness = witness_from_json(j.at("inverse"));
  if (j.contains("obstruction_detail"))
    v.obstruction = obstruction_from_json(j.at("obstruction_detail"));
  return v;
}

json to_json(const PositiveUnitVerdict& v) {
  json j = {{"status", to_string(v.status)},
            {"positive_unit", v.status == PositiveUnitStatus::positive_unit},
            {"unit", to_json(v.unit)},
            {"element_positivity", to_json(v.element)}};
  if (v.inverse) j["inverse_positivity"] = to_json(*v.inverse);
  return j;
}

PositiveUnitVerdict positive_unit_from_json(const json& j) {
  PositiveUnitVerdict v;
  const auto s = string_at(j, "status");
  bool known = false;
  for (auto k : {PositiveUnitStatus::positive_unit, PositiveUnitStatus::unit_not_positive,
                 PositiveUnitStatus::non_unit, PositiveUnitStatus::unknown})
    if (s == to_string(k)) {
      v.status = k;
      known = true;
    }
  if (!known) fail(ErrorKind::malformed_input, "unknown positive-unit status '" + s + "'");
  v.unit = unit_from_json(at(j, "unit"));
  v.element = positivity_from_json(at(j, "element_positivity"));
  if (j.contains("inverse_positivity"))
    v.inverse = positivity_from_json(j.at("inverse_positivity"));
  return v;
}

json to_json(const DoublingResult& d) {
  return {{"n_min", d.n_min}, {"constructive_bound", d.constructive_bound}};
}

DoublingResult doubling_from_json(const json& j) {
  return {count_at(j, "n_min"), count_at(j, "constructive_bound")};
}

json to_json(const HomotopyGroupDescriptor& d) {
  json j = {{"group", to_string(d.kind)}, {"display", render(d)}};
  if (d.pv) {
    j["ring"] = localized_ring_string(*d.pv);
    j["order"] = d.pv->order();
    j["pv"] = to_json(d.pv->elem());
  }
  if (d.inverted) {
    j["ring"] = integers_localized_string(*d.inverted);
    j["inverted"] = d.inverted->get_str();
  }
  return j;
}

HomotopyGroupDescriptor descriptor_from_json(const json& j) {
  const auto name = string_at(j, "group");
  const auto kind = descriptor_kind_from_string(name);
  if (!kind) fail(ErrorKind::malformed_input, "unknown descriptor group '" + name + "'");
  HomotopyGroupDescriptor d;
  d.kind = *kind;
  if (j.contains("pv")) d.pv = pv_from_json(j.at("pv"));
  if (j.contains("inverted")) d.inverted = bigint_from_json(j.at("inverted"));
  const bool needs_pv = d.kind == DescriptorKind::localized_ring ||
                        d.kind == DescriptorKind::positive_unit_group;
  if (needs_pv != d.pv.has_value() ||
      (d.kind == DescriptorKind::integers_localized) != d.inverted.has_value())
    fail(ErrorKind::malformed_input, "descriptor parameters do not match its kind");
  return d;
}

json to_json(const BratteliDiagram& d) {
  json levels = json::array();
  for (const auto& l : d.levels) levels.push_back(bigints_to_json(l.block_sizes));
  json inc = json::array();
  for (std::size_t i = 0; i < d.incidence.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < d.incidence.cols(); ++k) row.push_back(d.incidence(i, k).get_str());
    inc.push_back(std::move(row));
  }
  return {{"pv", to_json(d.pv.elem())}, {"levels", std::move(levels)}, {"incidence", std::move(inc)}};
}

BratteliDiagram diagram_from_json(const json& j) {
  auto pv = pv_from_json(at(j, "pv"));
  const auto n = pv.order();
  BratteliDiagram d{pv, {}, linalg::Matrix(n, n)};
  const auto& levels = at(j, "levels");
  if (!levels.is_array()) fail(ErrorKind::malformed_input, "'levels' must be an array");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    auto b = bigints_from_json(levels[k]);
    if (b.size() != n) fail(ErrorKind::malformed_input, "level width does not match the order");
    d.levels.push_back({k, std::move(b)});
  }
  const auto& inc = at(j, "incidence");
  if (!inc.is_array() || inc.size() != n)
    fail(ErrorKind::malformed_input, "incidence must be an n x n array");
  for (std::size_t i = 0; i < n; ++i) {
    auto row = bigints_from_json(inc[i]);
    if (row.size() != n) fail(ErrorKind::malformed_input, "incidence must be an n x n array");
    for (std::size_t k = 0; k < n; ++k) d.incidence(i, k) = row[k];
  }
  return d;
}

json to_json(const CollapseData& c) {
  json comps = json::array();
  for (const auto& x : c.components)
    comps.push_back({{"d", x.d},
                     {"degree", x.degree},
                     {"resultant", x.resultant.get_str()},
                     {"killed", x.killed}});
  return {{"components", std::move(comps)}, {"surviving_rank", c.surviving_rank}};
}

CollapseData collapse_from_json(const json& j) {
  CollapseData c;
  const auto& comps = at(j, "components");
  if (!comps.is_array()) fail(ErrorKind::malformed_input, "'components' must be an array");
  for (const auto& x : comps)
    c.components.push_back({static_cast<std::uint32_t>(count_at(x, "d")),
                            static_cast<std::uint32_t>(count_at(x, "degree")),
                            bigint_from_json(at(x, "resultant")), bool_at(x, "killed")});
  c.surviving_rank = static_cast<std::uint32_t>(count_at(j, "surviving_rank"));
  return c;
}

json to_json(const UnitCertificate& c) {
  return {{"origin", c.origin},
          {"num", to_json(c.num)},
          {"kpow", c.denom_pow},
          {"inverse", witness_to_json(c.inverse)},
          {"positivity_l", c.positivity_l},
          {"inverse_positivity_l", c.inverse_positivity_l}};
}

UnitCertificate certificate_from_json(const json& j) {
  return {string_at(j, "origin"),
          ring_element_from_json(at(j, "num")),
          count_at(j, "kpow"),
          witness_from_json(at(j, "inverse")),
          count_at(j, "positivity_l"),
          count_at(j, "inverse_positivity_l")};
}

json to_json(const InvariantReport& r) {
  json j;
  j["order"] = r.group.order();
  j["order_prime"] = r.group.is_prime();
  j["multiplicities"] = to_json(r.pv.elem());
  j["dim_v"] = r.dim_v.get_str();
  j["primitive"] = r.primitive;
  if (r.doubling) j["doubling"] = to_json(*r.doubling);
  j["ring_presentation"] = {{"base_ring", r.ring.base_ring},
                            {"localized_at", r.ring.localized_at},
                            {"collapse", to_json(r.ring.collapse)},
                            {"augmentation_image", r.ring.augmentation_image}};
  if (r.table_omitted_reason) {
    j["homotopy_aut_table"] = nullptr;
    j["homotopy_table_omitted_reason"] = *r.table_omitted_reason;
  } else {
    json t = json::array();
    for (const auto& e : r.homotopy_aut_table) t.push_back(entry_to_json(e));
    j["homotopy_aut_table"] = std::move(t);
  }
  json u = json::array();
  for (const auto& e : r.homotopy_unitary_table) u.push_back(entry_to_json(e));
  j["homotopy_unitary_table"] = std::move(u);
  if (r.k_theory_fixed)
    j["k_theory_fixed"] = {{"K0", to_json(r.k_theory_fixed->first)},
                           {"K1", to_json(r.k_theory_fixed->second)}};
  json ku = json::array();
  for (const auto& e : r.ku_coefficients)
    ku.push_back({{"subgroup", to_string(e.subgroup)},
                  {"parity", e.parity},
                  {"group", to_json(e.group)}});
  j["ku_coefficients"] = std::move(ku);
  j["bratteli_preview"] = to_json(r.bratteli_preview);
  json certs = json::array();
  for (const auto& c : r.sample_certificates) certs.push_back(to_json(c));
  j["sample_certificates"] = std::move(certs);
  j["notes"] = r.notes;
  return j;
}

InvariantReport report_from_json(const json& j) {
  auto mult = bigints_from_json(at(j, "multiplicities"));
  GroupSpec group(static_cast<std::uint32_t>(count_at(j, "order")));
  auto pv = CharacterPolynomial::from_multiplicities(group, std::move(mult));
  InvariantReport r{group,
                    pv,
                    bigint_from_json(at(j, "dim_v")),
                    bool_at(j, "primitive"),
                    std::nullopt,
                    {},
                    {},
                    std::nullopt,
                    {},
                    std::nullopt,
                    {},
                    diagram_from_json(at(j, "bratteli_preview")),
                    {},
                    {}};
  if (j.contains("doubling")) r.doubling = doubling_from_json(j.at("doubling"));
  const auto& ring = at(j, "ring_presentation");
  r.ring = {string_at(ring, "base_ring"), string_at(ring, "localized_at"),
            collapse_from_json(at(ring, "collapse")), string_at(ring, "augmentation_image")};
  if (j.contains("homotopy_table_omitted_reason")) {
    r.table_omitted_reason = string_at(j, "homotopy_table_omitted_reason");
  } else {
    for (const auto& e : at(j, "homotopy_aut_table"))
      r.homotopy_aut_table.push_back(homotopy_entry_from_json(e));
  }
  for (const auto& e : at(j, "homotopy_unitary_table"))
    r.homotopy_unitary_table.push_back(homotopy_entry_from_json(e));
  if (j.contains("k_theory_fixed")) {
    const auto& k = j.at("k_theory_fixed");
    r.k_theory_fixed = std::make_pair(descriptor_from_json(at(k, "K0")),
                                      descriptor_from_json(at(k, "K1")));
  }
  for (const auto& e : at(j, "ku_coefficients")) {
    const auto h = string_at(e, "subgroup");
    if (h != "trivial" && h != "full")
      fail(ErrorKind::malformed_input, "unknown subgroup '" + h + "'");
    r.ku_coefficients.push_back({h == "trivial" ? Subgroup::trivial : Subgroup::full,
                                 static_cast<std::uint32_t>(count_at(e, "parity")),
                                 descriptor_from_json(at(e, "group"))});
  }
  for (const auto& c : at(j, "sample_certificates"))
    r.sample_certificates.push_back(certificate_from_json(c));
  for (const auto& n : at(j, "notes")) r.notes.push_back(n.get<std::string>());
  return r;
}

json document(json body) {
  json out = {{"schema", kSchema}};
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

json error_document(const std::string& kind, const std::string& message) {
  return {{"schema", kSchema}, {"error", kind}, {"message", message}};
}

std::string to_dot(const BratteliDiagram& d) {
  std::ostringstream os;
  const auto n = d.pv.order();
  os << "digraph bratteli {\n";
  os << "  rankdir=TB;\n";
  for (const auto& level : d.levels) {
    os << "  subgraph level_" << level.level << " {\n";
    os << "    rank=same;\n";
    for (std::uint32_t j = 0; j < n; ++j) {
      if (sgn(level.block_sizes[j]) == 0) continue;
      os << "    v_" << level.level << '_' << j << " [label=\"M_"
         << level.block_sizes[j].get_str() << " (\xCF\x87^" << j << ")\"];\n";
    }
    os << "  }\n";
  }
  for (std::size_t k = 0; k + 1 < d.levels.size(); ++k) {
    const auto& from = d.levels[k];
    for (std::uint32_t j = 0; j < n; ++j) {
      if (sgn(from.block_sizes[j]) == 0) continue;
      for (std::uint32_t i = 0; i < n; ++i) {
        const BigInt& mult = d.incidence(i, j);
        if (sgn(mult) <= 0) continue;
        os << "  v_" << from.level << '_' << j << " -> v_" << from.level + 1 << '_' << i
           << " [label=" << mult.get_str() << "];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ktinv::io
