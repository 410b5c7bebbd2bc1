#pragma once

// Certificate documents: JSON (schema "1") serialisation, family parameter
// I/O, and re-verification of a document from its embedded inputs.
//
// Rationals are [numerator, denominator] pairs; integers beyond int64 are
// written as decimal strings. Object keys are sorted.

#include "sasaki/families.hpp"

#include <json.hpp>

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sasaki {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

struct SchemaError : InvalidInput {
  using InvalidInput::InvalidInput;
};

// ---------------------------------------------------------------------------
// Scalars

inline Json to_json_value(const Integer& v) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Json to_json_value(const Rational& r) {
  return Json::array({to_json_value(r.numerator()), to_json_value(r.denominator())});
}

inline Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    bool ok = !s.empty();
    for (std::size_t i = 0; i < s.size(); ++i) ok = ok && (std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && s[i] == '-' && s.size() > 1));
    if (ok) return Integer(s);
  }
  throw SchemaError(where + ": expected an integer");
}

inline Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(where + ": expected [numerator, denominator]");
  Integer den = integer_from_json(j[1], where);
  if (den <= 0) throw SchemaError(where + ": denominator must be positive");
  return Rational(integer_from_json(j[0], where), den);
}

inline Json to_json_value(const RVector& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_json_value(c));
  return a;
}

inline Json to_json_value(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_json_value(c));
  return a;
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline std::string string_field(const Json& j, const char* key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_string()) throw SchemaError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

inline int int_field(const Json& j, const char* key, const std::string& where) {
  Integer v = integer_from_json(field(j, key, where), where + "." + key);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw SchemaError(where + "." + key + ": out of range");
  return static_cast<int>(v);
}

inline RVector rvector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  RVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline std::vector<Integer> integers_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array");
  std::vector<Integer> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

// ---------------------------------------------------------------------------
// Family parameters

inline Json params_to_json(const FamilyParams& params) {
  Json j = std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, HirzebruchParams>)
          return {{"n", p.n}, {"s", p.s}, {"m", to_json_value(p.m)}};
        else if constexpr (std::is_same_v<T, CubicParams>)
          return {{"m", to_json_value(p.m)}, {"s", p.s}, {"mlist", to_json_value(p.mlist)}};
        else if constexpr (std::is_same_v<T, EllipticParams>)
          return {{"N", p.N}, {"n", p.n}};
        else if constexpr (std::is_same_v<T, Cp2OneParams>)
          return {{"s", p.s}, {"m", to_json_value(p.m)}};
        else
          return {{"m", to_json_value(p.m)}};
      },
      params);
  j["family"] = family_name(params);
  return j;
}

inline FamilyParams params_from_json(const Json& j) {
  const std::string w = "params";
  const std::string fam = string_field(j, "family", w);
  if (fam == "hirzebruch")
    return HirzebruchParams{int_field(j, "n", w), int_field(j, "s", w), integers_from_json(field(j, "m", w), w + ".m")};
  if (fam == "cubic")
    return CubicParams{integer_from_json(field(j, "m", w), w + ".m"), int_field(j, "s", w),
                       integers_from_json(field(j, "mlist", w), w + ".mlist")};
  if (fam == "elliptic") return EllipticParams{int_field(j, "N", w), int_field(j, "n", w)};
  if (fam == "cp2_one") return Cp2OneParams{int_field(j, "s", w), integers_from_json(field(j, "m", w), w + ".m")};
  if (fam == "cp2_two") return Cp2TwoParams{integers_from_json(field(j, "m", w), w + ".m")};
  if (fam == "cp2_three") return Cp2ThreeParams{integers_from_json(field(j, "m", w), w + ".m")};
  throw SchemaError("unknown family '" + fam + "'");
}

// ---------------------------------------------------------------------------
// Certificate -> JSON

inline Json generators_to_json(const std::vector<LatticeGenerator>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back({{"label", g.label}, {"class", to_json_value(g.cls.coords)}});
  return a;
}

inline Json surface_to_json(const ContractedSurface& cs) {
  const auto& m = cs.base;
  Json gram = Json::array();
  for (const auto& row : m.gram) gram.push_back(to_json_value(row));
  Json curves = Json::array();
  for (const auto& c : m.curves)
    curves.push_back({{"label", c.label},
                      {"class", to_json_value(c.cls.coords)},
                      {"genus", c.genus ? Json(*c.genus) : Json(nullptr)}});
  Json cone = Json::array();
  for (const auto& r : m.cone) cone.push_back({{"label", r.label}, {"class", to_json_value(r.cls.coords)}});
  Json chains = Json::array();
  for (const auto& p : cs.points)
    chains.push_back({{"label", p.label},
                      {"curves", p.chain},
                      {"d", to_json_value(p.d)},
                      {"r", to_json_value(p.r)},
                      {"r_reverse", to_json_value(p.r_reverse)}});
  return {{"name", m.name},
          {"basis", m.basis},
          {"intersection_matrix", gram},
          {"canonical_class", to_json_value(m.canonical.coords)},
          {"b2", m.b2},
          {"simply_connected", m.simply_connected},
          {"named_curves", curves},
          {"cone_generators", cone},
          {"chains", chains},
          {"h2_minus_P_basis", generators_to_json(cs.h2_minus_P)},
          {"h2_X_basis", generators_to_json(cs.h2_X)}};
}

inline Json orbifold_to_json(const OrbifoldSurface& o, const std::optional<SeifertData>& s) {
  Json branch = Json::array();
  for (std::size_t i = 0; i < o.branch.size(); ++i) {
    const auto& b = o.branch[i];
    Json e = {{"label", b.label}, {"class", to_json_value(b.cls.coords)}, {"m", to_json_value(b.m)}, {"genus", b.genus}};
    e["local_invariant"] = s && i < s->j.size() ? to_json_value(s->j[i]) : Json(nullptr);
    branch.push_back(std::move(e));
  }
  Json points = Json::array();
  for (const auto& p : o.contracted.points)
    points.push_back({{"label", p.label},
                      {"d", to_json_value(p.d)},
                      {"r", to_json_value(p.r)},
                      {"r_reverse", to_json_value(p.r_reverse)},
                      {"multiplicity", to_json_value(point_multiplicity(o, p))}});
  Json overrides = Json::array();
  for (const auto& [a, b] : o.disjoint_overrides) overrides.push_back({a, b});
  return {{"branch", branch}, {"singular_points", points}, {"overrides", overrides}};
}

inline Json target_to_json(const ChernTarget& t) {
  return {{"kind", to_string(t.kind)},
          {"coords", to_json_value(t.coords)},
          {"index", t.index},
          {"value", to_json_value(t.value)},
          {"description", t.description}};
}

inline Json checks_to_json(const std::vector<Check>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) {
    Json values = Json::array();
    for (const auto& [k, v] : c.values) values.push_back({{"name", k}, {"value", to_json_value(v)}});
    a.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}, {"values", values}});
  }
  return a;
}

inline Json homology_to_json(const std::optional<Homology>& h) {
  if (!h) return nullptr;
  Json torsion = Json::array();
  for (const auto& [m, e] : h->torsion.factors()) torsion.push_back({to_json_value(m), e});
  return {{"free_rank", h->free_rank}, {"torsion", torsion}, {"torsion_text", h->torsion.str()}};
}

inline Json certificate_to_json(const Certificate& c, const std::optional<FamilyParams>& params,
                                const std::string& command) {
  Json seifert = nullptr;
  if (c.seifert) {
    seifert = {{"mu", to_json_value(c.seifert->mu)},
               {"bundle_class", to_json_value(c.seifert->bundle)},
               {"b", to_json_value(c.seifert->b)},
               {"j", to_json_value(c.seifert->j)},
               {"c1", c.c1 ? to_json_value(*c.c1) : Json(nullptr)},
               {"c1_quotient", c.c1_quotient ? to_json_value(*c.c1_quotient) : Json(nullptr)}};
  }
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"family", params ? params_to_json(*params) : Json(nullptr)},
          {"surface", surface_to_json(c.orbifold.contracted)},
          {"orbifold", orbifold_to_json(c.orbifold, c.seifert)},
          {"target", target_to_json(c.target)},
          {"seifert", seifert},
          {"k_orb", to_json_value(c.k_orb)},
          {"checks", checks_to_json(c.checks)},
          {"homology", homology_to_json(c.homology)},
          {"manifold", c.manifold},
          {"sign", to_string(c.sign)},
          {"verdict", to_string(c.verdict)},
          {"assumptions", c.assumptions},
          {"warnings", c.warnings}};
}

// ---------------------------------------------------------------------------
// JSON -> inputs

inline std::vector<LatticeGenerator> generators_from_json(const Json& j, const SurfaceModel& m, const std::string& w) {
  if (!j.is_array()) throw SchemaError(w + ": expected an array");
  std::vector<LatticeGenerator> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string wi = w + "[" + std::to_string(i) + "]";
    out.push_back({string_field(j[i], "label", wi), m.make(rvector_from_json(field(j[i], "class", wi), wi + ".class"))});
  }
  return out;
}

/// Rebuilds the contracted surface; lattice inconsistencies surface as SchemaError.
inline ContractedSurface surface_from_json(const Json& j) {
  const std::string w = "surface";
  SurfaceModel m;
  m.name = string_field(j, "name", w);
  const auto& basis = field(j, "basis", w);
  if (!basis.is_array()) throw SchemaError(w + ".basis: expected an array");
  for (const auto& b : basis) {
    if (!b.is_string()) throw SchemaError(w + ".basis: expected strings");
    m.basis.push_back(b.get<std::string>());
  }
  const auto& gram = field(j, "intersection_matrix", w);
  if (!gram.is_array()) throw SchemaError(w + ".intersection_matrix: expected an array");
  for (std::size_t i = 0; i < gram.size(); ++i)
    m.gram.push_back(integers_from_json(gram[i], w + ".intersection_matrix[" + std::to_string(i) + "]"));
  try {
    m.canonical = m.make(rvector_from_json(field(j, "canonical_class", w), w + ".canonical_class"));
    m.b2 = int_field(j, "b2", w);
    const auto& sc = field(j, "simply_connected", w);
    if (!sc.is_boolean()) throw SchemaError(w + ".simply_connected: expected a boolean");
    m.simply_connected = sc.get<bool>();
    for (const auto& c : field(j, "named_curves", w)) {
      std::optional<int> g;
      const auto& gj = field(c, "genus", w + ".named_curves");
      if (!gj.is_null()) g = int_field(c, "genus", w + ".named_curves");
      m.add_curve(string_field(c, "label", w + ".named_curves"),
                  m.make(rvector_from_json(field(c, "class", w + ".named_curves"), w + ".named_curves.class")), g);
    }
    for (const auto& r : field(j, "cone_generators", w))
      m.cone.push_back({string_field(r, "label", w + ".cone_generators"),
                        m.make(rvector_from_json(field(r, "class", w + ".cone_generators"), w + ".cone_generators"))});
    std::vector<std::pair<std::string, std::vector<std::string>>> chains;
    for (const auto& c : field(j, "chains", w)) {
      std::vector<std::string> curves;
      for (const auto& e : field(c, "curves", w + ".chains")) {
        if (!e.is_string()) throw SchemaError(w + ".chains.curves: expected strings");
        curves.push_back(e.get<std::string>());
      }
      chains.emplace_back(string_field(c, "label", w + ".chains"), std::move(curves));
    }
    auto h2p = generators_from_json(field(j, "h2_minus_P_basis", w), m, w + ".h2_minus_P_basis");
    auto h2x = generators_from_json(field(j, "h2_X_basis", w), m, w + ".h2_X_basis");
    return contract(std::move(m), chains, h2p, h2x);
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("surface: ") + e.what());
  }
}

inline OrbifoldSurface orbifold_from_json(ContractedSurface cs, const Json& j) {
  const std::string w = "orbifold";
  std::vector<BranchComponent> branch;
  for (const auto& b : field(j, "branch", w))
    branch.push_back({string_field(b, "label", w + ".branch"),
                      cs.base.make(rvector_from_json(field(b, "class", w + ".branch"), w + ".branch.class")),
                      integer_from_json(field(b, "m", w + ".branch"), w + ".branch.m"), int_field(b, "genus", w + ".branch")});
  std::vector<std::pair<std::string, std::string>> overrides;
  for (const auto& o : field(j, "overrides", w)) {
    if (!o.is_array() || o.size() != 2 || !o[0].is_string() || !o[1].is_string())
      throw SchemaError(w + ".overrides: expected [label, label] pairs");
    overrides.emplace_back(o[0].get<std::string>(), o[1].get<std::string>());
  }
  try {
    return make_orbifold(std::move(cs), std::move(branch), std::move(overrides));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("orbifold: ") + e.what());
  }
}

inline ChernTarget target_from_json(const Json& j) {
  const std::string w = "target";
  const std::string kind = string_field(j, "kind", w);
  ChernTarget t;
  if (kind == "exact")
    t.kind = ChernTarget::Kind::ExactClass;
  else if (kind == "pinned")
    t.kind = ChernTarget::Kind::PinnedCoordinate;
  else if (kind == "any_primitive_ample")
    t.kind = ChernTarget::Kind::AnyPrimitiveAmple;
  else
    throw SchemaError(w + ".kind: unknown target kind '" + kind + "'");
  t.coords = integers_from_json(field(j, "coords", w), w + ".coords");
  t.index = static_cast<std::size_t>(int_field(j, "index", w));
  t.value = integer_from_json(field(j, "value", w), w + ".value");
  t.description = string_field(j, "description", w);
  return t;
}

inline std::optional<SeifertData> seifert_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  const std::string w = "seifert";
  return SeifertData{integers_from_json(field(j, "bundle_class", w), w + ".bundle_class"),
                     integers_from_json(field(j, "b", w), w + ".b"), integers_from_json(field(j, "j", w), w + ".j"),
                     integer_from_json(field(j, "mu", w), w + ".mu")};
}

// ---------------------------------------------------------------------------
// Verification

struct VerifyResult {
  Certificate certificate;              // recomputed
  std::optional<FamilyParams> params;
  std::vector<std::string> mismatches;  // checks whose recomputation differs
  bool reproduced = false;

  /// 0 when every check reproduces and the verdict is VERIFIED, else 1.
  int exit_code() const { return reproduced && certificate.verified() ? 0 : 1; }
};

/// Recomputes every check from the inputs embedded in the document.
inline VerifyResult verify_document(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("document: expected an object");
  if (string_field(doc, "schema_version", "document") != kSchemaVersion)
    throw SchemaError("document: unsupported schema_version");

  VerifyResult r;
  const auto& fam = field(doc, "family", "document");
  std::vector<Check> preconditions;
  std::vector<std::string> extra;
  if (!fam.is_null()) {
    r.params = params_from_json(fam);
    try {
      auto f = build(*r.params);
      preconditions = std::move(f.preconditions);
      extra = std::move(f.assumptions);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("family: ") + e.what());
    }
  }
  auto orb = orbifold_from_json(surface_from_json(field(doc, "surface", "document")), field(doc, "orbifold", "document"));
  auto target = target_from_json(field(doc, "target", "document"));
  auto seifert = seifert_from_json(field(doc, "seifert", "document"));
  std::string reason;
  if (!seifert) reason = solve_seifert(orb, target).reason;

  r.certificate = certify(orb, seifert, target, std::move(preconditions), std::move(extra), reason);
  if (r.params) r.certificate.family = family_name(*r.params);

  const Json recomputed = checks_to_json(r.certificate.checks);
  const Json& recorded = field(doc, "checks", "document");
  for (const auto& c : recomputed) {
    bool found = false;
    for (const auto& old : recorded)
      if (old.is_object() && old.value("name", "") == c["name"]) {
        found = true;
        if (old != c) r.mismatches.push_back(c["name"].get<std::string>());
      }
    if (!found) r.mismatches.push_back(c["name"].get<std::string>() + " (absent from document)");
  }
  for (const auto& old : recorded) {
    std::string name = old.is_object() ? old.value("name", "") : "";
    bool present = false;
    for (const auto& c : recomputed) present = present || c["name"] == name;
    if (!present) r.mismatches.push_back(name + " (not recomputed)");
  }
  r.reproduced = r.mismatches.empty();
  return r;
}

}  // namespace sasaki
