#pragma once

// Branch divisors over a contracted surface, the orbifold canonical class and
// the ampleness tests that decide the sign of the Sasakian structure.

#include "sasaki/check.hpp"
#include "sasaki/surface.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sasaki {

struct UnsupportedModel : std::logic_error {
  using std::logic_error::logic_error;
};

struct BranchComponent {
  std::string label;
  DivisorClass cls;  // on the resolved model
  Integer m;
  int genus = 0;
};

struct OrbifoldSurface {
  ContractedSurface contracted;
  std::vector<BranchComponent> branch;
  // Pairs of components declared geometrically disjoint despite positive
  // homological intersection.
  std::vector<std::pair<std::string, std::string>> disjoint_overrides;

  const SurfaceModel& base() const { return contracted.base; }

  bool overridden(const std::string& a, const std::string& b) const {
    for (const auto& [x, y] : disjoint_overrides)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  }
};

/// Throws std::invalid_argument for malformed components (m < 2, wrong shape,
/// genus contradicting adjunction).
inline OrbifoldSurface make_orbifold(ContractedSurface cs, std::vector<BranchComponent> branch,
                                     std::vector<std::pair<std::string, std::string>> overrides = {}) {
  for (const auto& b : branch) {
    if (b.m < 2) throw std::invalid_argument("branch component " + b.label + ": multiplicity must be >= 2");
    if (b.cls.surface != cs.base.name || b.cls.size() != cs.base.rank())
      throw std::invalid_argument("branch component " + b.label + " does not live on " + cs.base.name);
    if (!b.cls.is_integral()) throw std::invalid_argument("branch component " + b.label + " is not integral");
    int g = 0;
    try {
      g = genus_smooth(cs.base, b.cls);
    } catch (const NotASmoothCurveClass& e) {
      throw std::invalid_argument("branch component " + b.label + ": " + e.what());
    }
    if (g != b.genus)
      throw std::invalid_argument("branch component " + b.label + " declared genus " + std::to_string(b.genus) +
                                  " but adjunction gives " + std::to_string(g));
  }
  return {std::move(cs), std::move(branch), std::move(overrides)};
}

/// Components passing through the point, i.e. meeting its chain.
inline std::vector<std::size_t> incident_components(const OrbifoldSurface& o, const SingularPoint& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < o.branch.size(); ++i)
    for (const auto& inc : incidence(o.contracted, o.branch[i].cls))
      if (inc.point == p.label && inc.meets()) out.push_back(i);
  return out;
}

/// m(x) = d(x) times the multiplicities of the components through x.
inline Integer point_multiplicity(const OrbifoldSurface& o, const SingularPoint& p) {
  Integer m = p.d;
  for (auto i : incident_components(o, p)) m *= o.branch[i].m;
  return m;
}

struct ValidationReport {
  std::vector<Check> checks;
  std::vector<std::string> warnings;

  bool ok() const { return all_passed(checks); }
};

inline ValidationReport validate(const OrbifoldSurface& o) {
  ValidationReport rep;
  const auto& base = o.base();

  {
    bool ok = true;
    std::string detail;
    for (const auto& b : o.branch)
      if (b.m < 2) {
        ok = false;
        detail += b.label + " has m = " + b.m.str() + "; ";
      }
    rep.checks.push_back(make_check("validate.multiplicities", ok, ok ? "all m_i >= 2" : detail));
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& b : o.branch) {
      int g = -1;
      try {
        g = genus_smooth(base, b.cls);
      } catch (const NotASmoothCurveClass&) {
      }
      if (g != b.genus) {
        ok = false;
        detail += b.label + ": declared " + std::to_string(b.genus) + ", adjunction " + std::to_string(g) + "; ";
      }
    }
    rep.checks.push_back(make_check("validate.branch_genus", ok, ok ? "adjunction agrees" : detail));
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < o.branch.size(); ++i)
      for (std::size_t j = i + 1; j < o.branch.size(); ++j) {
        const auto& a = o.branch[i];
        const auto& b = o.branch[j];
        if (intersect(base, a.cls, b.cls) <= Rational(0) || o.overridden(a.label, b.label)) continue;
        if (gcd(a.m, b.m) != 1) {
          ok = false;
          detail += a.label + " meets " + b.label + " with gcd(" + a.m.str() + ", " + b.m.str() + ") = " +
                    gcd(a.m, b.m).str() + "; ";
        }
      }
    rep.checks.push_back(make_check("validate.coprimality", ok, ok ? "intersecting components coprime" : detail));
  }

  {
    bool ok = true;
    std::string detail;
    for (const auto& b : o.branch)
      for (const auto& inc : incidence(o.contracted, b.cls))
        if (!inc.orbismooth) {
          ok = false;
          detail += b.label + " at " + inc.point + "; ";
        }
    rep.checks.push_back(make_check("validate.orbismooth", ok, ok ? "branch curves meet chains at an end, once" : detail));
  }

  for (const auto& p : o.contracted.points) {
    if (p.smooth()) continue;
    auto through = incident_components(o, p);
    Check c{"validate.isotropy_single." + p.label, CheckStatus::Pass, {}, {{"components", Rational(through.size())}}};
    if (through.size() > 1) {
      c.status = CheckStatus::Warn;
      std::string names;
      for (auto i : through) names += (names.empty() ? "" : ", ") + o.branch[i].label;
      c.detail = std::to_string(through.size()) + " branch components pass through " + p.label + " (" + names + ")";
      rep.warnings.push_back("singular point " + p.label + " does not lie in a single isotropy surface: " + c.detail);
    } else {
      c.detail = through.empty() ? "no branch component through " + p.label
                                 : "only " + o.branch[through.front()].label + " passes through " + p.label;
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

/// K^orb = K + sum (1 - 1/m_i) D_i, in the H^2(X - P) basis.
inline RVector canonical_orb(const OrbifoldSurface& o) {
  RVector k = express(o.contracted, o.base().canonical);
  for (const auto& b : o.branch) {
    RVector d = express(o.contracted, b.cls);
    Rational w = Rational(1) - Rational(Integer(1), b.m);
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += w * d[i];
  }
  return k;
}

struct OrbEuler {
  Rational value;  // 2g - 2 + sum (1 - 1/d(x))
  bool orbismooth = true;
};

/// Uses the orders d(x) of the points on the curve, not branch-augmented multiplicities.
inline OrbEuler orb_euler_curve(const ContractedSurface& cs, const DivisorClass& curve, int genus) {
  OrbEuler out{Rational(2 * genus - 2), true};
  for (const auto& inc : incidence(cs, curve)) {
    if (!inc.meets()) continue;
    out.orbismooth = out.orbismooth && inc.orbismooth;
    const auto& p = chain_singularity(cs, inc.point);
    out.value += Rational(1) - Rational(Integer(1), p.d);
  }
  return out;
}

struct AdjunctionCanonical {
  Rational coefficient;  // K_X = coefficient * generator
  Rational k_dot_curve;
  bool orbismooth = true;
};

/// Solves K.C + C^2 = 2g - 2 + sum (1 - 1/d) on a rank-one model.
inline AdjunctionCanonical canonical_via_adjunction(const ContractedSurface& cs, const DivisorClass& curve,
                                                    int genus) {
  if (cs.picard_rank() != 1) throw UnsupportedModel("canonical_via_adjunction: model is not rank one");
  const auto& gen = cs.h2_minus_P.front().cls;
  Rational self = push_intersect(cs, curve, curve);
  Rational gc = push_intersect(cs, gen, curve);
  if (gc.is_zero()) throw UnsupportedModel("canonical_via_adjunction: curve is orthogonal to the generator");
  auto e = orb_euler_curve(cs, curve, genus);
  Rational kc = e.value - self;
  return {kc / gc, kc, e.orbismooth};
}

struct AmplenessVerdict {
  bool ample = false;
  std::string violated;  // first failing ray, or "square"
  std::vector<std::pair<std::string, Rational>> pairings;
};

/// Kleiman-style test of a class given in the H^2(X - P) basis.
inline AmplenessVerdict ampleness(const ContractedSurface& cs, const RVector& coords) {
  AmplenessVerdict v;
  if (cs.picard_rank() == 1) {
    const auto& gen = cs.h2_minus_P.front();
    Rational g2 = intersect(cs.base, gen.cls, gen.cls);
    v.pairings = {{gen.label, coords.at(0)}, {gen.label + "^2", g2}};
    if (g2 <= Rational(0)) throw UnsupportedModel("rank-one generator has non-positive square");
    v.ample = coords[0] > Rational(0);
    if (!v.ample) v.violated = gen.label;
    return v;
  }
  if (cs.base.cone.empty()) throw UnsupportedModel(cs.base.name + " carries no cone generators");
  DivisorClass cls = from_coords(cs, coords);
  v.ample = true;
  for (const auto& ray : cs.base.cone) {
    Rational p = intersect(cs.base, cls, ray.cls);
    v.pairings.emplace_back(ray.label, p);
    if (v.ample && p <= Rational(0)) {
      v.ample = false;
      v.violated = ray.label;
    }
  }
  Rational sq = intersect(cs.base, cls, cls);
  v.pairings.emplace_back("square", sq);
  if (v.ample && sq <= Rational(0)) {
    v.ample = false;
    v.violated = "square";
  }
  return v;
}

enum class Sign { Negative, Positive, IndefiniteOrNull };

inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "NEGATIVE";
    case Sign::Positive: return "POSITIVE";
    case Sign::IndefiniteOrNull: return "INDEFINITE_OR_NULL";
  }
  return "?";
}

inline Sign sasaki_sign(const OrbifoldSurface& o) {
  RVector k = canonical_orb(o);
  if (ampleness(o.contracted, k).ample) return Sign::Negative;
  for (auto& c : k) c = -c;
  if (ampleness(o.contracted, k).ample) return Sign::Positive;
  return Sign::IndefiniteOrNull;
}

}  // namespace sasaki
