#pragma once

// Seifert bundle data over an orbifold surface: Chern class assembly, the
// primitivity and surjectivity conditions for H_1(M) = 0, local invariants,
// H_2 of the total space, and certificate assembly.

#include "sasaki/check.hpp"
#include "sasaki/orbifold.hpp"
#include "sasaki/torsion.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sasaki {

/// What c_1(M/mu) must equal.
struct ChernTarget {
  enum class Kind {
    ExactClass,         // c_1(M/mu) == coords
    PinnedCoordinate,   // c_1(M/mu)[index] == value; other coordinates free
    AnyPrimitiveAmple,  // any primitive class with c_1(M) ample
  };
  Kind kind = Kind::ExactClass;
  std::vector<Integer> coords;
  std::size_t index = 0;
  Integer value = 1;
  std::string description;

  static ChernTarget exact(std::vector<Integer> c, std::string what) {
    return {Kind::ExactClass, std::move(c), 0, 1, std::move(what)};
  }
  static ChernTarget pinned(std::size_t i, Integer v, std::string what) {
    return {Kind::PinnedCoordinate, {}, i, std::move(v), std::move(what)};
  }
  static ChernTarget any_primitive_ample(std::string what) {
    return {Kind::AnyPrimitiveAmple, {}, 0, 1, std::move(what)};
  }
};

inline const char* to_string(ChernTarget::Kind k) {
  switch (k) {
    case ChernTarget::Kind::ExactClass: return "exact";
    case ChernTarget::Kind::PinnedCoordinate: return "pinned";
    case ChernTarget::Kind::AnyPrimitiveAmple: return "any_primitive_ample";
  }
  return "?";
}

struct SeifertData {
  std::vector<Integer> bundle;  // B, integral coordinates in the H^2(X - P) basis
  std::vector<Integer> b;       // 0 < b_i < m_i
  std::vector<Integer> j;       // j_i b_i = 1 mod m_i
  Integer mu = 1;

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

inline Integer orbifold_mu(const OrbifoldSurface& o) {
  Integer mu = 1;
  for (const auto& c : o.branch) mu = lcm(mu, c.m);
  return mu;
}

/// c_1(M) = B + sum (b_i / m_i) D_i in the H^2(X - P) basis.
inline RVector chern(const OrbifoldSurface& o, const SeifertData& s) {
  const std::size_t r = o.contracted.picard_rank();
  if (s.bundle.size() != r) throw std::invalid_argument("chern: bundle class has wrong length");
  if (s.b.size() != o.branch.size()) throw std::invalid_argument("chern: one b_i per branch component required");
  RVector c(r);
  for (std::size_t k = 0; k < r; ++k) c[k] = Rational(s.bundle[k]);
  for (std::size_t i = 0; i < o.branch.size(); ++i) {
    if (s.b[i] == 0) continue;
    RVector d = express(o.contracted, o.branch[i].cls);
    Rational w(s.b[i], o.branch[i].m);
    for (std::size_t k = 0; k < r; ++k) c[k] += w * d[k];
  }
  return c;
}

struct ChernQuotient {
  RVector coords;  // mu * c_1(M)
  bool integral = true;
};

inline ChernQuotient chern_quotient(const OrbifoldSurface& o, const SeifertData& s) {
  ChernQuotient q{chern(o, s), true};
  for (auto& c : q.coords) {
    c *= Rational(s.mu);
    q.integral = q.integral && c.is_integer();
  }
  return q;
}

inline Integer coordinate_gcd(const RVector& v) {
  Integer g = 0;
  for (const auto& c : v) {
    if (!c.is_integer()) throw std::invalid_argument("coordinate_gcd: non-integral coordinate " + c.str());
    g = gcd(g, c.numerator());
  }
  return g;
}

struct ComponentSurjectivity {
  std::string label;
  Integer pairing_gcd;  // gcd over H^2(X) generators x of x.D_i
  Integer m;
  bool onto = false;
};

struct SurjectivityReport {
  std::vector<ComponentSurjectivity> components;
  bool pairwise_coprime = true;
  bool onto = true;
};

/// H^2(X) -> sum H^2(D_i, Z_{m_i}) is onto iff every factor is and the m_i are
/// pairwise coprime.
inline SurjectivityReport surjectivity(const OrbifoldSurface& o) {
  SurjectivityReport rep;
  std::vector<Integer> ms;
  for (const auto& c : o.branch) {
    Integer g = 0;
    for (const auto& x : o.contracted.h2_X) {
      Rational p = intersect(o.base(), x.cls, c.cls);
      if (!p.is_integer()) throw std::invalid_argument("surjectivity: non-integral pairing with " + x.label);
      g = gcd(g, p.numerator());
    }
    ComponentSurjectivity cs{c.label, g, c.m, gcd(g, c.m) == 1};
    rep.onto = rep.onto && cs.onto;
    rep.components.push_back(std::move(cs));
    ms.push_back(c.m);
  }
  rep.pairwise_coprime = pairwise_coprime(ms);
  rep.onto = rep.onto && rep.pairwise_coprime;
  return rep;
}

struct SeifertOutcome {
  std::optional<SeifertData> data;
  std::string reason;  // empty on success

  explicit operator bool() const { return data.has_value(); }
};

namespace detail {

/// Integer tuples of the given length with max |entry| == radius, entries
/// ordered 0, 1, -1, 2, -2, ... lexicographically.
inline std::vector<std::vector<Integer>> shell(std::size_t len, int radius) {
  std::vector<long long> seq{0};
  for (int v = 1; v <= radius; ++v) {
    seq.push_back(v);
    seq.push_back(-v);
  }
  std::vector<std::vector<Integer>> out;
  std::vector<std::size_t> idx(len, 0);
  if (len == 0) {
    if (radius == 0) out.emplace_back();
    return out;
  }
  while (true) {
    long long mx = 0;
    for (auto i : idx) mx = std::max(mx, seq[i] < 0 ? -seq[i] : seq[i]);
    if (mx == radius) {
      std::vector<Integer> t;
      for (auto i : idx) t.emplace_back(seq[i]);
      out.push_back(std::move(t));
    }
    std::size_t k = len;
    while (k > 0) {
      --k;
      if (++idx[k] < seq.size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

}  // namespace detail

inline constexpr int kBundleSearchRadius = 8;

/// Finds B, b_i with c_1(M/mu) meeting the target and c_1(M) ample.
inline SeifertOutcome solve_seifert(const OrbifoldSurface& o, const ChernTarget& target) {
  const auto& cs = o.contracted;
  const std::size_t r = cs.picard_rank();
  const std::size_t s = o.branch.size();
  SeifertOutcome out;

  std::vector<std::vector<Integer>> e(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (const auto& c : express(cs, o.branch[i].cls)) {
      if (!c.is_integer()) {
        out.reason = "model-incomplete: " + o.branch[i].label + " is not integral in the H^2(X-P) basis";
        return out;
      }
      e[i].push_back(c.numerator());
    }
  }
  const Integer mu = orbifold_mu(o);
  std::vector<Integer> ms;
  for (const auto& c : o.branch) ms.push_back(c.m);

  auto finish = [&](std::vector<Integer> bundle, std::vector<Integer> b) -> std::optional<SeifertData> {
    SeifertData d{std::move(bundle), std::move(b), {}, mu};
    for (std::size_t i = 0; i < s; ++i) {
      auto inv = mod_inverse(d.b[i], ms[i]);
      if (!inv) return std::nullopt;
      d.j.push_back(*inv);
    }
    return d;
  };
  auto good = [&](const SeifertData& d) {
    auto q = chern_quotient(o, d);
    return q.integral && coordinate_gcd(q.coords) == 1 && ampleness(cs, chern(o, d)).ample;
  };

  // mu*c_1[k] = mu*B_k + sum_i b_i (mu/m_i) e_ik
  auto coefficients = [&](std::size_t k) {
    std::vector<Integer> c;
    for (std::size_t i = 0; i < s; ++i) c.push_back(mu / ms[i] * e[i][k]);
    return c;
  };
  auto residual_bundle = [&](const std::vector<Integer>& b, const std::vector<Integer>& want,
                             std::vector<Integer>& bundle) {
    for (std::size_t k = 0; k < r; ++k) {
      Integer acc = want[k];
      auto c = coefficients(k);
      for (std::size_t i = 0; i < s; ++i) acc -= b[i] * c[i];
      if (acc % mu != 0) return false;
      bundle[k] = acc / mu;
    }
    return true;
  };

  if (target.kind == ChernTarget::Kind::AnyPrimitiveAmple) {
    std::vector<Integer> b(s, 1);
    for (int radius = 0; radius <= kBundleSearchRadius; ++radius)
      for (auto& bundle : detail::shell(r, radius)) {
        auto d = finish(bundle, b);
        if (d && good(*d)) {
          out.data = std::move(d);
          return out;
        }
      }
    out.reason = "no primitive ample c_1 with b_i = 1 and |B| <= " + std::to_string(kBundleSearchRadius);
    return out;
  }

  const std::size_t pivot = target.kind == ChernTarget::Kind::PinnedCoordinate ? target.index : 0;
  if (pivot >= r) throw std::invalid_argument("solve_seifert: target coordinate out of range");
  if (target.kind == ChernTarget::Kind::ExactClass && target.coords.size() != r)
    throw std::invalid_argument("solve_seifert: target class has wrong length");
  const Integer pivot_value = target.kind == ChernTarget::Kind::ExactClass ? target.coords[pivot] : target.value;
  if (pivot_value != 1) throw std::invalid_argument("solve_seifert: pivot coordinate of the target must be 1");

  auto bez = solve_bezout_product(coefficients(pivot), ms, mu);
  if (!bez) {
    out.reason = "unsolvable: " + bez.reason;
    return out;
  }
  const auto& b = bez.solution->b;

  if (target.kind == ChernTarget::Kind::ExactClass) {
    std::vector<Integer> bundle(r);
    if (!residual_bundle(b, target.coords, bundle)) {
      out.reason = "target class not reachable from the pivot solution";
      return out;
    }
    auto d = finish(bundle, b);
    if (!d) {
      out.reason = "b_i not invertible modulo m_i";
      return out;
    }
    if (!ampleness(cs, chern(o, *d)).ample) {
      out.reason = "c_1(M) is not ample for the target class";
      return out;
    }
    out.data = std::move(d);
    return out;
  }

  // Pinned: B_pivot comes from the Bezout solution, the rest is searched.
  for (int radius = 0; radius <= kBundleSearchRadius; ++radius)
    for (const auto& free : detail::shell(r - 1, radius)) {
      std::vector<Integer> bundle(r);
      for (std::size_t k = 0, f = 0; k < r; ++k) bundle[k] = k == pivot ? bez.solution->q : free[f++];
      auto d = finish(bundle, b);
      if (d && good(*d)) {
        out.data = std::move(d);
        return out;
      }
    }
  out.reason = "no ample primitive completion of the pinned coordinate";
  return out;
}

struct Homology {
  int free_rank = 0;
  TorsionGroup torsion;

  friend bool operator==(const Homology&, const Homology&) = default;
};

/// H_2(M) = Z^k + sum Z_{m_i}^{2 g_i}, k = b_2(X) - 1. Valid only once the
/// H_1(M) = 0 conditions hold.
inline Homology homology(const OrbifoldSurface& o) {
  std::vector<TorsionGroup::Factor> t;
  for (const auto& c : o.branch)
    if (c.genus > 0) t.emplace_back(c.m, 2 * c.genus);
  return {o.contracted.b2() - 1, TorsionGroup::from_summands(t)};
}

inline std::string manifold_name(const Homology& h) {
  const std::string k = std::to_string(h.free_rank);
  if (h.torsion.trivial()) {
    if (h.free_rank == 0) return "S^5";
    if (h.free_rank == 1) return "S^2 x S^3";
    return "#_" + k + "(S^2 x S^3)";
  }
  if (h.free_rank == 0) return "rational homology sphere with H_2 = " + h.torsion.str();
  return "spin Smale-Barden manifold with H_2 = Z^" + k + " + " + h.torsion.str();
}

enum class Verdict { Verified, Rejected };

inline const char* to_string(Verdict v) { return v == Verdict::Verified ? "VERIFIED" : "REJECTED"; }

struct Certificate {
  std::string family;
  OrbifoldSurface orbifold;
  ChernTarget target;
  std::optional<SeifertData> seifert;
  std::optional<RVector> c1;
  std::optional<RVector> c1_quotient;
  RVector k_orb;
  std::vector<Check> checks;
  std::optional<Homology> homology;
  std::string manifold;
  Sign sign = Sign::IndefiniteOrNull;
  Verdict verdict = Verdict::Rejected;
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;

  bool verified() const { return verdict == Verdict::Verified; }
  const Check* check(std::string_view name) const { return find_check(checks, name); }
};

inline std::vector<std::string> standard_assumptions() {
  return {
      "pi_1^orb of the base orbifold is abelian, so H_1(M) = 0 implies M simply connected",
      "H_1(X, Z) = 0 is taken from the surface metadata, not computed",
      "H^2(X, Z) is torsion-free",
      "M is spin, so the Barden invariant vanishes",
      "local invariants at the singular points exist and are compatible with the branch data",
  };
}

namespace detail {

inline std::vector<std::pair<std::string, Rational>> as_values(const std::string& prefix, const RVector& v) {
  std::vector<std::pair<std::string, Rational>> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.emplace_back(prefix + "[" + std::to_string(i) + "]", v[i]);
  return out;
}

inline std::vector<std::pair<std::string, Rational>> as_values(const std::string& prefix,
                                                              const std::vector<Integer>& v) {
  RVector r(v.begin(), v.end());
  return as_values(prefix, r);
}

}  // namespace detail

/// Runs every condition and records it; never throws on failed mathematics.
inline Certificate certify(const OrbifoldSurface& o, const std::optional<SeifertData>& s, const ChernTarget& target,
                           std::vector<Check> preconditions = {}, std::vector<std::string> extra_assumptions = {},
                           std::string solver_reason = {}) {
  Certificate c{};
  c.orbifold = o;
  c.target = target;
  c.seifert = s;
  c.checks = std::move(preconditions);

  auto rep = validate(o);
  for (auto& ch : rep.checks) c.checks.push_back(std::move(ch));
  c.warnings = std::move(rep.warnings);

  c.checks.push_back(make_check("h1_base", o.base().simply_connected,
                                o.base().simply_connected ? "H_1(X) = 0 (surface metadata)"
                                                          : "surface not recorded as simply connected"));

  auto surj = surjectivity(o);
  {
    Check ch = make_check("surjectivity", surj.onto);
    for (const auto& comp : surj.components) {
      ch.values.emplace_back(comp.label + ".pairing_gcd", Rational(comp.pairing_gcd));
      if (!comp.onto)
        ch.detail += comp.label + ": gcd(" + comp.pairing_gcd.str() + ", " + comp.m.str() + ") = " +
                     gcd(comp.pairing_gcd, comp.m).str() + "; ";
    }
    if (!surj.pairwise_coprime) ch.detail += "multiplicities not pairwise coprime; ";
    if (ch.detail.empty()) ch.detail = "H^2(X) -> sum H^2(D_i, Z_{m_i}) onto";
    c.checks.push_back(std::move(ch));
  }

  c.k_orb = canonical_orb(o);
  c.sign = sasaki_sign(o);
  c.checks.push_back(make_check("canonical_ample", c.sign == Sign::Negative,
                                std::string("K^orb sign ") + to_string(c.sign), detail::as_values("K_orb", c.k_orb)));

  bool data_ok = s.has_value();
  {
    Check ch = make_check("seifert_data", data_ok, data_ok ? "" : "no Seifert data: " + solver_reason);
    if (s) {
      std::string problems;
      if (s->b.size() != o.branch.size() || s->j.size() != o.branch.size())
        problems += "one b_i and j_i per component required; ";
      if (s->bundle.size() != o.contracted.picard_rank()) problems += "bundle class has wrong length; ";
      if (s->mu != orbifold_mu(o)) problems += "mu != lcm(m_i); ";
      if (problems.empty())
        for (std::size_t i = 0; i < o.branch.size(); ++i) {
          const auto& m = o.branch[i].m;
          if (s->b[i] <= 0 || s->b[i] >= m) problems += "b_" + std::to_string(i) + " out of (0, m_i); ";
          if (gcd(s->b[i], m) != 1) problems += "gcd(b_" + std::to_string(i) + ", m_i) != 1; ";
        }
      data_ok = problems.empty();
      ch = make_check("seifert_data", data_ok, data_ok ? "ranges and mu consistent" : problems,
                      detail::as_values("b", s->b));
      ch.values.emplace_back("mu", Rational(s->mu));
    }
    c.checks.push_back(std::move(ch));
  }

  if (data_ok) {
    {
      std::string problems;
      for (std::size_t i = 0; i < o.branch.size(); ++i)
        if (mod_floor(s->b[i] * s->j[i], o.branch[i].m) != 1 || gcd(s->j[i], o.branch[i].m) != 1)
          problems += "b_" + std::to_string(i) + " j_" + std::to_string(i) + " != 1 mod " + o.branch[i].m.str() + "; ";
      c.checks.push_back(make_check("local_invariants", problems.empty(),
                                    problems.empty() ? "j_i b_i = 1 mod m_i" : problems, detail::as_values("j", s->j)));
    }
    c.c1 = chern(o, *s);
    auto q = chern_quotient(o, *s);
    c.c1_quotient = q.coords;
    c.checks.push_back(make_check("integrality", q.integral,
                                  q.integral ? "mu c_1(M) integral in H^2(X-P)" : "mu c_1(M) not integral",
                                  detail::as_values("c1_quotient", q.coords)));
    if (q.integral) {
      Integer g = coordinate_gcd(q.coords);
      c.checks.push_back(make_check("primitivity", g == 1, "coordinate gcd " + g.str(), {{"gcd", Rational(g)}}));
      bool hit = true;
      std::string what;
      if (target.kind == ChernTarget::Kind::ExactClass) {
        hit = target.coords.size() == q.coords.size();
        for (std::size_t k = 0; hit && k < q.coords.size(); ++k) hit = q.coords[k] == Rational(target.coords[k]);
        what = "c_1(M/mu) equals " + target.description;
      } else if (target.kind == ChernTarget::Kind::PinnedCoordinate) {
        hit = target.index < q.coords.size() && q.coords[target.index] == Rational(target.value);
        what = "coordinate " + std::to_string(target.index) + " of c_1(M/mu) equals " + target.value.str();
      } else {
        what = "any primitive class (" + target.description + ")";
      }
      c.checks.push_back(make_check("target", hit, hit ? what : "missed: " + what));
    } else {
      c.checks.push_back(make_check("primitivity", false, "undefined for a non-integral class"));
      c.checks.push_back(make_check("target", false, "undefined for a non-integral class"));
    }
    auto amp = ampleness(o.contracted, *c.c1);
    Check ch = make_check("c1_ample", amp.ample, amp.ample ? "c_1(M) ample" : "fails on " + amp.violated);
    ch.values = amp.pairings;
    c.checks.push_back(std::move(ch));
  }

  c.verdict = all_passed(c.checks) ? Verdict::Verified : Verdict::Rejected;

  auto ok = [&](std::string_view n) {
    auto* ch = c.check(n);
    return ch && ch->passed();
  };
  if (ok("h1_base") && ok("surjectivity") && ok("primitivity")) {
    c.homology = homology(o);
    c.manifold = manifold_name(*c.homology);
  } else {
    c.manifold = "unidentified: H_1(M) = 0 not established";
  }

  c.assumptions = standard_assumptions();
  for (auto& a : extra_assumptions) c.assumptions.push_back(std::move(a));
  return c;
}

}  // namespace sasaki
