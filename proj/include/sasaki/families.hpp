#pragma once

// Parameterised constructions and the searches over their parameters.

#include "sasaki/check.hpp"
#include "sasaki/orbifold.hpp"
#include "sasaki/seifert.hpp"
#include "sasaki/surface.hpp"
#include "sasaki/torsion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sasaki {

/// Structurally malformed parameters (as opposed to failed hypotheses).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct HirzebruchParams {
  int n = 1;
  int s = 0;
  std::vector<Integer> m;
  friend bool operator==(const HirzebruchParams&, const HirzebruchParams&) = default;
};
struct CubicParams {
  Integer m = 2;
  int s = 0;
  std::vector<Integer> mlist;
  friend bool operator==(const CubicParams&, const CubicParams&) = default;
};
struct EllipticParams {
  int N = 3;
  int n = 1;
  friend bool operator==(const EllipticParams&, const EllipticParams&) = default;
};
struct Cp2OneParams {
  int s = 0;
  std::vector<Integer> m;
  friend bool operator==(const Cp2OneParams&, const Cp2OneParams&) = default;
};
struct Cp2TwoParams {
  std::vector<Integer> m;  // m1, m2, m3
  friend bool operator==(const Cp2TwoParams&, const Cp2TwoParams&) = default;
};
struct Cp2ThreeParams {
  std::vector<Integer> m;  // m1, m2, m3
  friend bool operator==(const Cp2ThreeParams&, const Cp2ThreeParams&) = default;
};

using FamilyParams =
    std::variant<HirzebruchParams, CubicParams, EllipticParams, Cp2OneParams, Cp2TwoParams, Cp2ThreeParams>;

inline std::string family_name(const FamilyParams& p) {
  static const char* names[] = {"hirzebruch", "cubic", "elliptic", "cp2_one", "cp2_two", "cp2_three"};
  return names[p.index()];
}

struct FamilyBuild {
  OrbifoldSurface orbifold;
  ChernTarget target;
  std::vector<Check> preconditions;
  std::vector<std::string> assumptions;
  Homology expected;  // H_2(M) the family is designed to produce
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

inline void require_multiplicities(const std::vector<Integer>& m, std::size_t count, const std::string& who) {
  require(m.size() == count, who + ": expected " + std::to_string(count) + " multiplicities, got " +
                                 std::to_string(m.size()));
  for (const auto& x : m) require(x >= 2, who + ": multiplicities must be >= 2");
}

inline Rational deficit_sum(const std::vector<Integer>& m) {
  Rational s;
  for (const auto& x : m) s += Rational(1) - Rational(Integer(1), x);
  return s;
}

inline Check coprime_check(const std::string& name, const std::vector<Integer>& m) {
  bool ok = pairwise_coprime(m);
  return make_check(name, ok, ok ? "pairwise coprime" : "multiplicities share a factor");
}

inline Check coprime_to(const std::string& name, const std::vector<Integer>& m, const Integer& n) {
  std::string bad;
  for (const auto& x : m)
    if (gcd(x, n) != 1) bad += "gcd(" + x.str() + ", " + n.str() + ") = " + gcd(x, n).str() + "; ";
  return make_check(name, bad.empty(), bad.empty() ? "all coprime to " + n.str() : bad, {{"modulus", Rational(n)}});
}

inline Check positive_check(const std::string& name, const Rational& value, const std::string& expr) {
  return make_check(name, value > Rational(0), expr + " = " + value.str(), {{"value", value}});
}

inline Check pair_sums_check(const std::vector<Integer>& m) {
  Check c = make_check("precondition.pair_sums", true, "1/m_i + 1/m_j < 1 for all pairs");
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Rational v = Rational(Integer(1), m[i]) + Rational(Integer(1), m[j]);
      c.values.emplace_back("1/m" + std::to_string(i + 1) + "+1/m" + std::to_string(j + 1), v);
      if (v >= Rational(1)) {
        c.status = CheckStatus::Fail;
        c.detail = "1/m_" + std::to_string(i + 1) + " + 1/m_" + std::to_string(j + 1) + " = " + v.str() + " >= 1";
      }
    }
  return c;
}

inline std::vector<BranchComponent> labelled(const std::string& stem, const std::vector<DivisorClass>& classes,
                                             const std::vector<Integer>& m, int genus) {
  std::vector<BranchComponent> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    out.push_back({stem + std::to_string(i + 1), classes[i], m[i], genus});
  return out;
}

}  // namespace detail

/// F_n with D = C + 2E_0 of multiplicity 2 and s sections D_i = E_0.
inline FamilyBuild build_hirzebruch(const HirzebruchParams& p) {
  detail::require(p.n >= 1, "hirzebruch: n must be >= 1");
  detail::require(p.s >= 1, "hirzebruch: s must be >= 1");
  detail::require_multiplicities(p.m, static_cast<std::size_t>(p.s), "hirzebruch");

  auto cs = hirzebruch_model(p.n);
  const auto& base = cs.base;
  auto C = base.make({1, 0});
  auto E0 = base.make({0, 1});
  std::vector<BranchComponent> branch{{"D", C + Rational(2) * E0, 2, p.n}};
  auto sections = detail::labelled("D", std::vector<DivisorClass>(p.m.size(), E0), p.m, 0);
  branch.insert(branch.end(), sections.begin(), sections.end());

  FamilyBuild f{make_orbifold(std::move(cs), std::move(branch)), ChernTarget::exact({1}, "[C]"), {}, {}, {}};
  f.preconditions.push_back(detail::coprime_check("precondition.pairwise_coprime", p.m));
  f.preconditions.push_back(detail::coprime_to("precondition.odd", p.m, 2));
  f.preconditions.push_back(detail::coprime_to("precondition.coprime_to_n", p.m, p.n));
  f.preconditions.push_back(detail::positive_check(
      "precondition.negativity", Rational(-3, 2) + Rational(p.n) * detail::deficit_sum(p.m),
      "-3/2 + n sum(1 - 1/m_i)"));
  f.assumptions = {"D in |C + 2E_0| and the sections D_i in |E_0| are smooth and meet transversally",
                   "E_0 generates H^2(X, Z) and [C] generates H^2(X - P, Z)"};
  f.expected = {0, TorsionGroup::cyclic_power(2, 2 * p.n)};
  return f;
}

/// Contracted cubic-tangent surface with C of multiplicity m and s generic lines.
inline FamilyBuild build_cubic(const CubicParams& p) {
  detail::require(p.m >= 2, "cubic: m must be >= 2");
  detail::require(p.s >= 1, "cubic: s must be >= 1");
  detail::require_multiplicities(p.mlist, static_cast<std::size_t>(p.s), "cubic");

  auto cs = cubic_tangent_model();
  const auto& base = cs.base;
  std::vector<BranchComponent> branch{{"C", base.curve("Ccheck").cls, p.m, 1}};
  auto lines = detail::labelled("L", std::vector<DivisorClass>(p.mlist.size(), base.curve("Lgen").cls), p.mlist, 0);
  branch.insert(branch.end(), lines.begin(), lines.end());

  FamilyBuild f{make_orbifold(std::move(cs), std::move(branch)), ChernTarget::exact({1}, "[Ebar]"), {}, {}, {}};
  f.preconditions.push_back(make_check("precondition.gcd_m_7", gcd(p.m, Integer(7)) == 1,
                                       "gcd(" + p.m.str() + ", 7) = " + gcd(p.m, Integer(7)).str()));
  f.preconditions.push_back(make_check("precondition.s", p.s >= 2, "s = " + std::to_string(p.s) + ", need >= 2"));
  f.preconditions.push_back(detail::coprime_check("precondition.pairwise_coprime", p.mlist));
  f.preconditions.push_back(detail::coprime_to("precondition.coprime_to_m", p.mlist, p.m));
  f.preconditions.push_back(detail::coprime_to("precondition.coprime_to_21", p.mlist, 21));
  f.preconditions.push_back(detail::positive_check(
      "precondition.negativity",
      Rational(-6) + Rational(7) * (Rational(1) - Rational(Integer(1), p.m)) + Rational(3) * detail::deficit_sum(p.mlist),
      "-6 + 7(1 - 1/m) + 3 sum(1 - 1/m_i)"));
  f.assumptions = {"a smooth cubic and a line tangent to it at a non-inflection point exist as described",
                   "the s lines are generic: transversal to C and to each other",
                   "x = Ccheck - E and Ebar generate H^2(X, Z) and H^2(X - P, Z)"};
  f.expected = {0, TorsionGroup::cyclic_power(p.m, 2)};
  return f;
}

/// Elliptic surface with chi = 12N and an I_n fibre; the chain through the
/// section contracts to one point. No branch divisor.
inline FamilyBuild build_elliptic(const EllipticParams& p) {
  detail::require(p.N >= 1, "elliptic: N must be >= 1");
  detail::require(p.n >= 1, "elliptic: n must be >= 1");
  detail::require(p.n <= 12 * p.N - 3, "elliptic: n exceeds the available Picard rank 12N - 2");

  FamilyBuild f{make_orbifold(elliptic_model(p.N, p.n), {}), ChernTarget::exact({1}, "[Fbar]"), {}, {}, {}};
  f.preconditions.push_back(make_check("precondition.n_range", p.n <= 10 * p.N - 1,
                                       "n = " + std::to_string(p.n) + ", need n <= 10N - 1 = " +
                                           std::to_string(10 * p.N - 1)));
  f.assumptions = {"an elliptic surface with a section, chi(O) = N, Picard number n + 1 and an I_n fibre exists",
                   "Fbar is primitive in H^2(X - P, Z)"};
  f.expected = {12 * p.N - 3 - p.n, {}};
  return f;
}

inline FamilyBuild build_cp2_one(const Cp2OneParams& p) {
  detail::require(p.s >= 1, "cp2_one: s must be >= 1");
  detail::require_multiplicities(p.m, static_cast<std::size_t>(p.s), "cp2_one");

  auto lattice = cp2_blowup_lattice(1);
  auto basis = std::vector<LatticeGenerator>{{"L-E1", lattice.make({1, -1})}, {"L", lattice.make({1, 0})}};
  auto conic = lattice.make({2, -1});
  auto cs = as_smooth(std::move(lattice), basis);

  FamilyBuild f{make_orbifold(std::move(cs), detail::labelled("C", std::vector<DivisorClass>(p.m.size(), conic), p.m, 0)),
                ChernTarget::pinned(1, 1, "L-coefficient 1"), {}, {}, {}};
  f.preconditions.push_back(make_check("precondition.s", p.s >= 3, "s = " + std::to_string(p.s) + ", need >= 3"));
  f.preconditions.push_back(detail::coprime_check("precondition.pairwise_coprime", p.m));
  f.preconditions.push_back(
      detail::positive_check("precondition.negativity", detail::deficit_sum(p.m) - Rational(2), "sum(1 - 1/m_i) - 2"));
  f.assumptions = {"the conics are general members of |2L - E| through the blown-up point"};
  f.expected = {1, {}};
  return f;
}

namespace detail {

inline FamilyBuild build_cp2_conics(int points, const std::vector<Integer>& m, std::vector<DivisorClass> (*classes)(
                                                                                   const SurfaceModel&),
                                    const std::string& who, int expected_rank) {
  require_multiplicities(m, 3, who);
  auto cs = cp2_blowup_model(points);
  auto conics = classes(cs.base);
  FamilyBuild f{make_orbifold(std::move(cs), labelled("C", conics, m, 0)),
                ChernTarget::any_primitive_ample("primitive class with c_1(M) ample"), {}, {}, {}};
  f.preconditions.push_back(coprime_check("precondition.pairwise_coprime", m));
  f.preconditions.push_back(pair_sums_check(m));
  f.assumptions = {"the conics are general members of their classes, meeting transversally"};
  f.expected = {expected_rank, {}};
  return f;
}

}  // namespace detail

/// Conics 2L - E1, 2L - E2, 2L - E1 - E2 on CP^2 # 2 CP^2bar.
inline FamilyBuild build_cp2_two(const Cp2TwoParams& p) {
  return detail::build_cp2_conics(
      2, p.m,
      [](const SurfaceModel& s) {
        return std::vector<DivisorClass>{s.make({2, -1, 0}), s.make({2, 0, -1}), s.make({2, -1, -1})};
      },
      "cp2_two", 2);
}

/// Conics 2L - E1 - E2, 2L - E2 - E3, 2L - E1 - E3 on CP^2 # 3 CP^2bar.
inline FamilyBuild build_cp2_three(const Cp2ThreeParams& p) {
  return detail::build_cp2_conics(
      3, p.m,
      [](const SurfaceModel& s) {
        return std::vector<DivisorClass>{s.make({2, -1, -1, 0}), s.make({2, 0, -1, -1}), s.make({2, -1, 0, -1})};
      },
      "cp2_three", 3);
}

inline FamilyBuild build(const FamilyParams& params) {
  return std::visit(
      [](const auto& p) -> FamilyBuild {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, HirzebruchParams>) return build_hirzebruch(p);
        else if constexpr (std::is_same_v<T, CubicParams>) return build_cubic(p);
        else if constexpr (std::is_same_v<T, EllipticParams>) return build_elliptic(p);
        else if constexpr (std::is_same_v<T, Cp2OneParams>) return build_cp2_one(p);
        else if constexpr (std::is_same_v<T, Cp2TwoParams>) return build_cp2_two(p);
        else return build_cp2_three(p);
      },
      params);
}

struct Construction {
  FamilyParams params;
  FamilyBuild build;
  Certificate certificate;
};

/// Full pipeline: build, solve the Seifert data, certify.
inline Construction construct(const FamilyParams& params) {
  auto f = build(params);
  auto solved = solve_seifert(f.orbifold, f.target);
  auto cert = certify(f.orbifold, solved.data, f.target, f.preconditions, f.assumptions, solved.reason);
  cert.family = family_name(params);
  return {params, std::move(f), std::move(cert)};
}

// ---------------------------------------------------------------------------
// Search

/// Increasing tuples of length s with entries >= 2 and product <= bound that
/// satisfy the filter, ordered by (product, lexicographic).
inline std::vector<std::vector<Integer>> candidate_tuples(int s, long long bound,
                                                         const std::function<bool(long long)>& entry_ok,
                                                         bool pairwise = true) {
  std::vector<std::pair<long long, std::vector<long long>>> found;
  std::vector<long long> cur;
  std::function<void(long long, long long)> rec = [&](long long start, long long prod) {
    if (static_cast<int>(cur.size()) == s) {
      found.emplace_back(prod, cur);
      return;
    }
    for (long long v = start; prod * v <= bound; ++v) {
      if (!entry_ok(v)) continue;
      bool ok = true;
      if (pairwise)
        for (long long w : cur) ok = ok && std::gcd(v, w) == 1;
      if (!ok) continue;
      cur.push_back(v);
      rec(v + 1, prod * v);
      cur.pop_back();
    }
  };
  rec(2, 1);
  std::sort(found.begin(), found.end());
  std::vector<std::vector<Integer>> out;
  for (const auto& [prod, t] : found) out.emplace_back(t.begin(), t.end());
  return out;
}

struct SearchResult {
  std::optional<Construction> construction;
  std::string reason;  // NOT_COVERED explanation when empty-handed

  bool covered() const { return construction.has_value(); }
};

namespace detail {

inline constexpr long long kTupleProductBound = 5000;
inline constexpr std::size_t kMaxAttempts = 2000;

/// Constructs candidates in order and keeps the first verified one.
class FirstVerified {
 public:
  bool offer(const FamilyParams& p) {
    if (done()) return true;
    ++attempts_;
    auto c = construct(p);
    if (c.certificate.verified()) result_ = std::move(c);
    return result_.has_value();
  }
  bool done() const { return result_.has_value() || attempts_ >= kMaxAttempts; }
  std::optional<Construction> take() { return std::move(result_); }

 private:
  std::optional<Construction> result_;
  std::size_t attempts_ = 0;
};

}  // namespace detail

/// Elliptic parameters for k >= 4: least N >= 3 with 2N - 2 <= k <= 12N - 4.
inline EllipticParams elliptic_for_rank(int k) {
  if (k < 4) throw InvalidInput("elliptic_for_rank: k must be >= 4");
  int N = 3;
  while (k > 12 * N - 4) ++N;
  return {N, 12 * N - 3 - k};
}

inline SearchResult search_connected_sum(int k) {
  if (k < 1) throw InvalidInput("search_connected_sum: k must be >= 1");
  detail::FirstVerified first;
  if (k >= 4) {
    first.offer(elliptic_for_rank(k));
  } else {
    for (auto& t : candidate_tuples(3, detail::kTupleProductBound, [](long long) { return true; })) {
      bool done = k == 1 ? first.offer(Cp2OneParams{3, t})
                         : k == 2 ? first.offer(Cp2TwoParams{t}) : first.offer(Cp2ThreeParams{t});
      if (done) break;
    }
  }
  SearchResult r;
  r.construction = first.take();
  if (!r.construction) r.reason = "no verified construction among the enumerated parameters";
  return r;
}

/// Z_2^{2n} through the Hirzebruch family, Z_m^2 (7 not dividing m) through
/// the cubic family; everything else is NOT_COVERED.
inline SearchResult search_torsion(const TorsionGroup& target) {
  SearchResult r;
  const std::string scope = "NOT_COVERED: only Z_2^{2n} and Z_m^2 are realised by the implemented families";
  auto h = target.homogeneous();
  if (!h || h->second % 2 != 0) {
    r.reason = scope;
    return r;
  }
  const Integer m = h->first;
  const int e = h->second;
  detail::FirstVerified first;
  if (m == 2) {
    const long long n = e / 2;
    auto entry_ok = [n](long long v) { return v % 2 == 1 && std::gcd(v, n) == 1; };
    for (int s = 2; s <= 4 && !first.done(); ++s)
      for (auto& t : candidate_tuples(s, detail::kTupleProductBound, entry_ok))
        if (first.offer(HirzebruchParams{static_cast<int>(n), s, t})) break;
  } else if (e == 2) {
    if (m % 7 == 0) {
      r.reason = "NOT_COVERED: the cubic family needs gcd(m, 7) = 1";
      return r;
    }
    auto entry_ok = [&m](long long v) { return std::gcd(v, 21LL) == 1 && gcd(Integer(v), m) == 1; };
    for (int s = 2; s <= 4 && !first.done(); ++s)
      for (auto& t : candidate_tuples(s, detail::kTupleProductBound, entry_ok))
        if (first.offer(CubicParams{m, s, t})) break;
  } else {
    r.reason = scope;
    return r;
  }
  r.construction = first.take();
  if (!r.construction) r.reason = "NOT_COVERED: no verified parameters within the search bounds";
  return r;
}

}  // namespace sasaki
