#pragma once

// Divisor lattices of smooth surfaces, contraction of curve chains to cyclic
// quotient singularities, and rational intersection theory on the contracted
// surface through pull-back.
//
// A class on a contracted surface is always represented by its pull-back to
// the resolved model: a rational vector orthogonal to every contracted curve.

#include "sasaki/arith.hpp"
#include "sasaki/linalg.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sasaki {

struct NotASmoothCurveClass : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisorClass {
  std::string surface;
  RVector coords;

  std::size_t size() const { return coords.size(); }

  bool is_integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c.is_integer(); });
  }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c.is_zero(); });
  }

  DivisorClass& operator+=(const DivisorClass& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  DivisorClass& operator*=(const Rational& s) {
    for (auto& c : coords) c *= s;
    return *this;
  }

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  void check_same(const DivisorClass& o) const {
    if (surface != o.surface || coords.size() != o.coords.size())
      throw std::invalid_argument("divisor classes live on different surfaces: " + surface + " vs " + o.surface);
  }
};

struct NamedCurve {
  std::string label;
  DivisorClass cls;
  std::optional<int> genus;
};

struct ConeRay {
  std::string label;
  DivisorClass cls;
};

/// Smooth surface: a named lattice basis with its intersection form.
struct SurfaceModel {
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::vector<Integer>> gram;
  DivisorClass canonical;
  std::vector<NamedCurve> curves;
  std::vector<ConeRay> cone;  // effective cone rays used for ampleness
  bool simply_connected = true;
  int b2 = 0;  // full second Betti number; may exceed the modelled rank

  std::size_t rank() const { return basis.size(); }

  DivisorClass zero() const { return {name, RVector(rank())}; }

  DivisorClass make(const RVector& coords) const {
    if (coords.size() != rank()) throw std::invalid_argument("class has wrong length for " + name);
    return {name, coords};
  }
  DivisorClass make(std::initializer_list<long long> coords) const {
    RVector v;
    for (long long c : coords) v.emplace_back(c);
    return make(v);
  }
  DivisorClass unit(std::size_t i) const {
    auto d = zero();
    d.coords.at(i) = 1;
    return d;
  }

  const NamedCurve* find_curve(std::string_view label) const {
    for (const auto& c : curves)
      if (c.label == label) return &c;
    return nullptr;
  }
  const NamedCurve& curve(std::string_view label) const {
    if (auto* c = find_curve(label)) return *c;
    throw std::invalid_argument("unknown curve '" + std::string(label) + "' on " + name);
  }
  void add_curve(std::string label, DivisorClass cls, std::optional<int> genus = std::nullopt) {
    curves.push_back({std::move(label), std::move(cls), genus});
  }
};

inline Rational intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b) {
  if (a.surface != model.name || b.surface != model.name)
    throw std::invalid_argument("intersect: class does not belong to " + model.name);
  if (a.size() != model.rank() || b.size() != model.rank())
    throw std::invalid_argument("intersect: class length differs from lattice rank");
  Rational s;
  for (std::size_t i = 0; i < model.rank(); ++i) {
    if (a.coords[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < model.rank(); ++j) {
      if (b.coords[j].is_zero() || model.gram[i][j] == 0) continue;
      row += Rational(model.gram[i][j]) * b.coords[j];
    }
    s += a.coords[i] * row;
  }
  return s;
}

/// Genus from adjunction: D^2 + K.D = 2g - 2.
inline int genus_smooth(const SurfaceModel& model, const DivisorClass& d) {
  Rational twice = intersect(model, d, d) + intersect(model, model.canonical, d);
  if (!twice.is_integer() || twice.numerator() % 2 != 0)
    throw NotASmoothCurveClass("D^2 + K.D = " + twice.str() + " is not an even integer");
  Integer g = twice.numerator() / 2 + 1;
  if (g < 0) throw NotASmoothCurveClass("adjunction gives negative genus " + g.str());
  return static_cast<int>(g);
}

/// Throws std::invalid_argument when the model is malformed or a declared genus
/// disagrees with adjunction.
inline void validate_model(const SurfaceModel& model) {
  const std::size_t n = model.rank();
  if (n == 0) throw std::invalid_argument(model.name + ": empty basis");
  if (model.gram.size() != n) throw std::invalid_argument(model.name + ": gram has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (model.gram[i].size() != n) throw std::invalid_argument(model.name + ": gram is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (model.gram[i][j] != model.gram[j][i]) throw std::invalid_argument(model.name + ": gram is not symmetric");
  }
  if (model.canonical.surface != model.name || model.canonical.size() != n)
    throw std::invalid_argument(model.name + ": canonical class has wrong shape");
  if (model.b2 < static_cast<int>(n)) throw std::invalid_argument(model.name + ": b2 below lattice rank");
  for (const auto& c : model.curves) {
    if (c.cls.surface != model.name || c.cls.size() != n)
      throw std::invalid_argument(model.name + ": curve " + c.label + " has wrong shape");
    if (!c.genus) continue;
    int g = 0;
    try {
      g = genus_smooth(model, c.cls);
    } catch (const NotASmoothCurveClass& e) {
      throw std::invalid_argument(model.name + ": curve " + c.label + ": " + e.what());
    }
    if (g != *c.genus)
      throw std::invalid_argument(model.name + ": curve " + c.label + " declared genus " + std::to_string(*c.genus) +
                                  " but adjunction gives " + std::to_string(g));
  }
  for (const auto& r : model.cone)
    if (r.cls.surface != model.name || r.cls.size() != n)
      throw std::invalid_argument(model.name + ": cone ray " + r.label + " has wrong shape");
}

// ---------------------------------------------------------------------------
// Contraction

struct SingularPoint {
  std::string label;
  std::vector<std::string> chain;  // E_1, ..., E_l
  Integer d = 1;
  Integer r = 1;
  Integer r_reverse = 1;

  /// A lone (-1)-curve contracts to a smooth point.
  bool smooth() const { return d == 1; }
};

struct LatticeGenerator {
  std::string label;
  DivisorClass cls;
};

struct ContractedSurface {
  SurfaceModel base;
  std::vector<SingularPoint> points;
  std::vector<LatticeGenerator> h2_minus_P;  // pulled back; declared generators of H^2(X - P, Z)
  std::vector<LatticeGenerator> h2_X;        // integral, orthogonal to chains; generators of H^2(X, Z)

  std::size_t contracted_curve_count() const {
    std::size_t n = 0;
    for (const auto& p : points) n += p.chain.size();
    return n;
  }
  int b2() const { return base.b2 - static_cast<int>(contracted_curve_count()); }
  std::size_t picard_rank() const { return h2_minus_P.size(); }
};

inline RMatrix chain_gram(const SurfaceModel& model, const std::vector<std::string>& chain) {
  RMatrix g(chain.size(), RVector(chain.size()));
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j)
      g[i][j] = intersect(model, model.curve(chain[i]).cls, model.curve(chain[j]).cls);
  return g;
}

namespace detail {

inline SingularPoint analyse_chain(const SurfaceModel& model, std::string label, std::vector<std::string> chain) {
  if (chain.empty()) throw std::invalid_argument("chain " + label + " is empty");
  RMatrix g = chain_gram(model, chain);
  const std::size_t l = chain.size();
  std::vector<Integer> entries;
  for (std::size_t i = 0; i < l; ++i) {
    const Rational& self = g[i][i];
    if (!self.is_integer()) throw std::invalid_argument("chain " + label + ": non-integral self-intersection");
    entries.push_back(-self.numerator());
    for (std::size_t j = i + 1; j < l; ++j) {
      Rational want = (j == i + 1) ? Rational(1) : Rational(0);
      if (g[i][j] != want)
        throw std::invalid_argument("chain " + label + ": " + chain[i] + "." + chain[j] + " = " + g[i][j].str() +
                                    ", expected " + want.str());
    }
  }
  SingularPoint p{std::move(label), std::move(chain)};
  if (l == 1 && entries[0] == 1) {
    p.d = 1;
    p.r = 1;
    p.r_reverse = 1;
  } else {
    for (const auto& b : entries)
      if (b < 2) throw std::invalid_argument("chain " + p.label + ": self-intersection must be <= -2");
    auto [d, r] = hj_value(entries);
    p.d = d;
    p.r = r;
    std::vector<Integer> rev(entries.rbegin(), entries.rend());
    p.r_reverse = hj_value(rev).second;
  }
  if (!negative_definite(g)) throw std::invalid_argument("chain " + p.label + ": Gram matrix not negative definite");
  return p;
}

}  // namespace detail

/// Pull-back D + sum x_j E_j, with x solving E_j . (D + sum x_k E_k) = 0 on every chain.
inline DivisorClass pullback(const ContractedSurface& cs, const DivisorClass& d) {
  const auto& model = cs.base;
  DivisorClass out = d;
  for (const auto& p : cs.points) {
    RMatrix g = chain_gram(model, p.chain);
    RVector rhs(p.chain.size());
    bool any = false;
    for (std::size_t j = 0; j < p.chain.size(); ++j) {
      rhs[j] = -intersect(model, model.curve(p.chain[j]).cls, d);
      any = any || !rhs[j].is_zero();
    }
    if (!any) continue;
    RVector x = solve_linear(std::move(g), std::move(rhs));
    for (std::size_t j = 0; j < p.chain.size(); ++j)
      if (!x[j].is_zero()) out += x[j] * model.curve(p.chain[j]).cls;
  }
  return out;
}

inline Rational push_intersect(const ContractedSurface& cs, const DivisorClass& a, const DivisorClass& b) {
  return intersect(cs.base, pullback(cs, a), b.surface == cs.base.name ? pullback(cs, b) : b);
}

/// K of the resolved model paired with the pull-back; discrepancy terms vanish.
inline Rational canonical_intersect(const ContractedSurface& cs, const DivisorClass& d) {
  return intersect(cs.base, cs.base.canonical, pullback(cs, d));
}

inline const SingularPoint& chain_singularity(const ContractedSurface& cs, std::string_view label) {
  for (const auto& p : cs.points)
    if (p.label == label) return p;
  throw std::invalid_argument("unknown singular point '" + std::string(label) + "'");
}

enum class ChainPosition { None, Head, Tail, Other };

inline const char* to_string(ChainPosition p) {
  switch (p) {
    case ChainPosition::None: return "none";
    case ChainPosition::Head: return "head";
    case ChainPosition::Tail: return "tail";
    case ChainPosition::Other: return "other";
  }
  return "?";
}

struct ChainIncidence {
  std::string point;
  RVector pairings;  // D . E_j
  ChainPosition position = ChainPosition::None;
  Rational transversal_count;
  bool orbismooth = true;

  bool meets() const { return position != ChainPosition::None; }
};

inline std::vector<ChainIncidence> incidence(const ContractedSurface& cs, const DivisorClass& d) {
  std::vector<ChainIncidence> out;
  for (const auto& p : cs.points) {
    ChainIncidence inc{p.label, {}, ChainPosition::None, 0, true};
    std::size_t nonzero = 0, where = 0;
    for (std::size_t j = 0; j < p.chain.size(); ++j) {
      inc.pairings.push_back(intersect(cs.base, d, cs.base.curve(p.chain[j]).cls));
      inc.transversal_count += inc.pairings.back();
      if (!inc.pairings.back().is_zero()) {
        ++nonzero;
        where = j;
      }
    }
    if (nonzero > 0) {
      bool once = nonzero == 1 && inc.pairings[where] == 1;
      if (once && where == 0)
        inc.position = ChainPosition::Head;
      else if (once && where + 1 == p.chain.size())
        inc.position = ChainPosition::Tail;
      else
        inc.position = ChainPosition::Other;
      inc.orbismooth = inc.position != ChainPosition::Other;
    }
    out.push_back(std::move(inc));
  }
  return out;
}

inline RMatrix h2_gram(const ContractedSurface& cs) {
  const auto& g = cs.h2_minus_P;
  RMatrix m(g.size(), RVector(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m[i][j] = intersect(cs.base, g[i].cls, g[j].cls);
  return m;
}

/// Coordinates of the pushed-down class in the declared H^2(X - P) basis.
inline RVector express(const ContractedSurface& cs, const DivisorClass& d) {
  DivisorClass pd = pullback(cs, d);
  RVector rhs;
  for (const auto& g : cs.h2_minus_P) rhs.push_back(intersect(cs.base, g.cls, pd));
  return solve_linear(h2_gram(cs), std::move(rhs));
}

/// Pull-back class of sum y_i g_i.
inline DivisorClass from_coords(const ContractedSurface& cs, const RVector& y) {
  if (y.size() != cs.h2_minus_P.size()) throw std::invalid_argument("from_coords: wrong coordinate count");
  DivisorClass out = cs.base.zero();
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!y[i].is_zero()) out += y[i] * cs.h2_minus_P[i].cls;
  return out;
}

/// Builds a contracted surface and checks every structural invariant.
inline ContractedSurface contract(SurfaceModel base,
                                  const std::vector<std::pair<std::string, std::vector<std::string>>>& chains,
                                  const std::vector<LatticeGenerator>& h2_minus_P,
                                  const std::vector<LatticeGenerator>& h2_X) {
  validate_model(base);
  ContractedSurface cs{std::move(base), {}, {}, {}};
  for (const auto& [label, chain] : chains) cs.points.push_back(detail::analyse_chain(cs.base, label, chain));

  for (std::size_t a = 0; a < cs.points.size(); ++a)
    for (std::size_t b = a + 1; b < cs.points.size(); ++b)
      for (const auto& ea : cs.points[a].chain)
        for (const auto& eb : cs.points[b].chain)
          if (ea == eb || !intersect(cs.base, cs.base.curve(ea).cls, cs.base.curve(eb).cls).is_zero())
            throw std::invalid_argument("chains " + cs.points[a].label + " and " + cs.points[b].label +
                                        " are not disjoint");

  for (const auto& g : h2_minus_P) cs.h2_minus_P.push_back({g.label, pullback(cs, g.cls)});
  const auto algebraic_rank = static_cast<long>(cs.base.rank()) - static_cast<long>(cs.contracted_curve_count());
  if (static_cast<long>(cs.h2_minus_P.size()) != algebraic_rank)
    throw std::invalid_argument(cs.base.name + ": H^2(X-P) basis has " + std::to_string(cs.h2_minus_P.size()) +
                                " generators, expected " + std::to_string(algebraic_rank));
  try {
    (void)solve_linear(h2_gram(cs), RVector(cs.h2_minus_P.size()));
  } catch (const std::domain_error&) {
    throw std::invalid_argument(cs.base.name + ": H^2(X-P) basis is degenerate");
  }

  for (const auto& g : h2_X) {
    if (!g.cls.is_integral()) throw std::invalid_argument("H^2(X) generator " + g.label + " is not integral");
    for (const auto& p : cs.points)
      for (const auto& e : p.chain)
        if (!intersect(cs.base, g.cls, cs.base.curve(e).cls).is_zero())
          throw std::invalid_argument("H^2(X) generator " + g.label + " meets contracted curve " + e);
    cs.h2_X.push_back(g);
  }
  return cs;
}

/// Smooth model viewed as a contraction with no chains.
inline ContractedSurface as_smooth(SurfaceModel base, std::vector<LatticeGenerator> h2_basis = {}) {
  if (h2_basis.empty())
    for (std::size_t i = 0; i < base.rank(); ++i) h2_basis.push_back({base.basis[i], base.unit(i)});
  std::vector<LatticeGenerator> h2_X;
  for (std::size_t i = 0; i < base.rank(); ++i) h2_X.push_back({base.basis[i], base.unit(i)});
  return contract(std::move(base), {}, h2_basis, h2_X);
}

/// Primitive integral vector spanning the orthogonal complement of the chains,
/// for contractions whose algebraic part has rank one.
inline DivisorClass primitive_orthogonal_generator(const ContractedSurface& cs) {
  if (cs.picard_rank() != 1) throw std::invalid_argument("primitive_orthogonal_generator: rank is not one");
  DivisorClass v = cs.h2_minus_P.front().cls;
  Integer den = 1;
  for (const auto& c : v.coords) den = lcm(den, c.denominator());
  Integer content = 0;
  for (const auto& c : v.coords) content = gcd(content, (c * Rational(den)).numerator());
  Rational scale(den, content);
  return scale * v;
}

// ---------------------------------------------------------------------------
// Builders

namespace detail {

inline SurfaceModel blank_model(std::string name, std::vector<std::string> basis) {
  SurfaceModel m;
  m.name = std::move(name);
  m.basis = std::move(basis);
  m.gram.assign(m.rank(), std::vector<Integer>(m.rank(), 0));
  m.canonical = m.zero();
  m.b2 = static_cast<int>(m.rank());
  return m;
}

}  // namespace detail

/// Bare lattice with every basis element registered as a curve and K = 0.
inline SurfaceModel lattice_model(std::string name, std::vector<std::string> basis,
                                  std::vector<std::vector<Integer>> gram) {
  auto m = detail::blank_model(std::move(name), std::move(basis));
  m.gram = std::move(gram);
  for (std::size_t i = 0; i < m.rank(); ++i) m.add_curve(m.basis[i], m.unit(i));
  validate_model(m);
  return m;
}

/// F_n in the basis (C, E0): C^2 = 0, C.E0 = 1, E0^2 = n, with the section
/// at infinity E_inf = E0 - nC contracted to a point of order n.
inline ContractedSurface hirzebruch_model(int n) {
  if (n < 1) throw std::invalid_argument("hirzebruch_model: n must be >= 1");
  auto m = detail::blank_model("F_" + std::to_string(n), {"C", "E0"});
  m.gram = {{0, 1}, {1, n}};
  m.canonical = m.make({n - 2, -2});
  m.add_curve("C", m.make({1, 0}), 0);
  m.add_curve("E0", m.make({0, 1}), 0);
  m.add_curve("Einf", m.make({-n, 1}), 0);
  m.cone = {{"C", m.make({1, 0})}, {"Einf", m.make({-n, 1})}};
  auto C = m.make({1, 0});
  auto E0 = m.make({0, 1});
  return contract(std::move(m), {{"p", {"Einf"}}}, {{"Cbar", C}}, {{"E0", E0}});
}

enum class BlowupPreset {
  General,                // distinct non-collinear points
  InfinitelyNearTangent,  // three infinitely near points along a tangent line
};

/// CP^2 blown up in 1..3 points; basis (L, E1, ...), L^2 = 1, Ei^2 = -1.
inline SurfaceModel cp2_blowup_lattice(int points, BlowupPreset preset = BlowupPreset::General) {
  if (points < 1 || points > 3) throw std::invalid_argument("cp2_blowup_model: 1 to 3 points supported");
  std::vector<std::string> basis{"L"};
  for (int i = 1; i <= points; ++i) basis.push_back("E" + std::to_string(i));
  auto m = detail::blank_model("CP2#" + std::to_string(points) + "CP2bar" +
                                   (preset == BlowupPreset::General ? "" : "_tangent"),
                               basis);
  m.gram[0][0] = 1;
  for (int i = 1; i <= points; ++i) m.gram[i][i] = -1;
  m.canonical = m.zero();
  m.canonical.coords[0] = -3;
  for (int i = 1; i <= points; ++i) m.canonical.coords[i] = 1;
  m.add_curve("L", m.unit(0), 0);

  if (preset == BlowupPreset::General) {
    for (int i = 1; i <= points; ++i) {
      m.add_curve(basis[i], m.unit(i), 0);
      m.cone.push_back({basis[i], m.unit(i)});
    }
    if (points == 1) {
      auto fibre = m.unit(0) - m.unit(1);
      m.add_curve("L-E1", fibre, 0);
      m.cone.insert(m.cone.begin(), {"L-E1", fibre});
    }
    for (int i = 1; i <= points; ++i)
      for (int j = i + 1; j <= points; ++j) {
        auto line = m.unit(0) - m.unit(i) - m.unit(j);
        std::string label = "L-" + basis[i] + "-" + basis[j];
        m.add_curve(label, line, 0);
        m.cone.push_back({label, line});
      }
  }
  return m;
}

inline ContractedSurface cp2_blowup_model(int points, std::vector<LatticeGenerator> h2_basis = {}) {
  return as_smooth(cp2_blowup_lattice(points), std::move(h2_basis));
}

/// CP^2#3CP^2bar from a cubic and a line tangent to it, blown up three times
/// along the tangency. Contracts the (-2)-chain (A, B) to q1 (order 3) and the
/// (-2)-curve Lcheck to q2 (order 2).
inline ContractedSurface cubic_tangent_model() {
  auto m = cp2_blowup_lattice(3, BlowupPreset::InfinitelyNearTangent);
  m.name = "CP2#3CP2bar_cubic_tangent";
  auto cls = [&](long long l, long long e1, long long e2, long long e3) { return m.make({l, e1, e2, e3}); };
  m.canonical = cls(-3, 1, 1, 1);
  m.curves.clear();
  m.add_curve("Ccheck", cls(3, -1, -1, 0), 1);
  m.add_curve("Lcheck", cls(1, -1, -1, -1), 0);
  m.add_curve("A", cls(0, 0, 1, -1), 0);
  m.add_curve("B", cls(0, 1, -1, 0), 0);
  m.add_curve("E", cls(0, 0, 0, 1), 0);
  m.add_curve("Lgen", cls(1, 0, 0, 0), 0);
  auto e = cls(0, 0, 0, 1);
  auto x = cls(3, -1, -1, -1);  // Ccheck - E
  return contract(std::move(m), {{"q1", {"A", "B"}}, {"q2", {"Lcheck"}}}, {{"Ebar", e}}, {{"x", x}});
}

/// Neron-Severi sublattice of an elliptic surface with section O, chi = 12N,
/// and an I_n fibre; basis (O, Theta_1, ..., Theta_{n-1}, F). The chain
/// (O, Theta_0, ..., Theta_{n-2}) contracts to a point of order (N-1)n + 1.
inline ContractedSurface elliptic_model(int N, int n) {
  if (N < 1) throw std::invalid_argument("elliptic_model: N must be >= 1");
  if (n < 1) throw std::invalid_argument("elliptic_model: n must be >= 1");
  std::vector<std::string> basis{"O"};
  for (int i = 1; i < n; ++i) basis.push_back("Theta" + std::to_string(i));
  basis.push_back("F");
  auto m = detail::blank_model("Y_N" + std::to_string(N) + "_I" + std::to_string(n), basis);
  const std::size_t f = basis.size() - 1;
  m.gram[0][0] = -N;
  m.gram[0][f] = m.gram[f][0] = 1;
  for (int i = 1; i < n; ++i) {
    m.gram[i][i] = -2;
    if (i + 1 < n) m.gram[i][i + 1] = m.gram[i + 1][i] = 1;
  }
  m.b2 = 12 * N - 2;
  m.canonical = (N - 2) * m.unit(f);

  m.add_curve("O", m.unit(0), 0);
  DivisorClass theta0 = m.unit(f);
  for (int i = 1; i < n; ++i) theta0 -= m.unit(i);
  m.add_curve("Theta0", theta0, n == 1 ? 1 : 0);
  for (int i = 1; i < n; ++i) m.add_curve(basis[i], m.unit(i), 0);
  m.add_curve("F", m.unit(f), 1);

  std::vector<std::string> chain{"O"};
  for (int i = 0; i + 2 <= n; ++i) chain.push_back("Theta" + std::to_string(i));
  auto F = m.unit(f);
  auto cs = contract(std::move(m), {{"p", chain}}, {{"Fbar", F}}, {});
  cs.h2_X.push_back({"x", primitive_orthogonal_generator(cs)});
  return cs;
}

}  // namespace sasaki
