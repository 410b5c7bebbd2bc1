#include "sasaki/orbifold.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sasaki;

namespace {

Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

OrbifoldSurface hirzebruch_branch(int n, std::vector<long long> ms) {
  auto cs = hirzebruch_model(n);
  auto C = cs.base.make({1, 0});
  auto E0 = cs.base.make({0, 1});
  std::vector<BranchComponent> b{{"D", C + q(2) * E0, 2, n}};
  for (std::size_t i = 0; i < ms.size(); ++i) b.push_back({"D" + std::to_string(i + 1), E0, ms[i], 0});
  return make_orbifold(std::move(cs), std::move(b));
}

OrbifoldSurface cubic_branch(long long m, std::vector<long long> ms) {
  auto cs = cubic_tangent_model();
  std::vector<BranchComponent> b{{"C", cs.base.curve("Ccheck").cls, m, 1}};
  for (std::size_t i = 0; i < ms.size(); ++i) b.push_back({"L" + std::to_string(i + 1), cs.base.curve("Lgen").cls, ms[i], 0});
  return make_orbifold(std::move(cs), std::move(b));
}

Rational deficit(const std::vector<long long>& ms) {
  Rational s(0);
  for (auto m : ms) s += q(1) - q(1, m);
  return s;
}

}  // namespace

TEST(MakeOrbifold, RejectsBadComponents) {
  auto cs = cp2_blowup_model(1);
  EXPECT_THROW(make_orbifold(cs, {{"C", cs.base.make({2, -1}), 1, 0}}), std::invalid_argument);
  EXPECT_THROW(make_orbifold(cs, {{"C", cs.base.make({2, -1}), 3, 1}}), std::invalid_argument);
  auto other = cp2_blowup_model(2);
  EXPECT_THROW(make_orbifold(cs, {{"C", other.base.make({2, -1, 0}), 3, 0}}), std::invalid_argument);
}

TEST(Validate, HirzebruchPasses) {
  auto rep = validate(hirzebruch_branch(3, {5, 7}));
  EXPECT_TRUE(rep.ok());
  EXPECT_TRUE(rep.warnings.empty());
  ASSERT_NE(find_check(rep.checks, "validate.coprimality"), nullptr);
}

TEST(Validate, MeetingComponentsMustBeCoprime) {
  auto cs = cp2_blowup_model(3);
  auto a = cs.base.make({2, -1, -1, 0});
  auto b = cs.base.make({2, 0, -1, -1});
  auto bad = validate(make_orbifold(cs, {{"C1", a, 3, 0}, {"C2", b, 3, 0}}));
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(find_check(bad.checks, "validate.coprimality")->status, CheckStatus::Fail);
  auto good = validate(make_orbifold(cs, {{"C1", a, 3, 0}, {"C2", b, 4, 0}}));
  EXPECT_TRUE(good.ok());
}

TEST(Validate, DisjointOverrideSkipsCoprimality) {
  auto cs = cp2_blowup_model(3);
  auto a = cs.base.make({2, -1, -1, 0});
  auto b = cs.base.make({2, 0, -1, -1});
  auto rep = validate(make_orbifold(cs, {{"C1", a, 3, 0}, {"C2", b, 3, 0}}, {{"C2", "C1"}}));
  EXPECT_TRUE(rep.ok());
}

TEST(Validate, MiddleOfChainIsNotOrbismooth) {
  // D meets E2 of a (-2,-2,-2) chain.
  auto m = lattice_model("mid", {"D", "E1", "E2", "E3"},
                         {{-2, 0, 1, 0}, {0, -2, 1, 0}, {1, 1, -2, 1}, {0, 0, 1, -2}});
  auto cs = contract(m, {{"p", {"E1", "E2", "E3"}}}, {{"D", m.unit(0)}}, {});
  auto rep = validate(make_orbifold(cs, {{"D", m.unit(0), 3, 0}}));
  EXPECT_EQ(find_check(rep.checks, "validate.orbismooth")->status, CheckStatus::Fail);
}

TEST(Validate, TwoComponentsThroughPointWarn) {
  auto o = cubic_branch(2, {5, 11});
  auto rep = validate(o);
  EXPECT_TRUE(rep.ok());
  const Check* q2 = find_check(rep.checks, "validate.isotropy_single.q2");
  ASSERT_NE(q2, nullptr);
  EXPECT_EQ(q2->status, CheckStatus::Warn);
  EXPECT_EQ(rep.warnings.size(), 1u);
  EXPECT_EQ(find_check(rep.checks, "validate.isotropy_single.q1")->status, CheckStatus::Pass);
}

// The generic lines cross the contracted tangent line, so they pass through q2.
TEST(PointMultiplicity, CubicPoints) {
  auto o = cubic_branch(2, {5, 11});
  EXPECT_EQ(point_multiplicity(o, chain_singularity(o.contracted, "q1")), 3 * 2);
  EXPECT_EQ(point_multiplicity(o, chain_singularity(o.contracted, "q2")), 2 * 2 * 5 * 11);
}

TEST(CanonicalOrb, HirzebruchFormula) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<long long> ms{3, 5, 7};
    auto k = canonical_orb(hirzebruch_branch(n, ms));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], q(-3, 2) + q(n) * deficit(ms)) << n;
  }
}

TEST(CanonicalOrb, CubicFormula) {
  for (long long m : {2, 3, 4, 5}) {
    std::vector<long long> ms{5, 11};
    auto k = canonical_orb(cubic_branch(m, ms));
    EXPECT_EQ(k[0], q(-6) + q(7) * (q(1) - q(1, m)) + q(3) * deficit(ms));
  }
}

TEST(CanonicalOrb, EllipticHasNoBranch) {
  for (int N = 2; N <= 5; ++N) {
    auto k = canonical_orb(make_orbifold(elliptic_model(N, 7), {}));
    EXPECT_EQ(k, RVector{q(N - 2)});
  }
}

TEST(OrbEulerCurve, Examples) {
  auto cubic = cubic_tangent_model();
  auto e = orb_euler_curve(cubic, cubic.base.curve("Ccheck").cls, 1);
  EXPECT_TRUE(e.orbismooth);
  EXPECT_EQ(e.value, q(1) - q(1, 3) + q(1) - q(1, 2));
  auto hz = hirzebruch_model(4);
  EXPECT_EQ(orb_euler_curve(hz, hz.base.curve("C").cls, 0).value, q(-2) + q(1) - q(1, 4));
}

TEST(CanonicalViaAdjunction, AgreesWithDirectExpression) {
  for (int n = 1; n <= 6; ++n) {
    auto cs = hirzebruch_model(n);
    auto a = canonical_via_adjunction(cs, cs.base.curve("C").cls, 0);
    EXPECT_EQ(a.coefficient, q(-(n + 2)));
    EXPECT_EQ(a.coefficient, express(cs, cs.base.canonical)[0]);
  }
  auto cubic = cubic_tangent_model();
  EXPECT_EQ(canonical_via_adjunction(cubic, cubic.base.curve("Ccheck").cls, 1).coefficient, q(-6));
  for (int N = 2; N <= 6; ++N)
    for (int n = 1; n <= 9; ++n) {
      auto cs = elliptic_model(N, n);
      auto a = canonical_via_adjunction(cs, cs.base.curve("F").cls, 1);
      const long long d = (N - 1) * n + 1;
      EXPECT_EQ(a.k_dot_curve, q(d - n - 1, d));
      EXPECT_EQ(a.coefficient, q(N - 2));
    }
}

TEST(CanonicalViaAdjunction, RequiresRankOne) {
  auto cs = cp2_blowup_model(2);
  EXPECT_THROW(canonical_via_adjunction(cs, cs.base.make({1, 0, 0}), 0), UnsupportedModel);
}

TEST(Ampleness, RankOneIsSignOfCoefficient) {
  auto cs = hirzebruch_model(2);
  EXPECT_TRUE(ampleness(cs, {q(1, 7)}).ample);
  EXPECT_FALSE(ampleness(cs, {q(0)}).ample);
  EXPECT_FALSE(ampleness(cs, {q(-1)}).ample);
}

TEST(Ampleness, ThreePointBlowupMatchesInequalities) {
  auto cs = cp2_blowup_model(3);
  int ample = 0;
  for (int a = -2; a <= 7; ++a)
    for (int c1 = -4; c1 <= 2; ++c1)
      for (int c2 = -4; c2 <= 2; ++c2)
        for (int c3 = -4; c3 <= 2; ++c3) {
          const int b1 = -c1, b2 = -c2, b3 = -c3;
          bool want = b1 > 0 && b2 > 0 && b3 > 0 && a > b1 + b2 && a > b2 + b3 && a > b1 + b3;
          bool got = ampleness(cs, {q(a), q(c1), q(c2), q(c3)}).ample;
          ASSERT_EQ(got, want) << a << " " << c1 << " " << c2 << " " << c3;
          ample += want;
        }
  EXPECT_GT(ample, 0);
}

TEST(Ampleness, OnePointBlowup) {
  auto cs = cp2_blowup_model(1);
  for (int a = -3; a <= 6; ++a)
    for (int b = -3; b <= 6; ++b)
      EXPECT_EQ(ampleness(cs, {q(a), q(-b)}).ample, b > 0 && a > b) << a << "," << b;
}

TEST(Ampleness, ZeroClassNeverAmple) {
  for (int k = 1; k <= 3; ++k) {
    auto cs = cp2_blowup_model(k);
    EXPECT_FALSE(ampleness(cs, RVector(cs.picard_rank(), q(0))).ample);
  }
}

TEST(Ampleness, MissingConeDataThrows) {
  auto m = lattice_model("nocone", {"A", "B"}, {{1, 0}, {0, -1}});
  m.cone.clear();
  auto cs = as_smooth(m);
  EXPECT_THROW(ampleness(cs, {q(1), q(0)}), UnsupportedModel);
}

TEST(SasakiSign, Examples) {
  EXPECT_EQ(sasaki_sign(hirzebruch_branch(1, {3, 5, 7})), Sign::Negative);
  EXPECT_EQ(sasaki_sign(make_orbifold(elliptic_model(2, 5), {})), Sign::IndefiniteOrNull);
  EXPECT_EQ(sasaki_sign(make_orbifold(elliptic_model(3, 5), {})), Sign::Negative);
  EXPECT_EQ(sasaki_sign(make_orbifold(cp2_blowup_model(3), {})), Sign::Positive);
  EXPECT_STREQ(to_string(Sign::IndefiniteOrNull), "INDEFINITE_OR_NULL");
}

TEST(CanonicalOrbProperty, AddingAComponentAddsItsWeight) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> mult(2, 30);
  auto cs = cp2_blowup_model(3);
  const std::vector<DivisorClass> pool{cs.base.make({2, -1, -1, 0}), cs.base.make({2, 0, -1, -1}),
                                       cs.base.make({1, 0, 0, 0}), cs.base.make({1, -1, 0, 0})};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
  for (int t = 0; t < 100; ++t) {
    std::vector<BranchComponent> b;
    for (int i = 0; i < 2; ++i) b.push_back({"B" + std::to_string(i), pool[pick(rng)], mult(rng), 0});
    auto before = canonical_orb(make_orbifold(cs, b));
    BranchComponent extra{"X", pool[pick(rng)], mult(rng), 0};
    b.push_back(extra);
    auto after = canonical_orb(make_orbifold(cs, b));
    auto d = express(cs, extra.cls);
    for (std::size_t i = 0; i < after.size(); ++i)
      ASSERT_EQ(after[i], before[i] + (q(1) - Rational(Integer(1), extra.m)) * d[i]);
  }
}

TEST(CanonicalOrbProperty, RaisingMultiplicityRaisesCoefficient) {
  for (long long m = 3; m < 60; m += 2) {
    auto lo = canonical_orb(hirzebruch_branch(2, {m}))[0];
    auto hi = canonical_orb(hirzebruch_branch(2, {m + 2}))[0];
    ASSERT_LT(lo, hi);
  }
}
