#include "sasaki/classify.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <set>

using namespace sasaki;

namespace {

TorsionGroup G(const std::string& s) { return *TorsionGroup::parse(s); }

// Every abelian group of order <= bound, one per isomorphism class.
std::vector<TorsionGroup> all_groups(long long bound) {
  // Partitions of a, as lists of parts.
  std::function<void(int, int, std::vector<int>&, std::vector<std::vector<int>>&)> parts =
      [&](int a, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
        if (a == 0) {
          out.push_back(cur);
          return;
        }
        for (int k = std::min(a, max); k >= 1; --k) {
          cur.push_back(k);
          parts(a - k, k, cur, out);
          cur.pop_back();
        }
      };
  std::vector<TorsionGroup> out;
  for (long long n = 1; n <= bound; ++n) {
    std::vector<std::vector<TorsionGroup::Factor>> choices{{}};
    for (const auto& [p, a] : factorize(n)) {
      std::vector<std::vector<int>> ps;
      std::vector<int> cur;
      parts(a, a, cur, ps);
      std::vector<std::vector<TorsionGroup::Factor>> next;
      for (const auto& base : choices)
        for (const auto& part : ps) {
          auto ext = base;
          for (int k : part) ext.emplace_back(boost::multiprecision::pow(p, static_cast<unsigned>(k)), 1);
          next.push_back(std::move(ext));
        }
      choices = std::move(next);
    }
    for (const auto& c : choices) out.push_back(TorsionGroup::from_summands(c));
  }
  return out;
}

// Groups generated straight from the admissible shape, before exceptions.
std::set<std::string> semiregular_shapes(long long bound) {
  std::set<std::string> out;
  const std::vector<int> degrees{3, 4, 5, 6};
  std::function<void(std::vector<TorsionGroup::Factor>&, long long, std::size_t, long long)> rec =
      [&](std::vector<TorsionGroup::Factor>& cur, long long order, std::size_t from_deg, long long used) {
        if (!cur.empty()) out.insert(TorsionGroup::from_summands(cur).str());
        for (std::size_t di = from_deg; di < degrees.size(); ++di) {
          const int d = degrees[di];
          const int e = (d - 1) * (d - 2);
          for (long long m = 2;; ++m) {
            long long pw = 1;
            bool over = false;
            for (int k = 0; k < e && !over; ++k) over = (pw *= m) * order > bound;
            if (over) break;
            if (std::gcd(m, static_cast<long long>(d)) != 1 || std::gcd(m, used) != 1) continue;
            cur.emplace_back(m, e);
            rec(cur, order * pw, di + 1, used * m);
            cur.pop_back();
          }
        }
      };
  std::vector<TorsionGroup::Factor> cur;
  rec(cur, 1, 0, 1);
  return out;
}

bool is_exception(const TorsionGroup& t) {
  auto h = t.homogeneous();
  if (!h) return false;
  return h->second == 2 || (h->first == 2 && h->second % 2 == 0) || (h->first == 3 && h->second == 6);
}

}  // namespace

TEST(Kollar, TableExamples) {
  EXPECT_TRUE(kollar_positive(TorsionGroup{}));
  EXPECT_TRUE(kollar_positive(G("Z_15^2")));
  EXPECT_FALSE(kollar_positive(G("Z_30^2")));
  EXPECT_FALSE(kollar_positive(G("Z_60^2")));
  EXPECT_TRUE(kollar_positive(G("Z_2^10")));
  EXPECT_FALSE(kollar_positive(G("Z_2^3")));
  EXPECT_TRUE(kollar_positive(G("Z_5^4")));
  EXPECT_TRUE(kollar_positive(G("Z_4^4")));
  EXPECT_TRUE(kollar_positive(G("Z_3^8")));
  EXPECT_FALSE(kollar_positive(G("Z_3^10")));
  EXPECT_FALSE(kollar_positive(G("Z_6^4")));
  EXPECT_FALSE(kollar_positive(G("Z_7^4")));
  EXPECT_FALSE(kollar_positive(G("Z_2^2 + Z_4^2")));
}

TEST(Kollar, ExhaustiveAgainstListedGroups) {
  std::set<std::string> listed{"0", "Z_5^4", "Z_4^4", "Z_3^4", "Z_3^6", "Z_3^8"};
  for (int n = 1; n <= 7; ++n) listed.insert(TorsionGroup::cyclic_power(2, 2 * n).str());
  for (long long m = 2; m <= 100; ++m)
    if (m % 30 != 0) listed.insert(TorsionGroup::cyclic_power(m, 2).str());
  for (const auto& g : all_groups(10000))
    ASSERT_EQ(kollar_positive(g), listed.count(g.str()) == 1) << g.str();
}

TEST(DegreeForExponent, Values) {
  EXPECT_EQ(*degree_for_exponent(2), 3);
  EXPECT_EQ(*degree_for_exponent(6), 4);
  EXPECT_EQ(*degree_for_exponent(12), 5);
  EXPECT_FALSE(degree_for_exponent(4).has_value());
  EXPECT_FALSE(degree_for_exponent(0).has_value());
}

TEST(Semiregular, Examples) {
  auto v = semiregular_admissible(G("Z_5^6"));
  EXPECT_TRUE(v.admissible);
  ASSERT_EQ(v.witness.size(), 1u);
  EXPECT_EQ(v.witness[0], std::make_pair(Integer(5), Integer(4)));
  EXPECT_FALSE(semiregular_admissible(G("Z_2^6")).admissible);  // d = 4 shares the factor 2, and Z_2^{2n}
  EXPECT_FALSE(semiregular_admissible(G("Z_3^6")).admissible);
  EXPECT_FALSE(semiregular_admissible(G("Z_5^2")).admissible);
  EXPECT_FALSE(semiregular_admissible(G("Z_5^5")).admissible);
  EXPECT_FALSE(semiregular_admissible(G("Z_2^2 + Z_4^2")).admissible);
  auto mixed = semiregular_admissible(G("Z_5^2 + Z_7^6"));
  EXPECT_TRUE(mixed.admissible);
  EXPECT_EQ(mixed.witness.size(), 2u);
  auto trivial = semiregular_admissible(TorsionGroup{});
  EXPECT_TRUE(trivial.admissible);
  EXPECT_TRUE(trivial.witness.empty());
}

TEST(Semiregular, ExhaustiveAgainstGeneratedShapes) {
  const long long bound = 100000;
  auto shapes = semiregular_shapes(bound);
  int admissible = 0;
  for (const auto& g : all_groups(bound)) {
    bool want = g.trivial() || (shapes.count(g.str()) == 1 && !is_exception(g));
    auto v = semiregular_admissible(g);
    ASSERT_EQ(v.admissible, want) << g.str();
    if (!v.admissible) continue;
    ++admissible;
    // The witness reassembles into the group and satisfies its own constraints.
    std::vector<TorsionGroup::Factor> parts;
    for (const auto& [m, d] : v.witness) {
      EXPECT_EQ(gcd(m, d), 1);
      parts.emplace_back(m, static_cast<int>((d - 1) * (d - 2)));
    }
    EXPECT_EQ(TorsionGroup::from_summands(parts), g);
  }
  EXPECT_GT(admissible, 8);
}

TEST(Noether, Values) {
  EXPECT_EQ(betti_from_noether({9, 0, 0}), 1);
  EXPECT_EQ(betti_from_noether({1, 0, 0}), 9);
  EXPECT_EQ(betti_from_noether({1, 1, 0}), 21);
  EXPECT_EQ(betti_from_noether({3, 0, 0}), 7);
}

TEST(Noether, UnsupportedInputs) {
  EXPECT_THROW(betti_from_noether({1, 0, 1}), UnsupportedInvariants);
  EXPECT_THROW(betti_from_noether({1, 2, 0}), UnsupportedInvariants);
  EXPECT_THROW(betti_from_noether({12, 0, 0}), UnsupportedInvariants);
}

TEST(RegularNegativeKnown, Examples) {
  EXPECT_TRUE(regular_negative_known(52).known);
  EXPECT_NE(regular_negative_known(52).source.find("degree 5"), std::string::npos);
  EXPECT_TRUE(regular_negative_known(105).known);
  EXPECT_TRUE(regular_negative_known(8).known);
  EXPECT_TRUE(regular_negative_known(13).known);
  EXPECT_FALSE(regular_negative_known(4).known);
  EXPECT_FALSE(regular_negative_known(14).known);
  EXPECT_EQ(regular_negative_known(4).source, "open");
  EXPECT_THROW(regular_negative_known(-1), std::invalid_argument);
}

TEST(RegularNegativeKnown, SurfaceSourcesMatchNoether) {
  for (long long k = 0; k <= 30; ++k) {
    auto r = regular_negative_known(k);
    if (r.source.find("p_g = 0") != std::string::npos) {
      EXPECT_EQ(betti_from_noether({static_cast<int>(9 - k), 0, 0}) - 1, k);
    }
    if (r.source.find("p_g = 1") != std::string::npos) {
      EXPECT_EQ(betti_from_noether({static_cast<int>(21 - k), 1, 0}) - 1, k);
    }
  }
}
