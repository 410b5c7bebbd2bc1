#pragma once

// Table lookups: positive Sasakian torsion groups, semi-regular admissibility,
// and which k are known to carry regular negative structures.

#include "sasaki/torsion.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sasaki {

/// 0, Z_m^2 (30 does not divide m), Z_5^4, Z_4^4, Z_3^4, Z_3^6, Z_3^8, Z_2^{2n}.
inline bool kollar_positive(const TorsionGroup& t) {
  if (t.trivial()) return true;
  auto h = t.homogeneous();
  if (!h) return false;
  const auto& [m, e] = *h;
  if (e == 2) return m % 30 != 0;
  if (m == 2) return e % 2 == 0;
  if (m == 3) return e == 4 || e == 6 || e == 8;
  if (m == 4 || m == 5) return e == 4;
  return false;
}

struct SemiregularVerdict {
  bool admissible = false;
  std::vector<std::pair<Integer, Integer>> witness;  // (m_i, d_i)
  std::string reason;
};

/// d >= 3 with (d - 1)(d - 2) == e, if any.
inline std::optional<Integer> degree_for_exponent(int e) {
  for (long long d = 3; (d - 1) * (d - 2) <= e; ++d)
    if ((d - 1) * (d - 2) == e) return Integer(d);
  return std::nullopt;
}

/// Accepts sum Z_{m_i}^{(d_i-1)(d_i-2)} with pairwise coprime m_i and
/// gcd(m_i, d_i) = 1, minus the exceptions Z_m^2, Z_2^{2n}, Z_3^6.
inline SemiregularVerdict semiregular_admissible(const TorsionGroup& t) {
  SemiregularVerdict v;
  if (auto h = t.homogeneous()) {
    const auto& [m, e] = *h;
    if (e == 2) {
      v.reason = "exception Z_m^2";
      return v;
    }
    if (m == 2 && e % 2 == 0) {
      v.reason = "exception Z_2^{2n}";
      return v;
    }
    if (m == 3 && e == 6) {
      v.reason = "exception Z_3^6";
      return v;
    }
  }
  // Pairwise coprime m_i force every p-primary part to be homogeneous.
  std::vector<std::pair<int, Integer>> by_exponent;  // exponent -> product of prime powers
  std::vector<std::pair<Integer, int>> primes;
  for (const auto& [q, e] : t.primary()) {
    Integer p = factorize(q).front().first;
    for (const auto& [p2, e2] : primes)
      if (p2 == p) {
        v.reason = "p-part for p = " + p.str() + " is not homogeneous";
        return v;
      }
    primes.emplace_back(p, e);
    bool merged = false;
    for (auto& [ex, m] : by_exponent)
      if (ex == e) {
        m *= q;
        merged = true;
      }
    if (!merged) by_exponent.emplace_back(e, q);
  }
  for (const auto& [e, m] : by_exponent) {
    auto d = degree_for_exponent(e);
    if (!d) {
      v.reason = "exponent " + std::to_string(e) + " is not (d-1)(d-2) for any d >= 3";
      return v;
    }
    for (const auto& [p, pe] : primes)
      if (pe == e && *d % p == 0) {
        v.reason = "gcd(m, d) != 1 for prime " + p.str() + " and d = " + d->str();
        return v;
      }
    v.witness.emplace_back(m, *d);
  }
  v.admissible = true;
  return v;
}

struct SurfaceInvariants {
  int K_squared = 0;
  int p_g = 0;
  int q = 0;
};

struct UnsupportedInvariants : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Noether for q = 0: chi_top = 12(1 + p_g) - K^2, b_2 = chi_top - 2.
inline int betti_from_noether(const SurfaceInvariants& inv) {
  if (inv.q != 0) throw UnsupportedInvariants("betti_from_noether: only q = 0 is supported");
  if (inv.p_g != 0 && inv.p_g != 1) throw UnsupportedInvariants("betti_from_noether: only p_g in {0, 1} is supported");
  int b2 = 12 * (1 + inv.p_g) - inv.K_squared - 2;
  if (b2 < 1) throw UnsupportedInvariants("betti_from_noether: b_2 = " + std::to_string(b2) + " is impossible");
  return b2;
}

struct KnownRegular {
  bool known = false;
  std::string source;
};

/// Snapshot of the k for which #_k(S^2 x S^3) is known to be regular negative.
inline KnownRegular regular_negative_known(long long k) {
  if (k < 0) throw std::invalid_argument("regular_negative_known: k must be >= 0");
  for (long long d = 5;; ++d) {
    long long v = (d - 2) * (d * d - 2 * d + 2) + 1;
    if (v == k) return {true, "circle bundle over the Fermat surface of degree " + std::to_string(d) + " in CP^3"};
    if (v > k) break;
  }
  if (k == 7 || k == 12 || k == 20) return {true, "links of hypersurface singularities"};
  if (k == 8) return {true, "circle bundle over the Barlow surface"};
  if (k == 5 || k == 6) return {true, "surface of general type with p_g = 0, K^2 = " + std::to_string(9 - k)};
  if (k == 13 || (k >= 15 && k <= 19))
    return {true, "surface of general type with p_g = 1, K^2 = " + std::to_string(21 - k)};
  return {false, "open"};
}

}  // namespace sasaki
