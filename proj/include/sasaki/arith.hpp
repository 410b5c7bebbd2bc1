#pragma once

// Exact integer and rational arithmetic, Hirzebruch-Jung continued fractions
// and the Bezout machinery used to force primitive Chern classes.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sasaki {

using Integer = boost::multiprecision::cpp_int;

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}               // NOLINT(implicit)
  Rational(long v) : value_(v) {}              // NOLINT(implicit)
  Rational(long long v) : value_(v) {}         // NOLINT(implicit)
  Rational(unsigned long v) : value_(v) {}     // NOLINT(implicit)
  Rational(const Integer& v) : value_(v) {}    // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    // Boost 1.74 rejects a negative denominator outright.
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
  }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }
  bool is_zero() const { return sign() == 0; }

  Rational operator-() const { return Rational(value_type(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using value_type = boost::multiprecision::cpp_rational;
  explicit Rational(value_type v) : value_(std::move(v)) {}
  value_type value_{0};
};

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// Floor division for arbitrary signs.
inline Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor_div: zero divisor");
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Representative of a mod m in [0, m).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

inline Integer gcd_list(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

struct ExtGcd {
  Integer g;
  Integer x;
  Integer y;
};

/// Returns g = gcd(a, b) >= 1 together with a*x + b*y = g.
inline ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("ext_gcd: both arguments are zero");
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

/// Inverse of a modulo m in (0, m); nullopt when gcd(a, m) != 1.
inline std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
  if (m <= 1) throw std::invalid_argument("mod_inverse: modulus must exceed 1");
  auto [g, x, y] = ext_gcd(mod_floor(a, m), m);
  if (g != 1) return std::nullopt;
  return mod_floor(x, m);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

inline Integer lcm_list(std::span<const Integer> values) {
  if (values.empty()) throw std::invalid_argument("lcm_list: empty list");
  Integer l = 1;
  for (const auto& v : values) {
    if (v <= 0) throw std::invalid_argument("lcm_list: entries must be positive");
    l = lcm(l, v);
  }
  return l;
}

// ---------------------------------------------------------------------------
// Hirzebruch-Jung continued fractions  m/r = b1 - 1/(b2 - 1/(...))

struct HJFraction {
  Integer m;
  Integer r;
  std::vector<Integer> entries;
};

inline void check_hj_pair(const Integer& m, const Integer& r) {
  if (m < 2) throw std::invalid_argument("hj: m must be at least 2");
  if (r <= 0 || r >= m) throw std::invalid_argument("hj: r must satisfy 0 < r < m");
  if (gcd(m, r) != 1) throw std::invalid_argument("hj: gcd(m, r) != 1");
}

/// Unique expansion with every entry >= 2 (ceiling recursion).
inline HJFraction hj_expand(const Integer& m, const Integer& r) {
  check_hj_pair(m, r);
  HJFraction out{m, r, {}};
  Integer a = m, b = r;
  while (b != 0) {
    Integer c = floor_div(a + b - 1, b);
    out.entries.push_back(c);
    Integer next = c * b - a;
    a = std::move(b);
    b = std::move(next);
  }
  return out;
}

/// Evaluates [b1, ..., bl] to the coprime pair (m, r), 0 < r < m.
inline std::pair<Integer, Integer> hj_value(std::span<const Integer> entries) {
  if (entries.empty()) throw std::invalid_argument("hj_value: empty chain");
  for (const auto& b : entries) {
    if (b < 2) throw std::invalid_argument("hj_value: entries must be >= 2 (no (-1)-curves)");
  }
  // Evaluate from the tail: beta_l = b_l / 1, beta_i = b_i - 1/beta_{i+1}.
  Integer num = entries.back(), den = 1;
  for (std::size_t i = entries.size() - 1; i-- > 0;) {
    Integer new_num = entries[i] * num - den;
    den = std::move(num);
    num = std::move(new_num);
  }
  return {num, den};
}

inline std::pair<Integer, Integer> hj_value(const std::vector<Integer>& entries) {
  return hj_value(std::span<const Integer>(entries));
}

/// Residue of the reversed chain; used for curves meeting the tail.
inline Integer hj_reverse_residue(const Integer& m, const Integer& r) {
  auto entries = hj_expand(m, r).entries;
  std::vector<Integer> reversed(entries.rbegin(), entries.rend());
  return hj_value(reversed).second;
}

// ---------------------------------------------------------------------------
// Multi-variable Bezout with range normalisation.

struct BezoutSolution {
  std::vector<Integer> b;  // 0 < b_j < m_j
  Integer q;
};

struct BezoutOutcome {
  std::optional<BezoutSolution> solution;
  Integer joint_gcd;   // gcd(c_1, ..., c_s, mu)
  std::string reason;  // empty when solved

  explicit operator bool() const { return solution.has_value(); }
};

/// Solves sum_j c_j b_j + mu q = 1 with 0 < b_j < m_j.
///
/// Iterated two-variable ext_gcd gives some integer solution; each b_j is then
/// shifted into [0, m_j) and the shift c_j m_j (a multiple of mu) is folded into q.
/// Unsolvable systems are reported through the outcome, never thrown.
inline BezoutOutcome solve_bezout_product(std::span<const Integer> coeffs,
                                          std::span<const Integer> moduli,
                                          const Integer& mu) {
  if (coeffs.size() != moduli.size()) {
    throw std::invalid_argument("solve_bezout_product: coeffs/moduli length mismatch");
  }
  if (mu <= 0) throw std::invalid_argument("solve_bezout_product: mu must be positive");
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    if (moduli[j] < 2) throw std::invalid_argument("solve_bezout_product: moduli must be >= 2");
    if ((coeffs[j] * moduli[j]) % mu != 0) {
      throw std::invalid_argument("solve_bezout_product: c_j * m_j must be a multiple of mu");
    }
  }

  // Fold the coefficient list: running gcd g with g = sum x_j c_j.
  std::vector<Integer> x(coeffs.size(), 0);
  Integer g = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    if (g == 0) {
      g = abs(coeffs[j]);
      x[j] = coeffs[j] < 0 ? -1 : 1;
      continue;
    }
    auto e = ext_gcd(g, coeffs[j]);
    for (std::size_t i = 0; i < j; ++i) x[i] *= e.x;
    x[j] = e.y;
    g = e.g;
  }
  Integer q = 0;
  if (g == 0) {
    g = mu;
    q = 1;
  } else {
    auto e = ext_gcd(g, mu);
    for (auto& xi : x) xi *= e.x;
    q = e.y;
    g = e.g;
  }

  BezoutOutcome out;
  out.joint_gcd = g;
  if (g != 1) {
    out.reason = "joint gcd of coefficients and mu is " + g.str();
    return out;
  }

  BezoutSolution sol;
  sol.b.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    Integer shift = floor_div(x[j], moduli[j]);
    sol.b[j] = x[j] - shift * moduli[j];
    q += shift * (coeffs[j] * moduli[j] / mu);
    if (sol.b[j] == 0) {
      out.reason = "normalised b_" + std::to_string(j) + " vanishes modulo " + moduli[j].str();
      return out;
    }
  }
  sol.q = q;
  out.solution = std::move(sol);
  return out;
}

inline BezoutOutcome solve_bezout_product(const std::vector<Integer>& coeffs,
                                          const std::vector<Integer>& moduli,
                                          const Integer& mu) {
  return solve_bezout_product(std::span<const Integer>(coeffs), std::span<const Integer>(moduli), mu);
}

inline bool pairwise_coprime(std::span<const Integer> values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (gcd(values[i], values[j]) != 1) return false;
  return true;
}

}  // namespace sasaki
