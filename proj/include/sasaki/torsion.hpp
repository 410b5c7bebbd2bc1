#pragma once

// Finite abelian groups written as sums of Z_m^e.
//
// The canonical form is the invariant-factor decomposition grouped into
// (m, e) pairs with m ascending and each m dividing the next, so two groups
// compare equal exactly when they are isomorphic.

#include "sasaki/arith.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sasaki {

/// Prime factorisation by trial division; fine for the moduli in play.
inline std::vector<std::pair<Integer, int>> factorize(Integer n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<Integer, int>> out;
  for (Integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

class TorsionGroup {
 public:
  using Factor = std::pair<Integer, int>;  // Z_m^e

  TorsionGroup() = default;

  /// Any list of cyclic summands; moduli 1 and exponents 0 are dropped.
  static TorsionGroup from_summands(const std::vector<Factor>& summands) {
    std::map<Integer, std::vector<int>> by_prime;  // prime -> exponents of its cyclic p-parts
    for (const auto& [m, e] : summands) {
      if (m < 1 || e < 0) throw std::invalid_argument("TorsionGroup: bad summand Z_" + m.str() + "^" + std::to_string(e));
      if (m == 1 || e == 0) continue;
      for (const auto& [p, a] : factorize(m))
        for (int k = 0; k < e; ++k) by_prime[p].push_back(a);
    }
    std::size_t len = 0;
    for (auto& [p, exps] : by_prime) {
      std::sort(exps.begin(), exps.end(), std::greater<>());
      len = std::max(len, exps.size());
    }
    // Largest invariant factor first, collected from the largest p-parts.
    std::vector<Integer> inv(len, 1);
    for (const auto& [p, exps] : by_prime)
      for (std::size_t i = 0; i < exps.size(); ++i) inv[i] *= boost::multiprecision::pow(p, static_cast<unsigned>(exps[i]));
    std::reverse(inv.begin(), inv.end());
    TorsionGroup t;
    for (const auto& m : inv) {
      if (!t.factors_.empty() && t.factors_.back().first == m)
        ++t.factors_.back().second;
      else
        t.factors_.emplace_back(m, 1);
    }
    return t;
  }

  static TorsionGroup cyclic_power(const Integer& m, int e) { return from_summands({{m, e}}); }

  /// Parses "0", "Z_m^e" or a comma/plus separated list of such terms.
  static std::optional<TorsionGroup> parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (c != ' ') s += c;
    if (s == "0" || s == "trivial") return TorsionGroup{};
    static const std::regex term(R"(Z_?(\d+)(\^(\d+))?)");
    std::vector<Factor> summands;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t end = s.find_first_of(",+", pos);
      if (end == std::string::npos) end = s.size();
      std::smatch mt;
      std::string piece = s.substr(pos, end - pos);
      if (!std::regex_match(piece, mt, term)) return std::nullopt;
      Integer m(mt[1].str());
      int e = mt[3].matched ? std::stoi(mt[3].str()) : 1;
      if (m < 2 || e < 1) return std::nullopt;
      summands.emplace_back(m, e);
      pos = end + 1;
      if (end == s.size()) break;
    }
    return from_summands(summands);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool trivial() const { return factors_.empty(); }

  /// Prime-power summands (p^a, e), ascending.
  std::vector<Factor> primary() const {
    std::map<Integer, int> counts;
    for (const auto& [m, e] : factors_)
      for (const auto& [p, a] : factorize(m)) counts[boost::multiprecision::pow(p, static_cast<unsigned>(a))] += e;
    return {counts.begin(), counts.end()};
  }

  Integer order() const {
    Integer o = 1;
    for (const auto& [m, e] : factors_) o *= boost::multiprecision::pow(m, static_cast<unsigned>(e));
    return o;
  }

  /// Single summand Z_m^e, if the group has that shape.
  std::optional<Factor> homogeneous() const {
    if (factors_.size() != 1) return std::nullopt;
    return factors_.front();
  }

  std::string str() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (const auto& [m, e] : factors_) {
      if (!s.empty()) s += " + ";
      s += "Z_" + m.str() + (e == 1 ? "" : "^" + std::to_string(e));
    }
    return s;
  }

  friend bool operator==(const TorsionGroup&, const TorsionGroup&) = default;

 private:
  std::vector<Factor> factors_;
};

}  // namespace sasaki
