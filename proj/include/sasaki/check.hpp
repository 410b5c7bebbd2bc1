#pragma once

#include "sasaki/arith.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sasaki {

enum class CheckStatus { Pass, Fail, Warn };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Warn: return "warn";
  }
  return "?";
}

/// One named condition with the exact values it was decided on.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::vector<std::pair<std::string, Rational>> values;

  bool passed() const { return status != CheckStatus::Fail; }
  friend bool operator==(const Check&, const Check&) = default;
};

inline Check make_check(std::string name, bool ok, std::string detail = {},
                        std::vector<std::pair<std::string, Rational>> values = {}) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail), std::move(values)};
}

inline bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

inline const Check* find_check(const std::vector<Check>& checks, std::string_view name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace sasaki
