// Copyright 2026 The fuzzygames Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace fuzzygames::io {

// Decimal ("-1.25", "3e2") or fraction ("5/3", "-7/2.5"). Rejects anything
// non-finite, including "inf" and "nan" spellings.
inline std::optional<double> parse_number(std::string_view s) {
  auto decimal = [](std::string_view t) -> std::optional<double> {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    if (t.empty()) return std::nullopt;
    const char c = t.front() == '-' && t.size() > 1 ? t[1] : t.front();
    if (!(c == '.' || (c >= '0' && c <= '9'))) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
      return std::nullopt;
    }
    return v;
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return decimal(s);
  const auto num = decimal(s.substr(0, slash));
  const auto den = decimal(s.substr(slash + 1));
  if (!num || !den || *den == 0.0) return std::nullopt;
  const double v = *num / *den;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

// Shortest text that parses back to exactly `v`.
inline std::string exact(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

// Fixed-point with `precision` decimals; never prints "-0.000".
inline std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

}  // namespace fuzzygames::io
