// Copyright 2026 The PAG Survival Authors
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

#ifndef PAG_RATIONAL_HPP
#define PAG_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pag {

// Every power quantity in the library is an exact rational. The engine
// templates also accept std::int64_t for integer-scaled grids.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// "7", "-3", "13/2", "2.75". Returns nullopt on anything else; never goes
// through binary floating point.
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto parse_int = [&](std::string_view s) -> std::optional<BigInt> {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    if (!digits_only(s)) return std::nullopt;
    BigInt v{std::string(s)};
    return negative ? BigInt(-v) : v;
  };

  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!num || !digits_only(den_text)) return std::nullopt;
    BigInt den(std::string{den_text});
    if (den == 0) return std::nullopt;
    return Rational(*num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole_text = text.substr(0, dot);
    auto frac_text = text.substr(dot + 1);
    bool negative = !whole_text.empty() && whole_text.front() == '-';
    if (!whole_text.empty() && (whole_text.front() == '-' || whole_text.front() == '+'))
      whole_text.remove_prefix(1);
    if (!(whole_text.empty() || digits_only(whole_text)) || !digits_only(frac_text))
      return std::nullopt;
    BigInt whole = whole_text.empty() ? BigInt(0) : BigInt(std::string(whole_text));
    BigInt scale = 1;
    for (std::size_t k = 0; k < frac_text.size(); ++k) scale *= 10;
    Rational value(whole * scale + BigInt(std::string(frac_text)), scale);
    return negative ? Rational(-value) : value;
  }

  auto whole = parse_int(text);
  if (!whole) return std::nullopt;
  return Rational(*whole);
}

// Canonical text: "n" for integers, "n/d" otherwise (lowest terms).
inline std::string to_string(const Rational& q) {
  const auto& num = boost::multiprecision::numerator(q);
  const auto& den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace pag

#endif  // PAG_RATIONAL_HPP
