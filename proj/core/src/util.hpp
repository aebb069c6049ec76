#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qenergy/error.hpp"

namespace qenergy {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ValidationError("integer overflow in gate count");
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ValidationError("integer overflow in gate count");
  return out;
}

/// Product of counts as a double. Exact whenever the product stays below
/// 2^53, so a single multiplication by an energy constant rounds once.
inline double count_product(std::initializer_list<std::uint64_t> factors) {
  constexpr std::uint64_t kExactLimit = std::uint64_t{1} << 53;
  std::uint64_t exact = 1;
  bool overflowed = false;
  double approx = 1.0;
  for (auto f : factors) {
    approx *= static_cast<double>(f);
    if (!overflowed && (__builtin_mul_overflow(exact, f, &exact) || exact > kExactLimit))
      overflowed = true;
  }
  return overflowed ? approx : static_cast<double>(exact);
}

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

/// Strict decimal parse of the whole field.
inline double parse_double_field(std::string_view text, const std::string& what) {
  const std::string s(trim(text));
  if (s.empty()) throw ParseError(what + ": empty number");
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError(what + ": '" + s + "' is not a number");
  }
  if (used != s.size()) throw ParseError(what + ": '" + s + "' is not a number");
  return v;
}

inline bool approx_equal(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace qenergy
