#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "tweetsent/error.hpp"

namespace tweetsent {

/// Shortest decimal text that parses back to exactly `value`.
inline std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

/// Fixed-point text with `digits` decimals.
inline std::string format_fixed(double value, int digits) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

/// Round half away from zero at `digits` decimals. A 1e-9 relative nudge
/// absorbs binary representation error so that e.g. 0.825 renders as 0.83.
inline double round_half_up(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  const double scaled = std::abs(value) * scale;
  const double rounded = std::floor(scaled + 0.5 + 1e-9 * std::max(1.0, scaled));
  return std::copysign(rounded / scale, value);
}

inline double parse_double(std::string_view text, std::string_view what) {
  if (text == "inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  double value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    fail(ErrorKind::Data, "invalid number for " + std::string(what) + ": '" +
                              std::string(text) + "'");
  }
  return value;
}

template <typename Int>
Int parse_int(std::string_view text, std::string_view what) {
  Int value{};
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    fail(ErrorKind::Data, "invalid integer for " + std::string(what) + ": '" +
                              std::string(text) + "'");
  }
  return value;
}

}  // namespace tweetsent
