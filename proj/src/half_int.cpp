#include "spinstat/half_int.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace spinstat {

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
  }
  return value;
}

} // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const int num = parse_int(text.substr(0, slash), whole);
    const int den = parse_int(text.substr(slash + 1), whole);
    if (den == 1) return from_twice(2 * num);
    if (den == 2) return from_twice(num);
    throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
  }
  if (text.find_first_of(".eE") != std::string_view::npos) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    const double twice = 2.0 * value;
    if (ec != std::errc() || ptr != text.data() + text.size() || twice != std::round(twice) ||
        std::abs(twice) > 1e6) {
      throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
    }
    return from_twice(static_cast<int>(twice));
  }
  return from_twice(2 * parse_int(text, whole));
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

} // namespace spinstat
