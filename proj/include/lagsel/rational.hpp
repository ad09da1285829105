#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "lagsel/error.hpp"

namespace lagsel {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Exact rational number; always stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Parses "p", "-p", "p/q" or "-p/q" with q > 0.
inline Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!detail::is_integer_literal(num_text, true)) {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num_text);
  if (num_str.front() == '+') {
    num_str.erase(0, 1);
  }
  Integer num(num_str);
  if (slash == std::string_view::npos) {
    return Rational(num);
  }
  const std::string_view den_text = text.substr(slash + 1);
  if (!detail::is_integer_literal(den_text, false)) {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  Integer den{std::string(den_text)};
  if (den == 0) {
    throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

}  // namespace lagsel
