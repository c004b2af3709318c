#ifndef HYPERPOLY_RATIONAL_HPP
#define HYPERPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "hyperpoly/error.hpp"

namespace hyperpoly {

using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

// Parses "p" or "p/q" (decimal integers, optional sign on p) into a
// canonical rational.
inline Rational parse_rational(std::string_view text) {
  const std::string s = detail::strip(text);
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+')
    throw Error(ErrorCode::ParseError, "not a rational: '" + s + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str(10);
}
inline std::string to_string(const Integer& z) { return z.get_str(10); }

}  // namespace hyperpoly

#endif  // HYPERPOLY_RATIONAL_HPP
