#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cubix {

// Exact arbitrary-precision integers and rationals. No floating point
// appears anywhere in this library; every quantity is an Int or a Rat.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline int sign(const Int& v) { return v.sign(); }

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd_int(const Int& a, const Int& b)
{
  return boost::multiprecision::gcd(a, b);
}

inline Int gcd3(const Int& a, const Int& b, const Int& c)
{
  return gcd_int(gcd_int(a, b), c);
}

/* Extended gcd: returns g = gcd(a,b) >= 0 and Bezout pair with a*x + b*y = g. */
inline Int exgcd(const Int& a, const Int& b, Int& x, Int& y)
{
  Int r0 = a, r1 = b;
  Int x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;  // truncated division; loop invariant keeps gcd
    Int r2 = r0 - q * r1;
    Int x2 = x0 - q * x1;
    Int y2 = y0 - q * y1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
    y0 = y1; y1 = y2;
  }
  if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
  x = x0;
  y = y0;
  return r0;
}

/* Least non-negative residue of a mod m, m != 0. */
inline Int mod_nonneg(const Int& a, const Int& m)
{
  Int mm = abs_int(m);
  Int r = a % mm;
  if (r < 0) r += mm;
  return r;
}

/* Floor division a/b for b > 0. */
inline Int floor_div(const Int& a, const Int& b)
{
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/* Floor of the square root for n >= 0. */
inline Int isqrt(const Int& n)
{
  if (n < 0) throw std::invalid_argument("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

/* Exact square test; on success stores the non-negative root. */
inline bool is_square(const Int& n, Int& root)
{
  if (n < 0) return false;
  root = isqrt(n);
  return root * root == n;
}

/* Strict decimal integer parse: optional leading '-', digits only. */
inline Int parse_int(const std::string& s)
{
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bare sign is not an integer");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9')
      throw std::invalid_argument("invalid integer literal: " + s);
  return Int(s);
}

/* Rational parse: "p" or "p/q" in lowest or non-lowest terms, q != 0. */
inline Rat parse_rat(const std::string& s)
{
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int p = parse_int(s.substr(0, slash));
  Int q = parse_int(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(p) / Rat(q);
}

inline std::string to_string(const Int& v) { return v.str(); }

/* Canonical rational formatting: "p" when integral, else "p/q" reduced, q > 0. */
inline std::string to_string(const Rat& r)
{
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

}  // namespace cubix
