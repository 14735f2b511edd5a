#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace cubix {
namespace detail {

/* Univariate integer polynomial, coefficients by ascending degree. */
using UPoly = std::vector<Int>;

inline int degree(const UPoly& p)
{
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;  // zero polynomial
}

inline Int content(const UPoly& p)
{
  Int g = 0;
  for (const Int& c : p) g = gcd_int(g, abs_int(c));
  return g;
}

inline void make_primitive(UPoly& p)
{
  Int g = content(p);
  if (g > 1)
    for (Int& c : p) c /= g;
}

inline Int eval(const UPoly& p, const Int& t)
{
  Int acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

/* q^deg(p) * p(r/q): exact evaluation at a rational point. */
inline Int eval_homog(const UPoly& p, const Int& r, const Int& q)
{
  int d = degree(p);
  if (d < 0) return 0;
  Int acc = 0;
  Int qpow = 1;
  for (int i = d; i >= 0; --i) {
    acc = acc * r + p[static_cast<std::size_t>(i)] * qpow;
    qpow *= q;
  }
  /* acc accumulated p[d] r^d, p[d-1] r^(d-1) q, ..., p[0] q^d */
  return acc;
}

inline UPoly derivative(const UPoly& p)
{
  if (p.size() <= 1) return {Int(0)};
  UPoly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = Int(static_cast<long>(i)) * p[i];
  return out;
}

/*
 * Exact division of p by the linear factor (q*t - r), where r/q is a known
 * rational root in lowest terms. Throws if the division is not exact.
 */
inline UPoly deflate(const UPoly& p, const Int& r, const Int& q)
{
  int d = degree(p);
  if (d < 1) throw std::invalid_argument("cannot deflate a constant");
  UPoly quot(static_cast<std::size_t>(d));
  Int carry = p[static_cast<std::size_t>(d)];
  for (int i = d - 1; i >= 0; --i) {
    /* invariant: carry = q * quot[i] */
    if (carry % q != 0) throw std::domain_error("deflation is not exact");
    quot[static_cast<std::size_t>(i)] = carry / q;
    carry = p[static_cast<std::size_t>(i)] + r * quot[static_cast<std::size_t>(i)];
  }
  if (carry != 0) throw std::domain_error("deflation leaves a remainder");
  return quot;
}

/*
 * Sturm chain of a square-free monic integer cubic, members scaled to
 * integer coefficients by positive factors only (sign-preserving):
 *   p0 = t^3 + A t^2 + B t + C
 *   p1 = 3 t^2 + 2A t + B
 *   p2 = -rem(9 p0, p1)        = (2A^2 - 6B) t + (AB - 9C)
 *   p3 = -rem(p1, p2) * lc(p2)^2  when p2 has degree 1
 * The chain ends early when a remainder is a nonzero constant.
 */
struct SturmChain {
  std::vector<UPoly> seq;

  explicit SturmChain(const UPoly& monic_cubic)
  {
    const Int& C = monic_cubic[0];
    const Int& B = monic_cubic[1];
    const Int& A = monic_cubic[2];
    seq.push_back(monic_cubic);
    seq.push_back(UPoly{B, 2 * A, Int(3)});
    UPoly p2{A * B - 9 * C, 2 * A * A - 6 * B};
    if (p2[1] == 0 && p2[0] == 0) throw std::domain_error("cubic is not square-free");
    if (p2[1] == 0) {
      seq.push_back(UPoly{p2[0]});
      return;  // constant remainder: gcd(p0, p1) = 1, chain complete
    }
    seq.push_back(p2);
    const Int& Dv = p2[1];
    const Int& E = p2[0];
    Int p3 = -(3 * E * E - 2 * A * Dv * E + B * Dv * Dv);
    if (p3 == 0) throw std::domain_error("cubic is not square-free");
    seq.push_back(UPoly{p3});
  }

  int variations(const Int& t) const
  {
    int count = 0;
    int prev = 0;
    for (const UPoly& p : seq) {
      int s = eval(p, t).sign();
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  }

  /* number of distinct real roots in (lo, hi] */
  int roots_in(const Int& lo, const Int& hi) const { return variations(lo) - variations(hi); }
};

/* Integer roots of a square-free monic cubic, located by Sturm bisection. */
inline void integer_roots_monic_cubic(const UPoly& monic, std::vector<Int>& out)
{
  Int bound = 1;
  for (std::size_t i = 0; i < 3; ++i) bound = std::max(bound, abs_int(monic[i]));
  bound += 1;  // Cauchy: every root satisfies |t| < bound
  SturmChain chain(monic);

  struct Range {
    Int lo, hi;
    int count;
  };
  std::vector<Range> stack;
  int total = chain.roots_in(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Range r = stack.back();
    stack.pop_back();
    if (r.hi - r.lo == 1) {
      if (eval(monic, r.hi) == 0) out.push_back(r.hi);
      continue;
    }
    Int mid = (r.lo + r.hi) / 2;
    int left = chain.roots_in(r.lo, mid);
    if (left > 0) stack.push_back({r.lo, mid, left});
    if (r.count - left > 0) stack.push_back({mid, r.hi, r.count - left});
  }
  std::sort(out.begin(), out.end());
}

/* A rational root r/q in lowest terms (q > 0) with its multiplicity. */
struct RationalRoot {
  Int r, q;
  int mult;
};

inline RationalRoot reduced(const Int& r, const Int& q, int mult)
{
  Int g = gcd_int(abs_int(r), abs_int(q));
  Int rr = r / g, qq = q / g;
  if (qq < 0) {
    rr = -rr;
    qq = -qq;
  }
  return {rr, qq, mult};
}

/*
 * Rational roots, with multiplicities, of an integer polynomial of degree
 * 1..3. all_roots_rational is cleared when a non-rational pair (real or
 * complex conjugate) remains; multiplicities of the listed roots plus the
 * flagged remainder always account for the full degree.
 */
struct RootReport {
  std::vector<RationalRoot> roots;
  bool all_roots_rational = true;

  int rational_mult_sum() const
  {
    int s = 0;
    for (const auto& r : roots) s += r.mult;
    return s;
  }
};

inline void quadratic_rational_roots(const Int& c2, const Int& c1, const Int& c0, RootReport& rep)
{
  Int disc = c1 * c1 - 4 * c2 * c0;
  Int sq;
  if (disc == 0) {
    rep.roots.push_back(reduced(-c1, 2 * c2, 2));
  } else if (is_square(disc, sq)) {
    rep.roots.push_back(reduced(-c1 + sq, 2 * c2, 1));
    rep.roots.push_back(reduced(-c1 - sq, 2 * c2, 1));
  } else {
    rep.all_roots_rational = false;
  }
}

inline RootReport rational_roots(UPoly p)
{
  RootReport rep;
  int d = degree(p);
  if (d <= 0) throw std::invalid_argument("constant polynomial has no root structure");
  p.resize(static_cast<std::size_t>(d) + 1);
  make_primitive(p);

  if (d == 1) {
    rep.roots.push_back(reduced(-p[0], p[1], 1));
    return rep;
  }
  if (d == 2) {
    quadratic_rational_roots(p[2], p[1], p[0], rep);
    return rep;
  }

  const Int &a3 = p[3], &a2 = p[2], &a1 = p[1], &a0 = p[0];

  /* multiple-root split via the linear pseudo-remainder of (p, p'):
     9*a3*p = (3*a3*t + a2)*p' + l1*t + l0 */
  Int l1 = 6 * a3 * a1 - 2 * a2 * a2;
  Int l0 = 9 * a3 * a0 - a2 * a1;
  if (l1 == 0 && l0 == 0) {
    /* p' divides 9*a3*p: triple root at -a2/(3*a3), always rational */
    RationalRoot r = reduced(-a2, 3 * a3, 3);
    if (eval_homog(p, r.r, r.q) != 0) throw std::domain_error("triple-root extraction failed");
    rep.roots.push_back(r);
    return rep;
  }
  if (l1 != 0) {
    RationalRoot cand = reduced(-l0, l1, 2);
    if (eval_homog(p, cand.r, cand.q) == 0 && eval_homog(derivative(p), cand.r, cand.q) == 0) {
      /* genuine double root; the cofactor root is rational as well */
      UPoly rest = deflate(deflate(p, cand.r, cand.q), cand.r, cand.q);
      rep.roots.push_back(cand);
      rep.roots.push_back(reduced(-rest[0], rest[1], 1));
      return rep;
    }
  }

  /* square-free: rational roots biject with integer roots of the
     monicization y^3 + a2 y^2 + a1*a3 y + a0*a3^2 under y = a3*t */
  UPoly monic{a0 * a3 * a3, a1 * a3, a2, Int(1)};
  std::vector<Int> iroots;
  integer_roots_monic_cubic(monic, iroots);
  for (const Int& y : iroots) rep.roots.push_back(reduced(y, a3, 1));
  if (iroots.size() < 3) rep.all_roots_rational = false;
  return rep;
}

/* True when the cubic (coefficients by ascending degree) has a rational root. */
inline bool cubic_has_rational_root(const std::array<Int, 4>& c)
{
  UPoly p(c.begin(), c.end());
  if (degree(p) <= 0) return false;
  return !rational_roots(p).roots.empty();
}

}  // namespace detail
}  // namespace cubix
