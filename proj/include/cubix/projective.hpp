#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "numeric.hpp"
#include "roots.hpp"

namespace cubix {

using V3 = std::array<Int, 3>;

inline bool is_zero_vec(const V3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

/*
 * Canonical homogeneous coordinates: divide by the gcd and orient so the
 * last nonzero coordinate is positive. Every golden value in the test
 * suites is stated in this normalization.
 */
inline V3 normalize_triple(V3 v)
{
  if (is_zero_vec(v)) throw std::invalid_argument("zero vector has no projective class");
  Int g = gcd3(abs_int(v[0]), abs_int(v[1]), abs_int(v[2]));
  for (Int& c : v) c /= g;
  for (int i = 2; i >= 0; --i) {
    if (v[i] != 0) {
      if (v[i] < 0)
        for (Int& c : v) c = -c;
      break;
    }
  }
  return v;
}

struct ProjPoint {
  V3 v;

  ProjPoint() : v{0, 0, 0} {}
  explicit ProjPoint(V3 raw) : v(normalize_triple(std::move(raw))) {}
  ProjPoint(Int x, Int y, Int z) : v(normalize_triple({std::move(x), std::move(y), std::move(z)})) {}

  /* clears denominators of rational homogeneous coordinates */
  static ProjPoint from_rationals(const Rat& x, const Rat& y, const Rat& z)
  {
    Int l = den(x) * den(y) * den(z);
    Rat rl(l);
    Rat xs = x * rl, ys = y * rl, zs = z * rl;
    return ProjPoint(V3{num(xs), num(ys), num(zs)});
  }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

struct ProjLine {
  V3 l;  // coefficients of l0*X + l1*Y + l2*Z = 0

  ProjLine() : l{0, 0, 0} {}
  explicit ProjLine(V3 raw) : l(normalize_triple(std::move(raw))) {}

  bool contains(const ProjPoint& p) const
  {
    return l[0] * p.v[0] + l[1] * p.v[1] + l[2] * p.v[2] == 0;
  }

  friend bool operator==(const ProjLine&, const ProjLine&) = default;
};

/*
 * Deterministic basis of the solution space of l . v = 0: of the three
 * cross products with the coordinate axes,
 *   (-l1, l0, 0), (-l2, 0, l0), (0, -l2, l1),
 * take the first nonzero one and then the first one independent of it.
 */
inline std::pair<V3, V3> line_basis(const ProjLine& line)
{
  const Int &l0 = line.l[0], &l1 = line.l[1], &l2 = line.l[2];
  std::array<V3, 3> cands = {V3{-l1, l0, 0}, V3{-l2, 0, l0}, V3{0, -l2, l1}};
  const V3* first = nullptr;
  for (const V3& c : cands) {
    if (is_zero_vec(c)) continue;
    if (first == nullptr) {
      first = &c;
      continue;
    }
    /* independence: some 2x2 minor of the pair is nonzero */
    const V3& a = *first;
    if (a[0] * c[1] - a[1] * c[0] != 0 || a[0] * c[2] - a[2] * c[0] != 0
        || a[1] * c[2] - a[2] * c[1] != 0)
      return {normalize_triple(a), normalize_triple(c)};
  }
  throw std::invalid_argument("degenerate line");
}

/*
 * Ternary cubic with the ten monomial coefficients stored in the fixed
 * order X^3, X^2 Y, X^2 Z, X Y^2, X Y Z, X Z^2, Y^3, Y^2 Z, Y Z^2, Z^3.
 */
struct TernaryCubic {
  std::array<Int, 10> c{};

  static constexpr std::array<std::array<int, 3>, 10> exponents = {{
      {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
      {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
  }};

  friend bool operator==(const TernaryCubic&, const TernaryCubic&) = default;

  bool is_zero() const
  {
    for (const Int& v : c)
      if (v != 0) return false;
    return true;
  }

  /* divides out the content, keeping the sign of the coefficients */
  TernaryCubic primitive() const
  {
    Int g = 0;
    for (const Int& v : c) g = gcd_int(g, abs_int(v));
    if (g <= 1) return *this;
    TernaryCubic out = *this;
    for (Int& v : out.c) v /= g;
    return out;
  }

  template <typename S>
  S eval(const S& x, const S& y, const S& z) const
  {
    S acc{};
    for (std::size_t i = 0; i < 10; ++i) {
      if (c[i] == 0) continue;
      S term = S(c[i]);
      for (int k = 0; k < exponents[i][0]; ++k) term *= x;
      for (int k = 0; k < exponents[i][1]; ++k) term *= y;
      for (int k = 0; k < exponents[i][2]; ++k) term *= z;
      acc += term;
    }
    return acc;
  }

  Int eval_point(const ProjPoint& p) const { return eval(p.v[0], p.v[1], p.v[2]); }

  bool contains(const ProjPoint& p) const { return eval_point(p) == 0; }

  /* partial derivatives evaluated at integer coordinates */
  V3 gradient(const V3& p) const
  {
    V3 g{0, 0, 0};
    for (std::size_t i = 0; i < 10; ++i) {
      if (c[i] == 0) continue;
      const auto& e = exponents[i];
      Int mono[3];
      for (int axis = 0; axis < 3; ++axis) {
        if (e[axis] == 0) {
          mono[axis] = 0;
          continue;
        }
        Int term = c[i] * e[axis];
        for (int k = 0; k < (axis == 0 ? e[0] - 1 : e[0]); ++k) term *= p[0];
        for (int k = 0; k < (axis == 1 ? e[1] - 1 : e[1]); ++k) term *= p[1];
        for (int k = 0; k < (axis == 2 ? e[2] - 1 : e[2]); ++k) term *= p[2];
        mono[axis] = term;
      }
      for (int axis = 0; axis < 3; ++axis) g[axis] += mono[axis];
    }
    return g;
  }
};

/* The Euler relation 3*G(p) = p . grad G(p) for homogeneous cubics. */
inline bool euler_relation_holds(const TernaryCubic& g, const V3& p)
{
  V3 gr = g.gradient(p);
  Int dot = p[0] * gr[0] + p[1] * gr[1] + p[2] * gr[2];
  return dot == 3 * g.eval(p[0], p[1], p[2]);
}

/*
 * Restriction of a ternary cubic to the line spanned by b0 and b1: the
 * binary cubic G(lam, mu) = Gamma(lam*b0 + mu*b1), returned by ascending
 * lambda-degree. The four coefficients are recovered exactly from the
 * evaluations at (1,0), (0,1), (1,1), (1,-1).
 */
inline std::array<Int, 4> restrict_to_line(const TernaryCubic& g, const V3& b0, const V3& b1)
{
  auto at = [&](const Int& lam, const Int& mu) {
    return g.eval(Int(lam * b0[0] + mu * b1[0]), Int(lam * b0[1] + mu * b1[1]),
                  Int(lam * b0[2] + mu * b1[2]));
  };
  Int g3 = at(1, 0);
  Int g0 = at(0, 1);
  Int s = at(1, 1);
  Int d = at(1, -1);
  /* s = g0+g1+g2+g3, d = -g0+g1-g2+g3 */
  Int g1 = (s + d) / 2 - g3;
  Int g2 = (s - d) / 2 - g0;
  return {g0, g1, g2, g3};
}

struct LineIntersection {
  struct Entry {
    ProjPoint point;
    int multiplicity;
  };
  std::vector<Entry> points;
  bool all_rational = true;  // false when a non-rational root pair remains
};

/*
 * Exact intersection of a line with a cubic: parametrize the line, factor
 * the restricted binary cubic over the rationals, and map the roots back.
 * Throws when the substitution vanishes identically (line inside the cubic).
 */
inline LineIntersection line_cubic_intersection(const TernaryCubic& g, const ProjLine& line)
{
  auto [b0, b1] = line_basis(line);
  std::array<Int, 4> bc = restrict_to_line(g, b0, b1);
  if (bc[0] == 0 && bc[1] == 0 && bc[2] == 0 && bc[3] == 0)
    throw std::domain_error("line is contained in the cubic");

  LineIntersection out;
  auto push = [&](const Int& lam, const Int& mu, int mult) {
    V3 raw{lam * b0[0] + mu * b1[0], lam * b0[1] + mu * b1[1], lam * b0[2] + mu * b1[2]};
    out.points.push_back({ProjPoint(raw), mult});
  };

  /* root at (lam:mu) = (1:0) has multiplicity 3 - deg of the dehomogenized part */
  detail::UPoly up(bc.begin(), bc.end());
  int d = detail::degree(up);
  if (d < 3) push(1, 0, 3 - d);
  if (d >= 1) {
    detail::RootReport rep = detail::rational_roots(up);
    for (const auto& r : rep.roots) push(r.r, r.q, r.mult);
    out.all_rational = rep.all_roots_rational;
  }
  return out;
}

}  // namespace cubix
