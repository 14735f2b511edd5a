#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubic_form.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "projective.hpp"
#include "surface.hpp"

namespace cubix {

/* v^2 + a1 u v + a3 v = u^3 + a2 u^2 + a4 u + a6 */
struct WeierstrassCurve {
  Rat a1, a2, a3, a4, a6;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

  bool is_integral() const
  {
    return is_integer(a1) && is_integer(a2) && is_integer(a3) && is_integer(a4) && is_integer(a6);
  }

  /* v^2 + a1 u v + a3 v - u^3 - a2 u^2 - a4 u - a6; zero iff (u,v) on the curve */
  Rat eval(const Rat& u, const Rat& v) const
  {
    return v * v + a1 * u * v + a3 * v - u * u * u - a2 * u * u - a4 * u - a6;
  }
};

struct CurveInvariants {
  Rat b2, b4, b6, b8, c4, c6, disc;

  Rat j() const
  {
    if (disc == 0) throw std::domain_error("j-invariant undefined: discriminant is zero");
    return c4 * c4 * c4 / disc;
  }
};

inline CurveInvariants curve_invariants(const WeierstrassCurve& w)
{
  CurveInvariants iv;
  iv.b2 = w.a1 * w.a1 + 4 * w.a2;
  iv.b4 = 2 * w.a4 + w.a1 * w.a3;
  iv.b6 = w.a3 * w.a3 + 4 * w.a6;
  iv.b8 = w.a1 * w.a1 * w.a6 + 4 * w.a2 * w.a6 - w.a1 * w.a3 * w.a4 + w.a2 * w.a3 * w.a3
          - w.a4 * w.a4;
  iv.c4 = iv.b2 * iv.b2 - 24 * iv.b4;
  iv.c6 = -iv.b2 * iv.b2 * iv.b2 + 36 * iv.b2 * iv.b4 - 216 * iv.b6;
  iv.disc = -iv.b2 * iv.b2 * iv.b8 - 8 * iv.b4 * iv.b4 * iv.b4 - 27 * iv.b6 * iv.b6
            + 9 * iv.b2 * iv.b4 * iv.b6;
  if (iv.c4 * iv.c4 * iv.c4 - iv.c6 * iv.c6 != 1728 * iv.disc)
    throw std::domain_error("invariant identity c4^3 - c6^2 = 1728 disc failed");
  return iv;
}

/*
 * Homogenization F(X,Y) - 3 t Z Q(X,Y) + (t^3 - 27 n) Z^3 of the trace/norm
 * slice, scaled to a primitive integer cubic. Rational t, n are fine: the
 * Weierstrass data extracted later is a ratio of equal-degree expressions in
 * the coefficients, so the scaling drops out.
 */
inline TernaryCubic build_gamma(const PellCubeInstance& inst)
{
  QuadForm h = inst.form.hessian();
  BinaryCubicForm f = inst.form.jacobian();
  const Rat &t = inst.t, &n = inst.n;
  std::array<Rat, 10> rc{};
  rc[0] = Rat(f.a);
  rc[1] = Rat(f.b);
  rc[3] = Rat(f.c);
  rc[6] = Rat(f.d);
  rc[2] = -3 * t * Rat(h.A);
  rc[4] = -3 * t * Rat(h.B);
  rc[7] = -3 * t * Rat(h.C);
  rc[9] = t * t * t - 27 * n;

  Int l = 1;
  for (const Rat& v : rc) l = l / gcd_int(l, den(v)) * den(v);
  TernaryCubic g;
  for (std::size_t i = 0; i < 10; ++i) {
    Rat scaled = rc[i] * Rat(l);
    g.c[i] = num(scaled);
  }
  if (g.is_zero()) throw std::domain_error("instance defines the zero cubic");
  return g.primitive();
}

inline ProjLine tangent_line(const TernaryCubic& g, const ProjPoint& p)
{
  if (!g.contains(p)) throw std::invalid_argument("point does not lie on the cubic");
  V3 gr = g.gradient(p.v);
  if (is_zero_vec(gr)) throw std::domain_error("zero gradient: no tangent line at a singular point");
  return ProjLine(gr);
}

/*
 * One tangent step at p: the tangent meets the cubic to order 3 at p (flex)
 * or to order exactly 2, in which case the residual intersection is rational
 * automatically and is returned.
 */
struct TangentStep {
  ProjLine line;
  bool is_flex = false;
  ProjPoint third;  // meaningful only when !is_flex
};

inline TangentStep tangent_step(const TernaryCubic& g, const ProjPoint& p)
{
  ProjLine line = tangent_line(g, p);
  auto [b0, b1] = line_basis(line);
  auto proportional = [](const V3& a, const V3& b) {
    return a[0] * b[1] - a[1] * b[0] == 0 && a[0] * b[2] - a[2] * b[0] == 0
           && a[1] * b[2] - a[2] * b[1] == 0;
  };
  V3 s1 = proportional(b0, p.v) ? b1 : b0;

  /* G(lam, mu) = Gamma(lam p + mu s1) = mu^2 (g1 lam + g0 mu) */
  auto gc = restrict_to_line(g, p.v, s1);
  if (gc[3] != 0 || gc[2] != 0) throw std::domain_error("tangency invariant failed");
  if (gc[1] == 0 && gc[0] == 0) throw std::domain_error("tangent line lies in the cubic");

  TangentStep out;
  out.line = line;
  out.is_flex = gc[1] == 0;
  if (!out.is_flex) {
    V3 raw{gc[0] * p.v[0] - gc[1] * s1[0], gc[0] * p.v[1] - gc[1] * s1[1],
           gc[0] * p.v[2] - gc[1] * s1[2]};
    out.third = ProjPoint(raw);
  }
  return out;
}

/*
 * k u^3 + p u^2 + q u v + r v^2 + s u + w v + m = 0: the affine shape both
 * reduction paths produce.
 */
struct PreWeierstrass {
  Rat k, p, q, r, s, w, m;
};

/*
 * (u, v) = (xi x, xi y) with xi = -r/k, then division by r xi^2, makes the
 * cubic in x and the square in y monic:
 *   y^2 + (q/r) x y + (-k w / r^2) y = x^3 + (-p/r) x^2 + (s k / r^2) x + (-m k^2 / r^3).
 */
inline WeierstrassCurve to_weierstrass_form(const PreWeierstrass& pw)
{
  if (pw.k == 0) throw std::domain_error("vanishing cubic coefficient: degenerate reduction");
  if (pw.r == 0) throw std::domain_error("vanishing square coefficient: degenerate reduction");
  WeierstrassCurve out;
  out.a1 = pw.q / pw.r;
  out.a2 = -pw.p / pw.r;
  out.a3 = -pw.k * pw.w / (pw.r * pw.r);
  out.a4 = pw.s * pw.k / (pw.r * pw.r);
  out.a6 = -pw.m * pw.k * pw.k / (pw.r * pw.r * pw.r);
  return out;
}

namespace detail {

using TriKey = std::array<int, 3>;
using TriPoly = std::map<TriKey, Int>;

inline void tri_add(TriPoly& p, const TriKey& k, const Int& v)
{
  if (v == 0) return;
  Int& slot = p[k];
  slot += v;
  if (slot == 0) p.erase(k);
}

inline TriPoly tri_mul(const TriPoly& a, const TriPoly& b)
{
  TriPoly out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b)
      tri_add(out, {ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, va * vb);
  return out;
}

/* g with each of X, Y, Z replaced by a polynomial in the new variables */
inline TriPoly tri_substitute(const TernaryCubic& g, const std::array<TriPoly, 3>& repl)
{
  std::array<std::array<TriPoly, 4>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[v][0] = TriPoly{{{0, 0, 0}, Int(1)}};
    for (int e = 1; e <= 3; ++e) pw[v][e] = tri_mul(pw[v][e - 1], repl[v]);
  }
  TriPoly out;
  for (std::size_t i = 0; i < 10; ++i) {
    if (g.c[i] == 0) continue;
    const auto& e = TernaryCubic::exponents[i];
    TriPoly term = tri_mul(tri_mul(pw[0][e[0]], pw[1][e[1]]), pw[2][e[2]]);
    for (const auto& [k, v] : term) tri_add(out, k, g.c[i] * v);
  }
  return out;
}

/*
 * Reads the seven admitted coefficients of a homogeneous cubic in (U, V, T)
 * dehomogenized at T = 1; the transformations are built so that the U^2 V,
 * U V^2 and V^3 terms vanish, which is asserted.
 */
inline PreWeierstrass read_cubic_coeffs(const TriPoly& cubic)
{
  auto coeff = [&](int a, int b, int c) {
    auto it = cubic.find({a, b, c});
    return it == cubic.end() ? Int(0) : it->second;
  };
  if (coeff(2, 1, 0) != 0 || coeff(1, 2, 0) != 0 || coeff(0, 3, 0) != 0)
    throw std::domain_error("transformed cubic has terms outside the reduced shape");
  return {Rat(coeff(3, 0, 0)), Rat(coeff(2, 0, 1)), Rat(coeff(1, 1, 1)), Rat(coeff(0, 2, 1)),
          Rat(coeff(1, 0, 2)), Rat(coeff(0, 1, 2)), Rat(coeff(0, 0, 3))};
}

}  // namespace detail

struct ReductionReport {
  int reduction_case = 0;           // 1: flex path, 2: tangent-chord chain
  ProjPoint start;
  std::optional<ProjPoint> second;  // residual intersection of the tangent at start
  std::optional<ProjPoint> third;   // residual intersection of the second tangent
  std::optional<ProjPoint> aux;     // off-curve frame point of the flex path
  std::vector<ProjLine> tangents;
  Mat3<Int> M;
  WeierstrassCurve curve;
};

/*
 * Flex path: send p to (0:1:0) and its tangent to the line T = 0. The frame
 * M has columns [aux, p, e] with aux the first point of the tangent line, by
 * increasing height over primitive parameter pairs, that is off the cubic,
 * and e the first standard basis vector making M invertible. Substituting
 * (X,Y,Z) = M (U,V,T) then leaves no U^2 V, U V^2 or V^3 term.
 */
inline ReductionReport reduce_case1(const TernaryCubic& g, const ProjPoint& p)
{
  TangentStep step = tangent_step(g, p);
  if (!step.is_flex)
    throw std::invalid_argument("tangent meets the cubic again: point is not a flex");
  auto [b0, b1] = line_basis(step.line);

  for (int h = 1; h <= 64; ++h) {
    for (int a = 0; a <= h; ++a) {
      for (int b = -h; b <= h; ++b) {
        if (std::max(a, b < 0 ? -b : b) != h) continue;
        if (a == 0 && b < 0) continue;
        if (gcd_int(Int(a), abs_int(Int(b))) != 1) continue;
        V3 cand{Int(a) * b0[0] + Int(b) * b1[0], Int(a) * b0[1] + Int(b) * b1[1],
                Int(a) * b0[2] + Int(b) * b1[2]};
        if (is_zero_vec(cand)) continue;
        ProjPoint auxp(cand);
        if (g.contains(auxp)) continue;
        for (int ei = 0; ei < 3; ++ei) {
          Mat3<Int> m;
          for (int row = 0; row < 3; ++row) {
            m(row, 0) = auxp.v[row];
            m(row, 1) = p.v[row];
            m(row, 2) = row == ei ? 1 : 0;
          }
          if (det(m) == 0) continue;

          std::array<detail::TriPoly, 3> repl;
          for (int row = 0; row < 3; ++row) {
            detail::TriPoly c;
            detail::tri_add(c, {1, 0, 0}, m(row, 0));
            detail::tri_add(c, {0, 1, 0}, m(row, 1));
            detail::tri_add(c, {0, 0, 1}, m(row, 2));
            repl[row] = c;
          }
          ReductionReport rep;
          rep.reduction_case = 1;
          rep.start = p;
          rep.aux = auxp;
          rep.tangents = {step.line};
          rep.M = m;
          rep.curve = to_weierstrass_form(detail::read_cubic_coeffs(detail::tri_substitute(g, repl)));
          return rep;
        }
      }
    }
  }
  throw std::domain_error("no auxiliary frame point found on the tangent line");
}

/*
 * Tangent-chord chain: q is the residual intersection of the tangent at p,
 * r the residual intersection of the tangent at q (if that tangent is
 * flexed, the flex path applies at q instead). With M = [p | q | r] the
 * substitution (X,Y,Z) = M (U^2, VT, UT) gives a sextic divisible by U^2 T
 * whose quotient has the reduced shape with no U T^2 or T^3 term.
 */
inline ReductionReport reduce_case2(const TernaryCubic& g, const ProjPoint& p)
{
  TangentStep step_p = tangent_step(g, p);
  if (step_p.is_flex) throw std::invalid_argument("flex point: the flex path applies");
  ProjPoint q = step_p.third;
  TangentStep step_q = tangent_step(g, q);
  if (step_q.is_flex) {
    ReductionReport rep = reduce_case1(g, q);
    rep.start = p;
    rep.second = q;
    rep.tangents.insert(rep.tangents.begin(), step_p.line);
    return rep;
  }
  ProjPoint r = step_q.third;

  Mat3<Int> m;
  for (int row = 0; row < 3; ++row) {
    m(row, 0) = p.v[row];
    m(row, 1) = q.v[row];
    m(row, 2) = r.v[row];
  }
  if (det(m) == 0) throw std::domain_error("tangent chain degenerated to collinear points");

  std::array<detail::TriPoly, 3> repl;
  for (int row = 0; row < 3; ++row) {
    detail::TriPoly c;
    detail::tri_add(c, {2, 0, 0}, m(row, 0));  // U^2
    detail::tri_add(c, {0, 1, 1}, m(row, 1));  // V T
    detail::tri_add(c, {1, 0, 1}, m(row, 2));  // U T
    repl[row] = c;
  }
  detail::TriPoly sext = detail::tri_substitute(g, repl);
  detail::TriPoly quot;
  for (const auto& [key, val] : sext) {
    if (key[0] < 2 || key[2] < 1)
      throw std::domain_error("transformed sextic is not divisible by U^2 T");
    quot[{key[0] - 2, key[1], key[2] - 1}] = val;
  }

  ReductionReport rep;
  rep.reduction_case = 2;
  rep.start = p;
  rep.second = q;
  rep.third = r;
  rep.tangents = {step_p.line, step_q.line};
  rep.M = m;
  rep.curve = to_weierstrass_form(detail::read_cubic_coeffs(quot));
  return rep;
}

inline ReductionReport to_weierstrass(const TernaryCubic& g, const ProjPoint& p)
{
  TangentStep probe = tangent_step(g, p);
  return probe.is_flex ? reduce_case1(g, p) : reduce_case2(g, p);
}

/* Fast path only: the slice is singular whenever t^3 = 27 n. */
inline bool is_singular_curve(const PellCubeInstance& inst) { return inst.is_singular_slice(); }

/*
 * With a rational point available the question is decided: either the point
 * itself is singular, or the reduction runs and the discriminant answers.
 * A reduction failure (contained tangent line, degenerate frame) means the
 * cubic is not smooth either.
 */
inline bool is_singular_curve(const PellCubeInstance& inst, const ProjPoint& pt)
{
  if (inst.is_singular_slice()) return true;
  TernaryCubic g = build_gamma(inst);
  if (!g.contains(pt)) throw std::invalid_argument("point does not lie on the curve");
  if (is_zero_vec(g.gradient(pt.v))) return true;
  try {
    ReductionReport rep = to_weierstrass(g, pt);
    return curve_invariants(rep.curve).disc == 0;
  } catch (const std::domain_error&) {
    return true;
  }
}

}  // namespace cubix
