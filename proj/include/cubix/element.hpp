#pragma once

#include <stdexcept>

#include "cubic_form.hpp"
#include "matrix.hpp"
#include "numeric.hpp"

namespace cubix {

/*
 * Element u + x*rho + y*omega of the cubic ring attached to the form
 * (a, b, c, d), written in the basis {1, rho, omega} with rho = a*zeta and
 * omega = a*zeta^2 + b*zeta for a root zeta of a*t^3 + b*t^2 + c*t + d.
 *
 * Multiplication by the element is the 3x3 matrix
 *   [ u      -a*d*y        -a*d*x - b*d*y ]
 *   [ x    u - b*x - c*y       -c*x - d*y ]
 *   [ y        a*x              u - c*y   ]
 * whose trace is the field trace 3u - b*x - 2*c*y and whose determinant is
 * the field norm. The left column recovers the coordinates.
 */
struct CubicElement {
  BinaryCubicForm form;
  Rat u, x, y;

  friend bool operator==(const CubicElement&, const CubicElement&) = default;

  bool is_integral() const { return is_integer(u) && is_integer(x) && is_integer(y); }

  static CubicElement one(const BinaryCubicForm& f) { return {f, Rat(1), Rat(0), Rat(0)}; }
  static CubicElement zero(const BinaryCubicForm& f) { return {f, Rat(0), Rat(0), Rat(0)}; }
};

inline Mat3<Rat> to_matrix(const CubicElement& e)
{
  const Rat a(e.form.a), b(e.form.b), c(e.form.c), d(e.form.d);
  Mat3<Rat> n;
  n(0, 0) = e.u;
  n(0, 1) = -a * d * e.y;
  n(0, 2) = -a * d * e.x - b * d * e.y;
  n(1, 0) = e.x;
  n(1, 1) = e.u - b * e.x - c * e.y;
  n(1, 2) = -c * e.x - d * e.y;
  n(2, 0) = e.y;
  n(2, 1) = a * e.x;
  n(2, 2) = e.u - c * e.y;
  return n;
}

/* Reads coordinates off the left column and validates the matrix shape. */
inline CubicElement from_matrix(const BinaryCubicForm& f, const Mat3<Rat>& n)
{
  CubicElement e{f, n(0, 0), n(1, 0), n(2, 0)};
  if (!(to_matrix(e) == n)) throw std::invalid_argument("matrix is not an element matrix");
  return e;
}

inline void require_same_form(const CubicElement& e1, const CubicElement& e2)
{
  if (!(e1.form == e2.form))
    throw std::invalid_argument("elements belong to different cubic forms");
}

/*
 * Closed-form product coordinates:
 *   u3 = u1 u2 - a d (x2 y1 + x1 y2) - b d y1 y2
 *   x3 = u1 x2 + u2 x1 - b x1 x2 - c (x1 y2 + x2 y1) - d y1 y2
 *   y3 = u1 y2 + u2 y1 + a x1 x2 - c y1 y2
 * agreeing with the matrix product in either order.
 */
inline CubicElement multiply(const CubicElement& e1, const CubicElement& e2)
{
  require_same_form(e1, e2);
  const Rat a(e1.form.a), b(e1.form.b), c(e1.form.c), d(e1.form.d);
  const Rat &u1 = e1.u, &x1 = e1.x, &y1 = e1.y;
  const Rat &u2 = e2.u, &x2 = e2.x, &y2 = e2.y;
  Rat u3 = u1 * u2 - a * d * (x2 * y1 + x1 * y2) - b * d * y1 * y2;
  Rat x3 = u1 * x2 + u2 * x1 - b * x1 * x2 - c * (x1 * y2 + x2 * y1) - d * y1 * y2;
  Rat y3 = u1 * y2 + u2 * y1 + a * x1 * x2 - c * y1 * y2;
  return {e1.form, u3, x3, y3};
}

inline CubicElement add(const CubicElement& e1, const CubicElement& e2)
{
  require_same_form(e1, e2);
  return {e1.form, e1.u + e2.u, e1.x + e2.x, e1.y + e2.y};
}

inline CubicElement negate(const CubicElement& e) { return {e.form, -e.u, -e.x, -e.y}; }

inline Rat trace(const CubicElement& e)
{
  return 3 * e.u - Rat(e.form.b) * e.x - 2 * Rat(e.form.c) * e.y;
}

inline Rat norm(const CubicElement& e) { return det(to_matrix(e)); }

/* Left column of the exact matrix inverse; verified by multiplication. */
inline CubicElement inverse(const CubicElement& e)
{
  Mat3<Rat> n = to_matrix(e);
  Rat dn = det(n);
  if (dn == 0) throw std::domain_error("element of norm zero has no inverse");
  Mat3<Rat> adj = adjugate(n);
  CubicElement inv{e.form, adj(0, 0) / dn, adj(1, 0) / dn, adj(2, 0) / dn};
  if (!(multiply(e, inv) == CubicElement::one(e.form)))
    throw std::domain_error("inverse verification failed");
  return inv;
}

inline CubicElement power(const CubicElement& e, long k)
{
  if (k < 0) return power(inverse(e), -k);
  CubicElement acc = CubicElement::one(e.form);
  CubicElement base = e;
  while (k > 0) {
    if (k & 1) acc = multiply(acc, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return acc;
}

/*
 * Product factorization oracle: with
 *   S   = [ 1 0 0   0   -a*d  -b*d ]      U(u,x,y) = [ u x y 0 0 0 ]
 *         [ 0 1 0  -b    -c    -d  ]                 [ 0 u 0 x y 0 ]
 *         [ 0 0 1   a     0    -c  ]                 [ 0 0 u 0 x y ]
 * the element matrix is N = S * U^T, and the product rule is equivalent to
 *   S * (U3^T - U1^T * S * U2^T) = 0.
 */
inline bool factor_check(const CubicElement& e1, const CubicElement& e2)
{
  require_same_form(e1, e2);
  const Rat a(e1.form.a), b(e1.form.b), c(e1.form.c), d(e1.form.d);
  Mat<Rat, 3, 6> S;
  S(0, 0) = 1; S(0, 4) = -a * d; S(0, 5) = -b * d;
  S(1, 1) = 1; S(1, 3) = -b; S(1, 4) = -c; S(1, 5) = -d;
  S(2, 2) = 1; S(2, 3) = a; S(2, 5) = -c;
  auto U = [](const CubicElement& e) {
    Mat<Rat, 3, 6> m;
    m(0, 0) = e.u; m(0, 1) = e.x; m(0, 2) = e.y;
    m(1, 1) = e.u; m(1, 3) = e.x; m(1, 4) = e.y;
    m(2, 2) = e.u; m(2, 4) = e.x; m(2, 5) = e.y;
    return m;
  };
  Mat<Rat, 3, 6> U1 = U(e1), U2 = U(e2), U3 = U(multiply(e1, e2));
  Mat<Rat, 6, 3> rhs = U1.transpose() * (S * U2.transpose());
  Mat<Rat, 3, 3> res = S * (U3.transpose() - rhs);
  if (!(S * U1.transpose() == to_matrix(e1))) return false;
  return res.is_zero();
}

/*
 * Characteristic polynomial lambda^3 - t lambda^2 + q lambda - n of the
 * element matrix, cross-checked: t and n are recomputed from the symmetric
 * functions of the conjugates of u + x*(a*zeta) + y*(a*zeta^2 + b*zeta),
 * which are rational in (a, b, c, d). Requires a != 0.
 */
struct CharPoly {
  Rat t, q, n;
};

inline CharPoly char_poly_oracle(const CubicElement& e)
{
  if (e.form.a == 0) throw std::invalid_argument("characteristic oracle requires a != 0");
  Mat3<Rat> m = to_matrix(e);
  Rat t = m.trace();
  Rat q = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)
        + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  Rat n = det(m);

  const Rat a(e.form.a), b(e.form.b), c(e.form.c), d(e.form.d);
  /* power sums of the roots of the defining cubic */
  Rat e1 = -b / a, e2 = c / a, e3 = -d / a;       // elementary symmetric
  Rat p2 = e1 * e1 - 2 * e2;                      // zeta_i^2 sum
  Rat s21 = e1 * e2 - 3 * e3;                     // sum over i != j of zeta_i^2 zeta_j
  Rat s22 = e2 * e2 - 2 * e1 * e3;                // sum over i < j of (zeta_i zeta_j)^2
  Rat A1 = a * e.x + b * e.y, A2 = a * e.y;       // alpha_i = u + A1 zeta_i + A2 zeta_i^2
  Rat t_sym = 3 * e.u + A1 * e1 + A2 * p2;
  Rat n_sym = e.u * e.u * e.u + e.u * e.u * (A1 * e1 + A2 * p2)
            + e.u * (A1 * A1 * e2 + A1 * A2 * s21 + A2 * A2 * s22)
            + e3 * A1 * A1 * A1 + e3 * e1 * A1 * A1 * A2 + e3 * e2 * A1 * A2 * A2
            + e3 * e3 * A2 * A2 * A2;
  if (t != t_sym || n != n_sym)
    throw std::domain_error("characteristic polynomial oracle disagreement");
  return {t, q, n};
}

}  // namespace cubix
