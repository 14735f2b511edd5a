#pragma once

#include <stdexcept>
#include <vector>

#include "binpoly.hpp"
#include "numeric.hpp"
#include "quad.hpp"
#include "roots.hpp"

namespace cubix {

struct UnimodularMap {
  Int p, q, r, s;  // (x, y) -> (p*x + q*y, r*x + s*y)

  Int det() const { return p * s - q * r; }
  bool is_unimodular() const
  {
    Int d = det();
    return d == 1 || d == -1;
  }
};

/*
 * Binary cubic form a*x^3 + b*x^2*y + c*x*y^2 + d*y^3 with
 *   discriminant  D = b^2 c^2 + 18abcd - 4ac^3 - 4b^3 d - 27a^2 d^2,
 *   Hessian       Q = (b^2 - 3ac, bc - 9ad, c^2 - 3bd),
 *   Jacobian      F = Q_y C_x - Q_x C_y  (a binary cubic),
 * tied together by the syzygy F^2 + 27*D*C^2 = 4*Q^3.
 */
struct BinaryCubicForm {
  Int a, b, c, d;

  friend bool operator==(const BinaryCubicForm&, const BinaryCubicForm&) = default;

  Int discriminant() const
  {
    return b * b * c * c + 18 * a * b * c * d - 4 * a * c * c * c - 4 * b * b * b * d
         - 27 * a * a * d * d;
  }

  QuadForm hessian() const { return {b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d}; }

  BinForm<Int> as_form() const { return BinForm<Int>(std::vector<Int>{d, c, b, a}); }

  static BinaryCubicForm from_form(const BinForm<Int>& f)
  {
    if (f.degree() != 3) throw std::invalid_argument("expected a binary cubic");
    return {f.coeff[3], f.coeff[2], f.coeff[1], f.coeff[0]};
  }

  BinaryCubicForm jacobian() const
  {
    QuadForm h = hessian();
    BinForm<Int> qf(std::vector<Int>{h.C, h.B, h.A});
    BinForm<Int> cf = as_form();
    return from_form(qf.dy() * cf.dx() - qf.dx() * cf.dy());
  }

  /* Expands F^2 + 27*D*C^2 - 4*Q^3 and checks it is the zero sextic. */
  bool syzygy_check() const
  {
    BinForm<Int> cf = as_form();
    BinForm<Int> ff = jacobian().as_form();
    QuadForm h = hessian();
    BinForm<Int> qf(std::vector<Int>{h.C, h.B, h.A});
    BinForm<Int> lhs = ff * ff + (27 * discriminant()) * (cf * cf);
    BinForm<Int> rhs = Int(4) * (qf * qf * qf);
    return (lhs - rhs).is_zero();
  }

  template <typename S>
  S evaluate(const S& x, const S& y) const
  {
    return ((S(a) * x + S(b) * y) * x + S(c) * y * y) * x + S(d) * y * y * y;
  }

  /*
   * Rational-root test on the dehomogenization: a cubic in one variable is
   * reducible over the rationals exactly when it has a rational root. Forms
   * with a = 0 carry the factor y and are reducible outright, as are forms
   * of discriminant zero (a repeated factor is defined over the rationals).
   */
  bool is_irreducible() const
  {
    if (a == 0) return false;
    if (discriminant() == 0) return false;
    return !detail::cubic_has_rational_root({d, c, b, a});
  }

  /* Coefficients of C(p*x + q*y, r*x + s*y); the discriminant is preserved. */
  BinaryCubicForm gl2_transform(const UnimodularMap& g) const
  {
    if (!g.is_unimodular()) throw std::invalid_argument("map is not unimodular");
    BinForm<Int> img =
        as_form().compose_linear(BinForm<Int>::linear(g.p, g.q), BinForm<Int>::linear(g.r, g.s));
    return from_form(img);
  }
};

}  // namespace cubix
