#pragma once

#include <array>
#include <stdexcept>
#include <tuple>

#include "matrix.hpp"
#include "numeric.hpp"

namespace cubix {

/* Binary quadratic form A*u^2 + B*u*y + C*y^2. */
struct QuadForm {
  Int A, B, C;

  Int disc() const { return B * B - 4 * A * C; }

  template <typename S>
  S eval(const S& u, const S& y) const
  {
    return S(A) * u * u + S(B) * u * y + S(C) * y * y;
  }

  bool is_primitive() const { return gcd3(abs_int(A), abs_int(B), abs_int(C)) == 1; }

  friend bool operator==(const QuadForm& a, const QuadForm& b)
  {
    return a.A == b.A && a.B == b.B && a.C == b.C;
  }
};

namespace quad {

/*
 * Composition of norm-form values for u^2 - D*y^2:
 *   x3 = x1*x2 + D*y1*y2,  y3 = x1*y2 + x2*y1,
 * so that (x1^2 - D*y1^2)(x2^2 - D*y2^2) = x3^2 - D*y3^2 identically.
 */
inline std::pair<Int, Int> brahmagupta_compose(const Int& x1, const Int& y1, const Int& x2,
                                               const Int& y2, const Int& D)
{
  return {x1 * x2 + D * y1 * y2, x1 * y2 + x2 * y1};
}

/* [[x, D*y], [y, x]]: determinant x^2 - D*y^2; products track composition. */
inline Mat2<Int> brahmagupta_matrix(const Int& x, const Int& y, const Int& D)
{
  Mat2<Int> m;
  m(0, 0) = x;
  m(0, 1) = D * y;
  m(1, 0) = y;
  m(1, 1) = x;
  return m;
}

struct Triple {
  Int x, y, z;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/* Right-triangle composition via |x1*x2 - y1*y2|, x1*y2 + x2*y1, z1*z2. */
inline Triple pythagorean_compose(const Triple& t1, const Triple& t2)
{
  for (const Triple* t : {&t1, &t2}) {
    if (t->x <= 0 || t->y <= 0 || t->z <= 0)
      throw std::invalid_argument("pythagorean triple entries must be positive");
    if (t->x * t->x + t->y * t->y != t->z * t->z)
      throw std::invalid_argument("input is not a pythagorean triple");
  }
  Int x3 = abs_int(t1.x * t2.x - t1.y * t2.y);
  if (x3 == 0) throw std::domain_error("degenerate pythagorean composition (zero leg)");
  return {x3, t1.x * t2.y + t2.x * t1.y, t1.z * t2.z};
}

/* Splits a discriminant D = 0,1 (mod 4) as D = 4m + s with s in {0,1}. */
inline std::pair<Int, Int> split_discriminant(const Int& D)
{
  Int s = mod_nonneg(D, 4);
  if (s != 0 && s != 1)
    throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
  return {s, (D - s) / 4};
}

/*
 * Element matrix for u + y*(s + sqrt(D))/2:
 *   [[u, m*y], [y, u + s*y]],  m = (D - s)/4.
 * Trace 2u + s*y, determinant (x^2 - D*y^2)/4 with x = 2u + s*y.
 */
inline Mat2<Rat> quad_element_matrix(const Rat& u, const Rat& y, const Int& D)
{
  auto [s, m] = split_discriminant(D);
  Mat2<Rat> out;
  out(0, 0) = u;
  out(0, 1) = Rat(m) * y;
  out(1, 0) = y;
  out(1, 1) = u + Rat(s) * y;
  return out;
}

/* Coordinates (u, y) to the norm-form solution (x, n): x = 2u + s*y, x^2 - D*y^2 = 4n. */
inline std::tuple<Int, Int, Int> norm_form_map(const Int& u, const Int& y, const Int& D)
{
  auto [s, m] = split_discriminant(D);
  (void)m;
  Int x = 2 * u + s * y;
  Int four_n = x * x - D * y * y;
  if (mod_nonneg(four_n, 4) != 0) throw std::domain_error("norm is not integral");
  return {x, y, four_n / 4};
}

struct GaussComposition {
  QuadForm q3;
  /* u3 and y3 as bilinear combinations of (u1*u2, u1*y2, u2*y1, y1*y2) */
  std::array<Int, 4> u_coeffs;
  std::array<Int, 4> y_coeffs;
};

/*
 * Composition of primitive forms of equal discriminant D:
 *   beta_j = (B_j - s)/2, beta+ = beta1 + beta2 + s, betax = beta1*beta2 + m,
 *   e = gcd(A1, A2, beta+) with A1*p + A2*q + beta+*r = e,
 *   b3 = (A1*beta2*p + A2*beta1*q + betax*r)/e,  A3 = A1*A2/e^2,
 *   beta3 = b3 mod A3 (least non-negative), B3 = 2*beta3 + s,
 *   C3 = (beta3^2 + s*beta3 - m)/A3.
 * The bilinear coefficients returned satisfy Q3(u3, y3) = Q1(u1,y1)*Q2(u2,y2).
 */
inline GaussComposition gauss_compose(const QuadForm& q1, const QuadForm& q2)
{
  Int D = q1.disc();
  if (q2.disc() != D) throw std::invalid_argument("forms have different discriminants");
  if (!q1.is_primitive() || !q2.is_primitive())
    throw std::invalid_argument("forms must be primitive");
  auto [s, m] = split_discriminant(D);

  Int beta1 = (q1.B - s) / 2;
  Int beta2 = (q2.B - s) / 2;
  Int beta_plus = beta1 + beta2 + s;
  Int beta_cross = beta1 * beta2 + m;

  /* three-term extended gcd via two chained two-term ones */
  Int p1, p2;
  Int g1 = exgcd(q1.A, q2.A, p1, p2);
  Int w1, r;
  Int e = exgcd(g1, beta_plus, w1, r);
  Int p = w1 * p1, q = w1 * p2;
  if (q1.A * p + q2.A * q + beta_plus * r != e) throw std::domain_error("extended gcd failed");
  if (e == 0) throw std::invalid_argument("degenerate composition input");

  Int b3_num = q1.A * beta2 * p + q2.A * beta1 * q + beta_cross * r;
  if (b3_num % e != 0) throw std::domain_error("non-integral composition parameter");
  Int b3 = b3_num / e;
  if ((q1.A * q2.A) % (e * e) != 0) throw std::domain_error("non-integral leading coefficient");
  Int A3 = (q1.A * q2.A) / (e * e);
  Int beta3 = mod_nonneg(b3, A3);
  Int B3 = 2 * beta3 + s;
  Int c3_num = beta3 * beta3 + s * beta3 - m;
  if (c3_num % A3 != 0) throw std::domain_error("non-integral trailing coefficient");
  QuadForm q3{A3, B3, c3_num / A3};

  /* each coefficient below must be an integer for valid inputs */
  auto exact = [](const Int& nume, const Int& deno) {
    if (nume % deno != 0) throw std::domain_error("non-integral bilinear coefficient");
    return nume / deno;
  };
  GaussComposition out;
  out.q3 = q3;
  out.u_coeffs = {e, exact(e * (beta2 - beta3), q2.A), exact(e * (beta1 - beta3), q1.A),
                  exact(e * (beta_cross - beta3 * beta_plus), q1.A * q2.A)};
  out.y_coeffs = {Int(0), exact(q1.A, e), exact(q2.A, e), exact(beta_plus, e)};
  return out;
}

inline std::pair<Int, Int> gauss_compose_values(const QuadForm& q1, const Int& u1, const Int& y1,
                                                const QuadForm& q2, const Int& u2, const Int& y2)
{
  GaussComposition g = gauss_compose(q1, q2);
  const auto& cu = g.u_coeffs;
  const auto& cy = g.y_coeffs;
  Int u3 = cu[0] * u1 * u2 + cu[1] * u1 * y2 + cu[2] * u2 * y1 + cu[3] * y1 * y2;
  Int y3 = cy[0] * u1 * u2 + cy[1] * u1 * y2 + cy[2] * u2 * y1 + cy[3] * y1 * y2;
  return {u3, y3};
}

}  // namespace quad
}  // namespace cubix
