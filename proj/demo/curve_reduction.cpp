/*
 * Reduces the trace-norm surface of a cubic form at a chosen slice to a
 * Weierstrass model, printing every stage: covariants, the homogenized
 * cubic, the tangent-chord chain, the frame matrix and the final curve.
 */
#include <iostream>

#include "cubix/cubix.hpp"

using namespace cubix;

static std::ostream& operator<<(std::ostream& os, const V3& v)
{
  return os << "(" << v[0] << " : " << v[1] << " : " << v[2] << ")";
}

int main()
{
  BinaryCubicForm f{1, 1, 2, 1};
  PellCubeInstance inst{f, Rat(0), Rat(1)};

  std::cout << "form (1, 1, 2, 1), discriminant " << f.discriminant() << "\n";
  QuadForm h = f.hessian();
  BinaryCubicForm j = f.jacobian();
  std::cout << "hessian  (" << h.A << ", " << h.B << ", " << h.C << ")\n";
  std::cout << "jacobian (" << j.a << ", " << j.b << ", " << j.c << ", " << j.d << ")\n";
  std::cout << "syzygy holds: " << (f.syzygy_check() ? "yes" : "no") << "\n\n";

  TernaryCubic g = build_gamma(inst);
  std::cout << "slice t = 0, n = 1 homogenizes to coefficients [";
  for (std::size_t i = 0; i < 10; ++i) std::cout << (i ? ", " : "") << g.c[i];
  std::cout << "]\n";

  ProjPoint p(-1, 1, 1);
  std::cout << "rational point P = " << p.v << "\n\n";

  ReductionReport rep = to_weierstrass(g, p);
  std::cout << "reduction case " << rep.reduction_case << "\n";
  for (std::size_t i = 0; i < rep.tangents.size(); ++i)
    std::cout << "tangent " << i + 1 << ": " << rep.tangents[i].l << "\n";
  if (rep.second) std::cout << "second contact Q = " << rep.second->v << "\n";
  if (rep.third) std::cout << "third contact  R = " << rep.third->v << "\n";
  if (rep.aux) std::cout << "auxiliary frame point = " << rep.aux->v << "\n";

  std::cout << "frame matrix M =\n";
  for (int r = 0; r < 3; ++r) {
    std::cout << "  [";
    for (int c = 0; c < 3; ++c) std::cout << (c ? ", " : "") << rep.M(r, c);
    std::cout << "]\n";
  }

  const WeierstrassCurve& w = rep.curve;
  std::cout << "\nweierstrass model: v^2 + (" << to_string(w.a1) << ") u v + ("
            << to_string(w.a3) << ") v = u^3 + (" << to_string(w.a2) << ") u^2 + ("
            << to_string(w.a4) << ") u + (" << to_string(w.a6) << ")\n";

  CurveInvariants iv = curve_invariants(w);
  std::cout << "c4 = " << to_string(iv.c4) << "\nc6 = " << to_string(iv.c6)
            << "\ndisc = " << to_string(iv.disc) << "\nj = " << to_string(iv.j()) << "\n";
  return 0;
}
