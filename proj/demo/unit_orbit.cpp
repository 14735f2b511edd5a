/*
 * Walks the norm-one orbit of a seed element in two cubic rings and prints
 * each power together with its trace, showing how a single unit solves the
 * cubic analogue of the Pell equation infinitely often.
 */
#include <iostream>

#include "cubix/cubix.hpp"

using namespace cubix;

static void print_orbit(const BinaryCubicForm& f, const CubicElement& seed, int count)
{
  std::cout << "form (" << f.a << ", " << f.b << ", " << f.c << ", " << f.d
            << "), discriminant " << f.discriminant() << "\n";
  for (const CubicElement& e : orbit(seed, count)) {
    std::cout << "  (u, x, y) = (" << to_string(e.u) << ", " << to_string(e.x) << ", "
              << to_string(e.y) << ")  trace " << to_string(trace(e)) << "  norm "
              << to_string(norm(e)) << "\n";
  }
}

int main()
{
  /* unit of the ring attached to (1, 1, 2, 1) */
  BinaryCubicForm f1{1, 1, 2, 1};
  print_orbit(f1, CubicElement{f1, Rat(1), Rat(-1), Rat(1)}, 8);

  std::cout << "\n";

  /* solutions of u^3 + 2x^3 + 4y^3 - 6uxy = 1 in the cube-root ring of 2 */
  BinaryCubicForm f2{1, 0, 0, -2};
  print_orbit(f2, CubicElement{f2, Rat(-1), Rat(1), Rat(0)}, 8);
  return 0;
}
