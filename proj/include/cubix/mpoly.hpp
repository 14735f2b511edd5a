#pragma once

#include <array>
#include <cstddef>
#include <map>

#include "matrix.hpp"
#include "numeric.hpp"

namespace cubix {

/*
 * Sparse multivariate polynomial over the integers in up to NV variables.
 * Used where an identity must be certified symbolically rather than at
 * sampled points: coefficients are compared after exact expansion.
 */
template <std::size_t NV = 8>
struct MPoly {
  using Expo = std::array<int, NV>;
  std::map<Expo, Int> terms;  // exponent vector -> coefficient, no zero entries

  MPoly() = default;

  static MPoly constant(const Int& c)
  {
    MPoly p;
    if (c != 0) p.terms[Expo{}] = c;
    return p;
  }

  static MPoly var(std::size_t i)
  {
    MPoly p;
    Expo e{};
    e[i] = 1;
    p.terms[e] = 1;
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms == b.terms; }

  MPoly& operator+=(const MPoly& b)
  {
    for (const auto& [e, c] : b.terms) {
      Int& slot = terms[e];
      slot += c;
      if (slot == 0) terms.erase(e);
    }
    return *this;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b)
  {
    MPoly out = a;
    for (const auto& [e, c] : b.terms) {
      Int& slot = out.terms[e];
      slot += c;
      if (slot == 0) out.terms.erase(e);
    }
    return out;
  }

  friend MPoly operator-(const MPoly& a, const MPoly& b)
  {
    MPoly out = a;
    for (const auto& [e, c] : b.terms) {
      Int& slot = out.terms[e];
      slot -= c;
      if (slot == 0) out.terms.erase(e);
    }
    return out;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b)
  {
    MPoly out;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        Expo e;
        for (std::size_t i = 0; i < NV; ++i) e[i] = ea[i] + eb[i];
        Int& slot = out.terms[e];
        slot += ca * cb;
        if (slot == 0) out.terms.erase(e);
      }
    return out;
  }

  friend MPoly operator-(const MPoly& a) { return constant(-1) * a; }
};

}  // namespace cubix
