#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "numeric.hpp"

namespace cubix {

/*
 * Dense binary form of degree n in (x, y): coeff[i] multiplies x^i y^(n-i).
 * Forms are kept homogeneous; multiplication is coefficient convolution,
 * which keeps every identity check exact.
 */
template <typename T>
struct BinForm {
  std::vector<T> coeff;  // size = degree + 1

  BinForm() : coeff(1, T(0)) {}
  explicit BinForm(std::vector<T> c) : coeff(std::move(c))
  {
    if (coeff.empty()) coeff.assign(1, T(0));
  }

  static BinForm zero(std::size_t degree) { return BinForm(std::vector<T>(degree + 1, T(0))); }

  /* p*x + q*y */
  static BinForm linear(const T& p, const T& q) { return BinForm(std::vector<T>{q, p}); }

  std::size_t degree() const { return coeff.size() - 1; }

  bool is_zero() const
  {
    for (const auto& c : coeff)
      if (!(c == T(0))) return false;
    return true;
  }

  friend bool operator==(const BinForm& a, const BinForm& b) { return a.coeff == b.coeff; }

  friend BinForm operator+(const BinForm& a, const BinForm& b)
  {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in form sum");
    BinForm out = zero(a.degree());
    for (std::size_t i = 0; i < a.coeff.size(); ++i) out.coeff[i] = a.coeff[i] + b.coeff[i];
    return out;
  }

  friend BinForm operator-(const BinForm& a, const BinForm& b)
  {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in form difference");
    BinForm out = zero(a.degree());
    for (std::size_t i = 0; i < a.coeff.size(); ++i) out.coeff[i] = a.coeff[i] - b.coeff[i];
    return out;
  }

  friend BinForm operator*(const BinForm& a, const BinForm& b)
  {
    BinForm out = zero(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.coeff.size(); ++i)
      for (std::size_t j = 0; j < b.coeff.size(); ++j) out.coeff[i + j] += a.coeff[i] * b.coeff[j];
    return out;
  }

  friend BinForm operator*(const T& s, const BinForm& a)
  {
    BinForm out = a;
    for (auto& c : out.coeff) c *= s;
    return out;
  }

  template <typename S>
  S eval(const S& x, const S& y) const
  {
    /* Horner in x with homogenizing powers of y. */
    S acc = S(coeff.back());
    for (std::size_t i = coeff.size() - 1; i-- > 0;) acc = acc * x + S(coeff[i]) * y_power(y, coeff.size() - 1 - i);
    return acc;
  }

  /* d/dx and d/dy lower the degree by one. */
  BinForm dx() const
  {
    if (degree() == 0) return zero(0);
    BinForm out = zero(degree() - 1);
    for (std::size_t i = 1; i < coeff.size(); ++i) out.coeff[i - 1] = T(static_cast<long>(i)) * coeff[i];
    return out;
  }

  BinForm dy() const
  {
    if (degree() == 0) return zero(0);
    BinForm out = zero(degree() - 1);
    for (std::size_t i = 0; i + 1 < coeff.size(); ++i)
      out.coeff[i] = T(static_cast<long>(degree() - i)) * coeff[i];
    return out;
  }

  /* Substitute a pair of linear forms: result = F(L1, L2). */
  BinForm compose_linear(const BinForm& l1, const BinForm& l2) const
  {
    std::size_t n = degree();
    BinForm out = zero(n);
    /* powers l1^i * l2^(n-i) built incrementally */
    std::vector<BinForm> pow1(n + 1, unit_form()), pow2(n + 1, unit_form());
    for (std::size_t i = 1; i <= n; ++i) pow1[i] = pow1[i - 1] * l1;
    for (std::size_t i = 1; i <= n; ++i) pow2[i] = pow2[i - 1] * l2;
    for (std::size_t i = 0; i <= n; ++i) out = out + coeff[i] * (pow1[i] * pow2[n - i]);
    return out;
  }

 private:
  static BinForm unit_form() { return BinForm(std::vector<T>{T(1)}); }

  template <typename S>
  static S y_power(const S& y, std::size_t k)
  {
    S acc = S(1);
    for (std::size_t i = 0; i < k; ++i) acc *= y;
    return acc;
  }
};

}  // namespace cubix
