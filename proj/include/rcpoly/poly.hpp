#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rcp {

// Exact integer-coefficient polynomial. coeffs()[i] multiplies x^i; trailing
// zeros are stripped, so the zero polynomial has an empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly constant(const mpz_class& c);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coeff(int i) const;
  const mpz_class& leading() const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  mpz_class evaluate(const mpz_class& x) const;

  // p(x - m)
  IntPoly shift_compose(unsigned long m) const;

  // "x^3 - 6x^2 + 11x - 6" style, highest power first.
  std::string to_string() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;

  bool operator==(const IntPoly&) const = default;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

enum class Order { Less, Equal, Greater };

struct EventualComparison {
  Order order = Order::Equal;
  // Integer X* such that sign(p - q) is fixed for every real x >= X*
  // (Cauchy-type root bound on the difference); 0 when p == q.
  mpz_class witness = 0;
};

// Compares p and q for all sufficiently large x: the sign of the leading
// coefficient of p - q decides.
EventualComparison eventually_compare(const IntPoly& p, const IntPoly& q);

// Lagrange interpolation through (x0+i, values[i]). Exact rational
// intermediates; throws std::runtime_error if any final coefficient is not an
// integer.
IntPoly interpolate_integer_poly(long x0, const std::vector<mpz_class>& values);

}  // namespace rcp
