#include "rcpoly/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcp {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) {
  return IntPoly(std::vector<mpz_class>{c});
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

const mpz_class& IntPoly::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::shift_compose(unsigned long m) const {
  if (m == 0 || is_zero()) return *this;
  // Horner in the polynomial ring: acc = acc*(x-m) + c_i, top down.
  std::vector<mpz_class> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<mpz_class> next(acc.size() + 1, mpz_class(0));
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      next[k] -= mpz_class(m) * acc[k];
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return IntPoly(std::move(acc));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const { return IntPoly() - *this; }

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

EventualComparison eventually_compare(const IntPoly& p, const IntPoly& q) {
  IntPoly d = p - q;
  if (d.is_zero()) return {Order::Equal, 0};
  EventualComparison cmp;
  cmp.order = d.leading() > 0 ? Order::Greater : Order::Less;
  // All real roots of d lie in |x| <= max(1, sum |c_i| / |c_deg|).
  mpz_class sum = 0;
  for (int i = 0; i < d.degree(); ++i) sum += abs(d.coeff(i));
  mpz_class lead = abs(d.leading());
  mpz_class bound = (sum + lead - 1) / lead;  // ceil
  if (bound < 1) bound = 1;
  cmp.witness = bound + 1;
  return cmp;
}

IntPoly interpolate_integer_poly(long x0, const std::vector<mpz_class>& values) {
  if (values.empty()) throw std::invalid_argument("interpolation needs at least one node");
  std::size_t m = values.size();
  std::vector<mpq_class> acc(m, mpq_class(0));
  for (std::size_t j = 0; j < m; ++j) {
    // numerator prod_{i != j} (x - (x0+i)), denominator prod_{i != j} (j - i)
    std::vector<mpz_class> num{1};
    mpz_class den = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      std::vector<mpz_class> next(num.size() + 1, mpz_class(0));
      mpz_class root = mpz_class(x0) + mpz_class(i);
      for (std::size_t k = 0; k < num.size(); ++k) {
        next[k + 1] += num[k];
        next[k] -= root * num[k];
      }
      num = std::move(next);
      den *= mpz_class(j) - mpz_class(i);
    }
    mpq_class scale(values[j], den);
    scale.canonicalize();
    for (std::size_t k = 0; k < num.size(); ++k) acc[k] += scale * num[k];
  }
  std::vector<mpz_class> coeffs(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (acc[k].get_den() != 1)
      throw std::runtime_error("interpolation produced non-integer coefficient at x^" +
                               std::to_string(k));
    coeffs[k] = acc[k].get_num();
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace rcp
