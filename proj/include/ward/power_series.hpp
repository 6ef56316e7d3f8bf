#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ward/exact_arith.hpp"

namespace ward {

/// c_0 + c_1 x + ... + c_N x^N, with all arithmetic exact through x^N and
/// everything above discarded. Both operands of a binary operation must
/// share the same order.
template <typename Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  TruncatedSeries(std::size_t order, std::initializer_list<Coeff> init) : coeffs_(order + 1) {
    std::size_t i = 0;
    for (const auto& c : init) {
      if (i > order) break;
      coeffs_[i++] = c;
    }
  }

  static TruncatedSeries constant(std::size_t order, Coeff c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }

  // x^power, or zero when power exceeds the order.
  static TruncatedSeries monomial(std::size_t order, std::size_t power, Coeff c = Coeff(1)) {
    TruncatedSeries s(order);
    if (power <= order) s.coeffs_[power] = std::move(c);
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }

  // Coefficient of x^i; zero beyond the order.
  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  void set(std::size_t i, Coeff c) {
    if (i < coeffs_.size()) coeffs_[i] = std::move(c);
  }

  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i <= std::min(order, this->order()); ++i) s.coeffs_[i] = coeffs_[i];
    return s;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    TruncatedSeries r(a.order());
    const std::size_t n = a.coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == Coeff(0)) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  TruncatedSeries scaled(const Coeff& c) const {
    TruncatedSeries r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }
  TruncatedSeries divided(const Coeff& c) const {
    if (c == Coeff(0)) throw DivisionError("TruncatedSeries: division by zero scalar");
    TruncatedSeries r(*this);
    for (auto& x : r.coeffs_) x /= c;
    return r;
  }

  TruncatedSeries pow(unsigned long exponent) const {
    TruncatedSeries result = constant(order(), Coeff(1));
    TruncatedSeries base = *this;
    while (exponent > 0) {
      if (exponent & 1UL) result *= base;
      exponent >>= 1;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  // Multiplicative inverse; the constant term must be nonzero.
  TruncatedSeries inverse() const {
    if (coeffs_[0] == Coeff(0)) {
      throw DivisionError("TruncatedSeries::inverse: constant term is zero");
    }
    TruncatedSeries r(order());
    const Coeff c0 = coeffs_[0];
    r.coeffs_[0] = Coeff(1) / c0;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      Coeff acc(0);
      for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * r.coeffs_[n - i];
      r.coeffs_[n] = -acc / c0;
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    bool first = true;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
      if (s.coeffs_[i] == Coeff(0)) continue;
      if (!first) os << " + ";
      os << '(' << s.coeffs_[i] << ")x^" << i;
      first = false;
    }
    if (first) os << '0';
    return os << " + O(x^" << s.coeffs_.size() << ')';
  }

 private:
  void check_order(const TruncatedSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size()) {
      throw std::invalid_argument("TruncatedSeries: order mismatch");
    }
  }

  std::vector<Coeff> coeffs_;
};

using PowerSeries = TruncatedSeries<Rational>;

}  // namespace ward
