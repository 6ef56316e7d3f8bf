#pragma once

// Exact integer and rational arithmetic plus the factorial family.
//
// Integer and Rational are thin value types over GMP; every operation is
// pure and the types are safe to share across threads once constructed.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ward {

class Integer {
 public:
  Integer() = default;

  template <std::integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<signed long>(v);
    } else {
      value_ = static_cast<unsigned long>(v);
    }
  }

  explicit Integer(mpz_class v) : value_(std::move(v)) {}

  // Accepts an optional sign followed by decimal digits, nothing else.
  static Integer parse(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      digits.remove_prefix(1);
    }
    if (digits.empty()) {
      throw std::invalid_argument("Integer::parse: empty number");
    }
    for (char c : digits) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("Integer::parse: not a decimal integer: '" +
                                    std::string(text) + "'");
      }
    }
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return Integer(mpz_class(s, 10));
  }

  std::string to_string() const { return value_.get_str(10); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  // Number of bits in |x|; 0 for zero.
  std::size_t bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
  }

  bool fits_long() const { return value_.fits_slong_p(); }
  long to_long() const {
    if (!fits_long()) throw std::overflow_error("Integer does not fit in long");
    return value_.get_si();
  }

  const mpz_class& mpz() const { return value_; }

  Integer operator-() const { return Integer(mpz_class(-value_)); }
  Integer abs() const { return Integer(mpz_class(::abs(value_))); }

  Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
  Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
  Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& x) {
    return os << x.to_string();
  }

 private:
  mpz_class value_;
};

class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Throws DivisionError unless divisor divides dividend.
inline Integer exact_divide(const Integer& dividend, const Integer& divisor) {
  if (divisor.is_zero()) throw DivisionError("exact_divide: division by zero");
  if (!mpz_divisible_p(dividend.mpz().get_mpz_t(), divisor.mpz().get_mpz_t())) {
    throw DivisionError("exact_divide: " + dividend.to_string() +
                        " is not divisible by " + divisor.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), dividend.mpz().get_mpz_t(), divisor.mpz().get_mpz_t());
  return Integer(std::move(q));
}

inline Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(std::move(g));
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return Integer(std::move(r));
}

/// A reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) : value_(Integer(v).mpz()) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& v) : value_(v.mpz()) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator.is_zero()) throw DivisionError("Rational: zero denominator");
    value_ = mpq_class(numerator.mpz(), denominator.mpz());
    value_.canonicalize();
  }

  Integer numerator() const { return Integer(mpz_class(value_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(value_.get_den())); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  // Throws DivisionError when the value is not integral.
  Integer to_integer() const {
    if (!is_integer()) {
      throw DivisionError("Rational::to_integer: " + to_string() + " is not an integer");
    }
    return numerator();
  }

  Rational inverse() const {
    if (is_zero()) throw DivisionError("Rational::inverse: zero");
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
  }

  std::string to_string() const {
    return is_integer() ? numerator().to_string()
                        : numerator().to_string() + "/" + denominator().to_string();
  }

  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionError("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
  }

 private:
  mpq_class value_;
};

inline Rational pow(const Rational& base, unsigned long exponent) {
  return Rational(pow(base.numerator(), exponent), pow(base.denominator(), exponent));
}

// ---------------------------------------------------------------------------
// Factorial family

inline Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument " + std::to_string(n));
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Integer(std::move(r));
}

// x (x-1) ... (x-n+1); defined for every integer x.
inline Integer falling_factorial(const Integer& x, long n) {
  if (n < 0) throw std::invalid_argument("falling_factorial: negative length");
  Integer r = 1;
  for (long i = 0; i < n; ++i) {
    r *= x - Integer(i);
    if (r.is_zero()) break;
  }
  return r;
}

// x (x+1) ... (x+n-1).
inline Integer rising_factorial(const Integer& x, long n) {
  if (n < 0) throw std::invalid_argument("rising_factorial: negative length");
  Integer r = 1;
  for (long i = 0; i < n; ++i) {
    r *= x + Integer(i);
    if (r.is_zero()) break;
  }
  return r;
}

// Zero for k < 0 and for 0 <= n < k. A negative upper index uses
// C(n, k) = (-1)^k C(k - n - 1, k).
inline Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Integer(std::move(r));
  }
  Integer r = binomial(k - n - 1, k);
  return (k % 2 == 0) ? r : -r;
}

inline Integer sign_power(long k) { return (k % 2 == 0) ? Integer(1) : Integer(-1); }

}  // namespace ward
