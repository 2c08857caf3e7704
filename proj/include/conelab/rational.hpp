#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace conelab {

/// Raised for malformed or inconsistent user input (dimension mismatch,
/// unparsable rationals, violated type invariants).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number in canonical form: gcd(|p|, q) = 1, q > 0.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by intent
  Rational(int value) : value_(value) {}   // NOLINT
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpq_class& value) : value_(value) {
    value_.canonicalize();
  }

  /// Exact value of a finite double.
  static Rational from_double(double value);

  /// Accepts "p", "-p", "p/q", "-p/q" with decimal digits; q must be nonzero.
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when q = 1; the sign sits on the numerator.
  std::string str() const { return value_.get_str(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-value_), Canonical{}); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  struct Canonical {};
  Rational(mpq_class value, Canonical) : value_(std::move(value)) {}

  mpq_class value_;
};

Rational abs(const Rational& r);

/// acc += a * b, skipping the multiplication when either factor is zero.
void add_product(Rational& acc, const Rational& a, const Rational& b);

}  // namespace conelab
