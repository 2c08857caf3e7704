#include "conelab/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace conelab {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw InputError("non-finite value");
  return Rational(mpq_class(value), Canonical{});
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) p = -p;
  return Rational(p, q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

void add_product(Rational& acc, const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  acc += a * b;
}

}  // namespace conelab
