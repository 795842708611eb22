#include "sumset/rational.hpp"

#include <stdexcept>

namespace sumset {
namespace {

Wide mul_or_throw(Wide a, Wide b) {
  auto r = checked_mul(a, b);
  if (!r) throw std::overflow_error("rational arithmetic overflow");
  return *r;
}

Wide add_or_throw(Wide a, Wide b) {
  auto r = checked_add(a, b);
  if (!r) throw std::overflow_error("rational arithmetic overflow");
  return *r;
}

}  // namespace

Rational::Rational(Wide num, Wide den) : num_(num), den_(den) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Wide g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

double Rational::to_double() const { return static_cast<double>(to_long_double()); }

long double Rational::to_long_double() const {
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

Rational Rational::operator+(const Rational& o) const {
  Wide g = gcd(den_, o.den_);
  Wide l = mul_or_throw(den_ / g, o.den_);
  return Rational(add_or_throw(mul_or_throw(num_, l / den_), mul_or_throw(o.num_, l / o.den_)), l);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  Wide g1 = gcd(num_, o.den_);
  Wide g2 = gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(mul_or_throw(num_ / g1, o.num_ / g2), mul_or_throw(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this * Rational(o.den_, o.num_);
}

Rational Rational::pow(unsigned exp) const {
  Rational r(1);
  for (unsigned i = 0; i < exp; ++i) r = r * *this;
  return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  auto lhs = checked_mul(num_, o.den_);
  auto rhs = checked_mul(o.num_, den_);
  if (lhs && rhs) return *lhs <=> *rhs;
  // Fall back to exact comparison of integer parts and fractional remainders.
  Rational a = *this;
  Rational b = o;
  for (;;) {
    Wide qa = a.num_ / a.den_ - ((a.num_ % a.den_) < 0 ? 1 : 0);
    Wide qb = b.num_ / b.den_ - ((b.num_ % b.den_) < 0 ? 1 : 0);
    if (qa != qb) return qa <=> qb;
    Wide ra = a.num_ - qa * a.den_;
    Wide rb = b.num_ - qb * b.den_;
    if (ra == 0 || rb == 0) return ra <=> rb;
    // ra/da vs rb/db  <=>  db/rb vs da/ra (reversed)
    Rational na(a.den_, ra);
    Rational nb(b.den_, rb);
    a = nb;
    b = na;
  }
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

}  // namespace sumset
