#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "sumset/arith.hpp"

namespace sumset {

/// Exact rational with 128-bit numerator and denominator, always reduced
/// with a positive denominator. Arithmetic throws std::overflow_error when
/// an intermediate leaves 127 bits.
class Rational {
 public:
  Rational() = default;
  Rational(Wide num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(Wide num, Wide den);

  Wide num() const { return num_; }
  Wide den() const { return den_; }
  double to_double() const;
  long double to_long_double() const;
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }
  Rational pow(unsigned exp) const;

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  std::string str() const;

 private:
  Wide num_ = 0;
  Wide den_ = 1;
};

}  // namespace sumset
