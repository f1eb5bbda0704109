#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace z4cb {

/// Exact rational in lowest terms with a positive denominator.
///
/// Arithmetic is carried out in 128-bit intermediates and the result is
/// reduced; an Error(InvalidParams) is thrown if a reduced value does not fit
/// in 64 bits or the denominator is zero.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  friend struct RationalAccess;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Squared correlation magnitude |c_i c_j^H|^2.
using ExactMagnitude = Rational;

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace z4cb
