#include "z4cb/rational.hpp"

#include <sstream>

#include "z4cb/error.hpp"

namespace z4cb {

__extension__ using Wide = __int128;

struct RationalAccess {
  static Rational from_wide(Wide num, Wide den);
};

namespace {

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr Wide kMax = static_cast<Wide>(INT64_MAX);

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = RationalAccess::from_wide(num, den);
}

Rational RationalAccess::from_wide(Wide num, Wide den) {
  if (den == 0) throw Error(ErrorKind::InvalidParams, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < -kMax || den > kMax)
    throw Error(ErrorKind::InvalidParams, "rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return RationalAccess::from_wide(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                             static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return RationalAccess::from_wide(static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_,
                             static_cast<Wide>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return RationalAccess::from_wide(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return RationalAccess::from_wide(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

}  // namespace z4cb
