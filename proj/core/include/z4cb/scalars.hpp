#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace z4cb {

/// Integer modulo 4. Values are always kept in {0, 1, 2, 3}.
class Z4 {
 public:
  constexpr Z4() = default;
  constexpr explicit Z4(int v) : v_(static_cast<std::uint8_t>(((v % 4) + 4) % 4)) {}

  constexpr int value() const { return v_; }
  constexpr bool is_even() const { return (v_ & 1U) == 0; }
  /// Bits of the 2-adic digits: v = low() + 2 * high().
  constexpr int low() const { return v_ & 1; }
  constexpr int high() const { return (v_ >> 1) & 1; }

  friend constexpr Z4 operator+(Z4 a, Z4 b) { return Z4::raw((a.v_ + b.v_) & 3U); }
  friend constexpr Z4 operator-(Z4 a, Z4 b) { return Z4::raw((a.v_ + 4U - b.v_) & 3U); }
  friend constexpr Z4 operator*(Z4 a, Z4 b) { return Z4::raw((a.v_ * b.v_) & 3U); }
  constexpr Z4 operator-() const { return Z4::raw((4U - v_) & 3U); }
  constexpr Z4& operator+=(Z4 o) { return *this = *this + o; }
  constexpr Z4& operator-=(Z4 o) { return *this = *this - o; }

  friend constexpr bool operator==(Z4, Z4) = default;

 private:
  static constexpr Z4 raw(unsigned v) {
    Z4 z;
    z.v_ = static_cast<std::uint8_t>(v);
    return z;
  }
  std::uint8_t v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Z4 z) { return os << z.value(); }

/// Exact Gaussian integer re + i*im.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  /// i^k for k taken mod 4.
  static constexpr GaussInt i_power(int k) {
    switch (k & 3) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  constexpr std::int64_t norm() const { return re * re + im * im; }
  constexpr GaussInt conj() const { return {re, -im}; }

  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  constexpr GaussInt& operator+=(GaussInt o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend constexpr bool operator==(GaussInt, GaussInt) = default;
};

inline std::ostream& operator<<(std::ostream& os, GaussInt g) {
  return os << '(' << g.re << (g.im < 0 ? "-" : "+") << (g.im < 0 ? -g.im : g.im) << "i)";
}

}  // namespace z4cb
