#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "z4cb/forms.hpp"

namespace z4cb {

/// Boolean function on F_2^d given by its truth table; index bit i is
/// coordinate i (for F_2^m, the coefficient of omega^i).
class BooleanFn {
 public:
  explicit BooleanFn(int d) : d_(d), bits_(std::size_t{1} << d, 0) {}
  BooleanFn(int d, std::vector<std::uint8_t> bits);

  int dimension() const { return d_; }
  std::size_t size() const { return bits_.size(); }
  int at(std::size_t idx) const { return bits_[idx]; }
  void set(std::size_t idx, int v) { bits_[idx] = static_cast<std::uint8_t>(v & 1); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const BooleanFn&, const BooleanFn&) = default;

 private:
  int d_;
  std::vector<std::uint8_t> bits_;
};

/// Walsh-Hadamard values W(w) = sum_u (-1)^(f(u) + <w,u>).
struct IntSpectrum {
  int d = 0;
  std::vector<std::int64_t> values;
};

/// Q(x) = q1(mu(x)) + 2 q2(mu(x)), with q1, q2 indexed by mu(x).
std::pair<BooleanFn, BooleanFn> decompose(const QuadraticForm& q);
/// phi(Q)(u, v) = q1(u) v + q2(u) on F_2^m x F_2, index 2*u + v.
BooleanFn gray(const QuadraticForm& q);
IntSpectrum walsh_hadamard(const BooleanFn& f);
/// |W(w)| = 2^(d/2) for every w. OddDimension when d is odd.
bool is_boolean_bent(const BooleanFn& f);

}  // namespace z4cb
