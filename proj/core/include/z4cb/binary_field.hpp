#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace z4cb {

/// Smallest and largest extension degree handled anywhere in the library.
inline constexpr int kMinDegree = 2;
inline constexpr int kMaxDegree = 20;
/// Full 2^m lookup tables are only built up to this degree.
inline constexpr int kMaxTableDegree = 14;

/// Monic polynomial over F_2 stored as a bit mask (bit i = coefficient of x^i).
class BinaryPoly {
 public:
  BinaryPoly() = default;
  explicit BinaryPoly(std::uint32_t mask) : mask_(mask) {}

  /// Parses a coefficient string, lowest degree first ("11001" = 1 + x + x^4).
  static BinaryPoly parse(std::string_view coeffs);
  /// Lexicographically smallest primitive polynomial of degree m, comparing
  /// coefficient masks as integers.
  static BinaryPoly smallest_primitive(int m);

  std::uint32_t mask() const { return mask_; }
  int degree() const { return mask_ == 0 ? -1 : 31 - std::countl_zero(mask_); }
  int coeff(int i) const { return static_cast<int>((mask_ >> i) & 1U); }

  /// True iff the class of x has multiplicative order 2^m - 1 modulo this
  /// polynomial (which also implies irreducibility).
  bool is_primitive() const;

  /// Lowest degree first.
  std::string to_string() const;

  friend bool operator==(const BinaryPoly&, const BinaryPoly&) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Element of F_{2^m}: residue of a binary polynomial mod the field modulus.
struct FieldElement {
  std::uint32_t bits = 0;

  bool is_zero() const { return bits == 0; }
  friend FieldElement operator+(FieldElement a, FieldElement b) { return {a.bits ^ b.bits}; }
  FieldElement& operator+=(FieldElement o) {
    bits ^= o.bits;
    return *this;
  }
  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// Prime factors of n (ascending, without multiplicity).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Arithmetic in F_{2^m} = F_2[x]/(g) carried out directly on bit vectors.
/// Logarithm tables are built for m <= kMaxTableDegree.
class BinaryField {
 public:
  explicit BinaryField(BinaryPoly modulus);

  int degree() const { return m_; }
  const BinaryPoly& modulus() const { return modulus_; }
  std::uint32_t order() const { return 1U << m_; }
  /// Order of the multiplicative group, 2^m - 1.
  std::uint32_t group_order() const { return (1U << m_) - 1U; }
  bool has_tables() const { return !log_.empty(); }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// omega, the class of x.
  FieldElement generator() const { return {2}; }

  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement square(FieldElement a) const { return mul(a, a); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  FieldElement inverse(FieldElement a) const;
  /// omega^k; table lookup when available.
  FieldElement exp(std::uint64_t k) const;
  /// Discrete log base omega. Requires tables and a nonzero argument.
  std::uint32_t log(FieldElement a) const;

  /// Absolute trace tr_1^m, via a precomputed linear mask.
  int trace(FieldElement a) const { return std::popcount(a.bits & trace_mask_) & 1; }
  /// tr_e^m(x) = sum_{i < m/e} x^{2^{e i}}. Throws BadTower unless e | m.
  FieldElement relative_trace(FieldElement a, int e) const;
  /// Canonical generator of the subfield F_{2^e}: omega^((2^m-1)/(2^e-1)).
  FieldElement subfield_generator(int e) const;
  bool in_subfield(FieldElement a, int e) const;

 private:
  int m_;
  BinaryPoly modulus_;
  std::uint32_t reduce_mask_;  // modulus without the leading x^m term
  std::uint32_t trace_mask_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace z4cb
