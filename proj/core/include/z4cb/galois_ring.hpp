#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "z4cb/binary_field.hpp"
#include "z4cb/scalars.hpp"

namespace z4cb {

/// Monic polynomial over Z4, lowest degree first.
class Z4Poly {
 public:
  Z4Poly() = default;
  explicit Z4Poly(std::vector<Z4> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Digits 0-3, lowest degree first ("3121" = 3 + y + 2y^2 + y^3).
  static Z4Poly parse(std::string_view coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Z4 coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Z4>& coeffs() const { return coeffs_; }
  BinaryPoly reduce_mod2() const;
  std::string to_string() const;

  friend bool operator==(const Z4Poly&, const Z4Poly&) = default;

 private:
  std::vector<Z4> coeffs_;
};

/// Graeffe lift of a primitive binary polynomial g to the basic irreducible
/// f over Z4 with f(y^2) = (-1)^m g(y) g(-y) mod 4. The class of y in
/// Z4[y]/(f) then has order 2^m - 1.
Z4Poly hensel_lift(const BinaryPoly& g);

/// Element of GR(4, m) stored as two bit planes: coefficient i equals
/// lo_i + 2*hi_i. The tag identifies the modulus f; arithmetic between
/// elements with different tags raises ContextMismatch.
class RingElement {
 public:
  RingElement() = default;
  RingElement(std::uint32_t lo, std::uint32_t hi, std::uint64_t tag) : lo_(lo), hi_(hi), tag_(tag) {}

  std::uint32_t lo() const { return lo_; }
  std::uint32_t hi() const { return hi_; }
  std::uint64_t tag() const { return tag_; }
  Z4 coeff(int i) const { return Z4(static_cast<int>(((lo_ >> i) & 1U) + 2 * ((hi_ >> i) & 1U))); }
  bool is_zero() const { return lo_ == 0 && hi_ == 0; }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  RingElement operator-() const { return {lo_, hi_ ^ lo_, tag_}; }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::uint32_t lo_ = 0;
  std::uint32_t hi_ = 0;
  std::uint64_t tag_ = 0;
};

/// Element of the Teichmuller set F: either zero or xi^k, 0 <= k < 2^m - 1.
/// The canonical index (zero first, then ascending exponent) is the order
/// used for every table indexed by F.
class TeichElement {
 public:
  constexpr TeichElement() = default;
  static constexpr TeichElement zero() { return TeichElement(); }
  /// xi^k. The exponent should already be reduced mod 2^m - 1; see
  /// GaloisRing::teich_power for a reducing constructor.
  static constexpr TeichElement power(std::uint32_t k) { return TeichElement(k + 1); }
  static constexpr TeichElement from_index(std::size_t idx) {
    return TeichElement(static_cast<std::uint32_t>(idx));
  }

  constexpr bool is_zero() const { return code_ == 0; }
  constexpr std::uint32_t exponent() const { return code_ - 1; }
  constexpr std::size_t index() const { return code_; }

  friend constexpr bool operator==(TeichElement, TeichElement) = default;
  friend constexpr auto operator<=>(TeichElement, TeichElement) = default;

 private:
  constexpr explicit TeichElement(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

std::string to_string(TeichElement t);

/// GR(4, m) = Z4[y]/(f) together with its Teichmuller set, the residue field
/// F_2^m and the trace maps. Immutable after construction; share through
/// std::shared_ptr<const GaloisRing>.
class GaloisRing {
 public:
  explicit GaloisRing(BinaryPoly g);
  static std::shared_ptr<const GaloisRing> create(BinaryPoly g);
  /// Uses the default (smallest primitive) polynomial of degree m.
  static std::shared_ptr<const GaloisRing> create(int m);

  int degree() const { return m_; }
  const BinaryPoly& binary_poly() const { return field_.modulus(); }
  const Z4Poly& lifted_poly() const { return f_; }
  const BinaryField& field() const { return field_; }
  std::uint64_t tag() const { return tag_; }
  /// |F| = 2^m.
  std::size_t size() const { return std::size_t{1} << m_; }
  std::uint32_t group_order() const { return field_.group_order(); }
  bool has_tables() const { return !teich_lo_.empty(); }

  RingElement zero() const { return {0, 0, tag_}; }
  RingElement one() const { return {1, 0, tag_}; }
  RingElement constant(Z4 c) const;
  /// The class of y, generator of the Teichmuller group.
  RingElement xi() const { return {2, 0, tag_}; }
  RingElement from_coeffs(const std::vector<Z4>& coeffs) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement pow(RingElement a, std::uint64_t e) const;
  RingElement scale(Z4 c, const RingElement& a) const;
  bool is_invertible(const RingElement& a) const { return check(a).lo() != 0; }
  /// Throws NotInvertible when mu(a) = 0.
  RingElement inverse(const RingElement& a) const;

  /// Coefficientwise reduction mod 2.
  FieldElement mu(const RingElement& a) const { return {check(a).lo()}; }

  /// z = a + 2b with a, b Teichmuller, returned as ring elements.
  std::pair<RingElement, RingElement> two_adic_decompose_ring(const RingElement& z) const;
  /// Same decomposition as TeichElement pair; requires tables (m <= 14).
  std::pair<TeichElement, TeichElement> two_adic_decompose(const RingElement& z) const;
  /// Frobenius sigma(a + 2b) = a^2 + 2 b^2.
  RingElement frobenius(const RingElement& z) const;
  /// Tr_1^m(z) = sum_i sigma^i(a) + 2 sigma^i(b); the sum is checked to be a constant.
  Z4 trace(const RingElement& z) const;

  // Teichmuller set.
  TeichElement teich_power(std::uint64_t k) const {
    return TeichElement::power(static_cast<std::uint32_t>(k % group_order()));
  }
  RingElement to_ring(TeichElement t) const;
  /// Inverse of to_ring; requires tables and z in F.
  TeichElement to_teich(const RingElement& z) const;
  bool is_teichmuller(const RingElement& z) const;
  FieldElement mu(TeichElement t) const;
  /// Teichmuller lift of a field element; requires tables.
  TeichElement lift(FieldElement x) const;
  std::vector<TeichElement> teichmuller_set() const;
  TeichElement teich_mul(TeichElement a, TeichElement b) const;
  /// a (+) b = a + b + 2 sqrt(ab), with sqrt = sigma^(m-1).
  TeichElement teich_add(TeichElement a, TeichElement b) const;
  /// t^e inside F.
  TeichElement teich_pow(TeichElement t, std::uint64_t e) const;
  /// Tr_1^m of a Teichmuller element (table lookup when available).
  Z4 trace(TeichElement t) const;

  /// Canonical F-index of the Teichmuller lift of x: 0 for zero, 1 + log(x).
  std::size_t index_of(FieldElement x) const { return x.is_zero() ? 0 : 1 + field_.log(x); }

  std::string describe() const;

 private:
  const RingElement& check(const RingElement& a) const;
  static std::uint64_t make_tag(const Z4Poly& f);
  Z4 trace_definitional(const RingElement& a_teich, const RingElement& b_teich) const;

  BinaryField field_;
  int m_;
  Z4Poly f_;
  std::vector<int> neg_f_;  // -f_i mod 4 for i < m (x^m reduction rule)
  std::uint64_t tag_;
  // Tables for m <= kMaxTableDegree, indexed by exponent.
  std::vector<std::uint32_t> teich_lo_;
  std::vector<std::uint32_t> teich_hi_;
  std::vector<Z4> teich_trace_;
  std::unordered_map<std::uint64_t, std::uint32_t> teich_index_;
};

}  // namespace z4cb
