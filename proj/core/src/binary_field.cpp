#include "z4cb/binary_field.hpp"

#include <string>

#include "z4cb/error.hpp"

namespace z4cb {

namespace {

// x^e mod g for a modulus given as a bit mask of degree m.
std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int m) {
  const std::uint32_t top = 1U << m;
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return r;
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t modulus, int m) {
  std::uint32_t r = 1;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, modulus, m);
    a = mulmod(a, a, modulus, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

BinaryPoly BinaryPoly::parse(std::string_view coeffs) {
  if (coeffs.empty() || coeffs.size() > 32)
    throw Error(ErrorKind::InvalidParams, "binary polynomial string must have 1..32 digits");
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == '1') {
      mask |= 1U << i;
    } else if (coeffs[i] != '0') {
      throw Error(ErrorKind::InvalidParams, "binary polynomial digits must be 0 or 1: " + std::string(coeffs));
    }
  }
  return BinaryPoly(mask);
}

BinaryPoly BinaryPoly::smallest_primitive(int m) {
  if (m < kMinDegree || m > kMaxDegree)
    throw Error(ErrorKind::TooLarge, "degree m=" + std::to_string(m) + " outside supported range [2, 20]");
  const std::uint32_t top = 1U << m;
  for (std::uint32_t low = 1; low < top; low += 2) {
    BinaryPoly candidate(top | low);
    if (candidate.is_primitive()) return candidate;
  }
  throw Error(ErrorKind::NonPrimitiveInput, "no primitive polynomial found");  // unreachable
}

bool BinaryPoly::is_primitive() const {
  const int m = degree();
  if (m < 1 || m > kMaxDegree) return false;
  const std::uint64_t n = (1ULL << m) - 1;
  const std::uint32_t x = m == 1 ? (0b10U ^ mask_) : 0b10U;
  if (powmod(x, n, mask_, m) != 1U) return false;
  for (std::uint64_t p : prime_factors(n)) {
    if (powmod(x, n / p, mask_, m) == 1U) return false;
  }
  return true;
}

std::string BinaryPoly::to_string() const {
  std::string s;
  const int d = degree();
  for (int i = 0; i <= d; ++i) s.push_back(coeff(i) ? '1' : '0');
  return s;
}

BinaryField::BinaryField(BinaryPoly modulus)
    : m_(modulus.degree()), modulus_(modulus), reduce_mask_(modulus.mask()) {
  if (m_ < kMinDegree || m_ > kMaxDegree)
    throw Error(ErrorKind::TooLarge, "field degree outside supported range [2, 20]");
  if (!modulus.is_primitive())
    throw Error(ErrorKind::NonPrimitiveInput, "modulus " + modulus.to_string() + " is not primitive");

  // tr is F_2-linear; record tr(omega^i) for each basis element.
  for (int i = 0; i < m_; ++i) {
    FieldElement basis{1U << i};
    FieldElement acc = basis;
    FieldElement term = basis;
    for (int k = 1; k < m_; ++k) {
      term = square(term);
      acc += term;
    }
    if (acc.bits > 1) throw Error(ErrorKind::InvalidParams, "trace left the prime field");
    if (acc.bits == 1) trace_mask_ |= 1U << i;
  }

  if (m_ <= kMaxTableDegree) {
    const std::uint32_t n = group_order();
    exp_.resize(n);
    log_.assign(order(), 0);
    std::uint32_t v = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
      exp_[k] = v;
      log_[v] = k;
      v = mulmod(v, 2U, reduce_mask_, m_);
    }
  }
}

FieldElement BinaryField::mul(FieldElement a, FieldElement b) const {
  return {mulmod(a.bits, b.bits, reduce_mask_, m_)};
}

FieldElement BinaryField::pow(FieldElement a, std::uint64_t e) const {
  return {powmod(a.bits, e, reduce_mask_, m_)};
}

FieldElement BinaryField::inverse(FieldElement a) const {
  if (a.is_zero()) throw Error(ErrorKind::NotInvertible, "zero has no inverse in F_2^m");
  return pow(a, group_order() - 1U);
}

FieldElement BinaryField::exp(std::uint64_t k) const {
  k %= group_order();
  if (!exp_.empty()) return {exp_[k]};
  return pow(generator(), k);
}

std::uint32_t BinaryField::log(FieldElement a) const {
  if (log_.empty()) throw Error(ErrorKind::TooLarge, "discrete log tables are only built for m <= 14");
  if (a.is_zero()) throw Error(ErrorKind::InvalidParams, "log of zero");
  return log_[a.bits];
}

FieldElement BinaryField::relative_trace(FieldElement a, int e) const {
  if (e < 1 || m_ % e != 0)
    throw Error(ErrorKind::BadTower, "relative trace tr_" + std::to_string(e) + "^" + std::to_string(m_) +
                                         " requires e | m");
  FieldElement acc = a;
  FieldElement term = a;
  for (int i = 1; i < m_ / e; ++i) {
    for (int s = 0; s < e; ++s) term = square(term);
    acc += term;
  }
  return acc;
}

FieldElement BinaryField::subfield_generator(int e) const {
  if (e < 1 || m_ % e != 0)
    throw Error(ErrorKind::BadTower, "F_2^" + std::to_string(e) + " is not a subfield of F_2^" + std::to_string(m_));
  const std::uint64_t cofactor = group_order() / ((1ULL << e) - 1);
  return exp(cofactor);
}

bool BinaryField::in_subfield(FieldElement a, int e) const {
  if (e < 1 || m_ % e != 0) return false;
  FieldElement t = a;
  for (int s = 0; s < e; ++s) t = square(t);
  return t == a;
}

}  // namespace z4cb
