#include "z4cb/galois_ring.hpp"

#include <array>
#include <string>

#include "z4cb/error.hpp"

namespace z4cb {

Z4Poly Z4Poly::parse(std::string_view coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidParams, "empty Z4 polynomial string");
  std::vector<Z4> out;
  out.reserve(coeffs.size());
  for (char ch : coeffs) {
    if (ch < '0' || ch > '3')
      throw Error(ErrorKind::InvalidParams, "Z4 polynomial digits must be 0..3: " + std::string(coeffs));
    out.emplace_back(ch - '0');
  }
  return Z4Poly(std::move(out));
}

BinaryPoly Z4Poly::reduce_mod2() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].low()) mask |= 1U << i;
  }
  return BinaryPoly(mask);
}

std::string Z4Poly::to_string() const {
  std::string s;
  for (Z4 c : coeffs_) s.push_back(static_cast<char>('0' + c.value()));
  return s;
}

Z4Poly hensel_lift(const BinaryPoly& g) {
  const int m = g.degree();
  if (m < kMinDegree)
    throw Error(ErrorKind::NonPrimitiveInput, "lift requires degree m >= 2, got " + std::to_string(m));
  if (m > kMaxDegree) throw Error(ErrorKind::TooLarge, "degree m > 20 is not supported");
  if (!g.is_primitive())
    throw Error(ErrorKind::NonPrimitiveInput, "polynomial " + g.to_string() + " is not primitive over F_2");

  // g(y) * g(-y) over the integers; odd-degree terms cancel.
  std::vector<int> prod(static_cast<std::size_t>(2 * m + 1), 0);
  for (int i = 0; i <= m; ++i) {
    if (!g.coeff(i)) continue;
    for (int j = 0; j <= m; ++j) {
      if (!g.coeff(j)) continue;
      prod[static_cast<std::size_t>(i + j)] += (j % 2 == 0) ? 1 : -1;
    }
  }
  const int sign = (m % 2 == 0) ? 1 : -1;
  std::vector<Z4> f;
  f.reserve(static_cast<std::size_t>(m + 1));
  for (int k = 0; k <= m; ++k) f.emplace_back(sign * prod[static_cast<std::size_t>(2 * k)]);
  return Z4Poly(std::move(f));
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  if (a.tag_ != b.tag_) throw Error(ErrorKind::ContextMismatch, "ring elements from different Galois rings");
  return {a.lo_ ^ b.lo_, a.hi_ ^ b.hi_ ^ (a.lo_ & b.lo_), a.tag_};
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

std::string to_string(TeichElement t) {
  return t.is_zero() ? std::string("zero") : std::to_string(t.exponent());
}

std::uint64_t GaloisRing::make_tag(const Z4Poly& f) {
  std::uint64_t tag = static_cast<std::uint64_t>(f.degree()) << 48;
  for (int i = 0; i < f.degree(); ++i) tag |= static_cast<std::uint64_t>(f.coeff(i).value()) << (2 * i);
  return tag;
}

GaloisRing::GaloisRing(BinaryPoly g) : field_(g), m_(g.degree()), f_(hensel_lift(g)), tag_(make_tag(f_)) {
  neg_f_.resize(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) neg_f_[static_cast<std::size_t>(i)] = (-f_.coeff(i)).value();

  const std::uint32_t n = group_order();
  if (pow(xi(), n) != one())
    throw Error(ErrorKind::NonPrimitiveInput, "lifted polynomial " + f_.to_string() + " does not give xi of order 2^m-1");

  if (m_ <= kMaxTableDegree) {
    teich_lo_.resize(n);
    teich_hi_.resize(n);
    teich_index_.reserve(n);
    RingElement v = one();
    for (std::uint32_t k = 0; k < n; ++k) {
      teich_lo_[k] = v.lo();
      teich_hi_[k] = v.hi();
      teich_index_.emplace((static_cast<std::uint64_t>(v.hi()) << 32) | v.lo(), k);
      v = mul(v, xi());
    }
    // Tr(xi^k) = sum over the Frobenius orbit xi^(k 2^i).
    teich_trace_.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      RingElement acc = zero();
      std::uint64_t e = k;
      for (int i = 0; i < m_; ++i) {
        acc = acc + RingElement(teich_lo_[e], teich_hi_[e], tag_);
        e = (e * 2) % n;
      }
      if ((acc.lo() >> 1) != 0 || (acc.hi() >> 1) != 0)
        throw Error(ErrorKind::InvalidParams, "trace of xi^" + std::to_string(k) + " is not in Z4");
      teich_trace_[k] = acc.coeff(0);
    }
  }
}

std::shared_ptr<const GaloisRing> GaloisRing::create(BinaryPoly g) { return std::make_shared<const GaloisRing>(g); }

std::shared_ptr<const GaloisRing> GaloisRing::create(int m) {
  return std::make_shared<const GaloisRing>(BinaryPoly::smallest_primitive(m));
}

const RingElement& GaloisRing::check(const RingElement& a) const {
  if (a.tag() != tag_) throw Error(ErrorKind::ContextMismatch, "ring element does not belong to " + describe());
  return a;
}

RingElement GaloisRing::constant(Z4 c) const {
  return {static_cast<std::uint32_t>(c.low()), static_cast<std::uint32_t>(c.high()), tag_};
}

RingElement GaloisRing::from_coeffs(const std::vector<Z4>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > m_)
    throw Error(ErrorKind::DimensionMismatch, "too many coefficients for GR(4," + std::to_string(m_) + ")");
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    lo |= static_cast<std::uint32_t>(coeffs[i].low()) << i;
    hi |= static_cast<std::uint32_t>(coeffs[i].high()) << i;
  }
  return {lo, hi, tag_};
}

RingElement GaloisRing::add(const RingElement& a, const RingElement& b) const { return check(a) + check(b); }
RingElement GaloisRing::sub(const RingElement& a, const RingElement& b) const { return check(a) - check(b); }
RingElement GaloisRing::neg(const RingElement& a) const { return -check(a); }

RingElement GaloisRing::mul(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  std::array<int, 2 * kMaxDegree> prod{};
  for (int i = 0; i < m_; ++i) {
    const int ai = a.coeff(i).value();
    if (ai == 0) continue;
    for (int j = 0; j < m_; ++j) prod[static_cast<std::size_t>(i + j)] += ai * b.coeff(j).value();
  }
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    const int c = prod[static_cast<std::size_t>(k)] & 3;
    if (c == 0) continue;
    for (int i = 0; i < m_; ++i) prod[static_cast<std::size_t>(k - m_ + i)] += c * neg_f_[static_cast<std::size_t>(i)];
  }
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  for (int i = 0; i < m_; ++i) {
    const int c = prod[static_cast<std::size_t>(i)] & 3;
    lo |= static_cast<std::uint32_t>(c & 1) << i;
    hi |= static_cast<std::uint32_t>(c >> 1) << i;
  }
  return {lo, hi, tag_};
}

RingElement GaloisRing::pow(RingElement a, std::uint64_t e) const {
  RingElement r = one();
  check(a);
  while (e != 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

RingElement GaloisRing::scale(Z4 c, const RingElement& a) const { return mul(constant(c), a); }

RingElement GaloisRing::inverse(const RingElement& a) const {
  if (!is_invertible(a)) throw Error(ErrorKind::NotInvertible, "element with mu(z) = 0 is not a unit");
  // The unit group has order (2^m - 1) 2^m.
  const std::uint64_t unit_order = static_cast<std::uint64_t>(group_order()) << m_;
  return pow(a, unit_order - 1);
}

std::pair<RingElement, RingElement> GaloisRing::two_adic_decompose_ring(const RingElement& z) const {
  check(z);
  RingElement a = z;
  for (int i = 0; i < m_; ++i) a = mul(a, a);
  const RingElement twice_b = z - a;  // all coefficients even
  RingElement b{twice_b.hi(), 0, tag_};
  for (int i = 0; i < m_; ++i) b = mul(b, b);
  return {a, b};
}

std::pair<TeichElement, TeichElement> GaloisRing::two_adic_decompose(const RingElement& z) const {
  auto [a, b] = two_adic_decompose_ring(z);
  return {to_teich(a), to_teich(b)};
}

RingElement GaloisRing::frobenius(const RingElement& z) const {
  auto [a, b] = two_adic_decompose_ring(z);
  const RingElement b2 = mul(b, b);
  return mul(a, a) + (b2 + b2);
}

Z4 GaloisRing::trace_definitional(const RingElement& a, const RingElement& b) const {
  RingElement acc = zero();
  RingElement sa = a;
  RingElement sb = b;
  for (int i = 0; i < m_; ++i) {
    acc = acc + sa + sb + sb;
    sa = mul(sa, sa);
    sb = mul(sb, sb);
  }
  if ((acc.lo() >> 1) != 0 || (acc.hi() >> 1) != 0)
    throw Error(ErrorKind::InvalidParams, "trace sum is not a constant");
  return acc.coeff(0);
}

Z4 GaloisRing::trace(const RingElement& z) const {
  auto [a, b] = two_adic_decompose_ring(z);
  return trace_definitional(a, b);
}

RingElement GaloisRing::to_ring(TeichElement t) const {
  if (t.is_zero()) return zero();
  const std::uint32_t k = t.exponent() % group_order();
  if (has_tables()) return {teich_lo_[k], teich_hi_[k], tag_};
  return pow(xi(), k);
}

TeichElement GaloisRing::to_teich(const RingElement& z) const {
  check(z);
  if (z.is_zero()) return TeichElement::zero();
  if (!has_tables()) throw Error(ErrorKind::TooLarge, "Teichmuller lookup tables are only built for m <= 14");
  auto it = teich_index_.find((static_cast<std::uint64_t>(z.hi()) << 32) | z.lo());
  if (it == teich_index_.end()) throw Error(ErrorKind::InvalidParams, "ring element is not in the Teichmuller set");
  return TeichElement::power(it->second);
}

bool GaloisRing::is_teichmuller(const RingElement& z) const {
  RingElement p = check(z);
  for (int i = 0; i < m_; ++i) p = mul(p, p);
  return p == z;
}

FieldElement GaloisRing::mu(TeichElement t) const {
  if (t.is_zero()) return field_.zero();
  return field_.exp(t.exponent());
}

TeichElement GaloisRing::lift(FieldElement x) const { return TeichElement::from_index(index_of(x)); }

std::vector<TeichElement> GaloisRing::teichmuller_set() const {
  std::vector<TeichElement> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(TeichElement::from_index(i));
  return out;
}

TeichElement GaloisRing::teich_mul(TeichElement a, TeichElement b) const {
  if (a.is_zero() || b.is_zero()) return TeichElement::zero();
  return teich_power(static_cast<std::uint64_t>(a.exponent()) + b.exponent());
}

TeichElement GaloisRing::teich_pow(TeichElement t, std::uint64_t e) const {
  if (t.is_zero()) return e == 0 ? TeichElement::power(0) : TeichElement::zero();
  const std::uint64_t n = group_order();
  const std::uint64_t k = (static_cast<std::uint64_t>(t.exponent()) * (e % n)) % n;
  return TeichElement::power(static_cast<std::uint32_t>(k));
}

TeichElement GaloisRing::teich_add(TeichElement a, TeichElement b) const {
  const TeichElement root = teich_pow(teich_mul(a, b), std::uint64_t{1} << (m_ - 1));
  const RingElement r = to_ring(root);
  return to_teich(to_ring(a) + to_ring(b) + r + r);
}

Z4 GaloisRing::trace(TeichElement t) const {
  if (t.is_zero()) return Z4(0);
  if (has_tables()) return teich_trace_[t.exponent() % group_order()];
  return trace_definitional(to_ring(t), zero());
}

std::string GaloisRing::describe() const {
  return "GR(4," + std::to_string(m_) + ") g=" + binary_poly().to_string() + " f=" + f_.to_string();
}

}  // namespace z4cb
