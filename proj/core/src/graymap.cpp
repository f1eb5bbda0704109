#include "z4cb/graymap.hpp"

#include "z4cb/error.hpp"

namespace z4cb {

BooleanFn::BooleanFn(int d, std::vector<std::uint8_t> bits) : d_(d), bits_(std::move(bits)) {
  if (bits_.size() != (std::size_t{1} << d_)) throw Error(ErrorKind::DimensionMismatch, "truth table must have 2^d entries");
  for (auto& b : bits_) b &= 1U;
}

std::pair<BooleanFn, BooleanFn> decompose(const QuadraticForm& q) {
  const int m = q.degree();
  BooleanFn q1(m);
  BooleanFn q2(m);
  for (std::uint32_t u = 0; u < q1.size(); ++u) {
    const Z4 v = q.at_field(FieldElement{u});
    q1.set(u, v.low());
    q2.set(u, v.high());
  }
  return {std::move(q1), std::move(q2)};
}

BooleanFn gray(const QuadraticForm& q) {
  const auto [q1, q2] = decompose(q);
  BooleanFn phi(q.degree() + 1);
  for (std::size_t u = 0; u < q1.size(); ++u) {
    phi.set(2 * u, q2.at(u));
    phi.set(2 * u + 1, q1.at(u) ^ q2.at(u));
  }
  return phi;
}

IntSpectrum walsh_hadamard(const BooleanFn& f) {
  IntSpectrum s;
  s.d = f.dimension();
  s.values.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) s.values[i] = f.at(i) ? -1 : 1;
  const std::size_t n = s.values.size();
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int64_t a = s.values[j];
        const std::int64_t b = s.values[j + len];
        s.values[j] = a + b;
        s.values[j + len] = a - b;
      }
    }
  }
  return s;
}

bool is_boolean_bent(const BooleanFn& f) {
  const int d = f.dimension();
  if (d % 2 != 0) throw Error(ErrorKind::OddDimension, "bentness needs an even number of variables, got d=" + std::to_string(d));
  const std::int64_t target = std::int64_t{1} << (d / 2);
  for (std::int64_t w : walsh_hadamard(f).values)
    if (w != target && w != -target) return false;
  return true;
}

}  // namespace z4cb
