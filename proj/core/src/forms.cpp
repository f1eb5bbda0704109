#include "z4cb/forms.hpp"

#include <bit>
#include <ostream>
#include <utility>

#include "z4cb/error.hpp"

namespace z4cb {

namespace {

void require_tables(const GaloisRing& ring, const char* what) {
  if (!ring.has_tables())
    throw Error(ErrorKind::TooLarge, std::string(what) + " needs 2^m tables, only available for m <= 14");
}

void require_same_ring(const QuadraticForm& a, const QuadraticForm& b) {
  if (a.ring().tag() != b.ring().tag())
    throw Error(ErrorKind::ContextMismatch, "forms are defined over different Galois rings");
}

// In-place Walsh-Hadamard butterfly over a power-of-two length.
template <typename T>
void fwht(std::vector<T>& v) {
  const std::size_t n = v.size();
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        T a = v[j];
        T b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

}  // namespace

QuadraticForm::QuadraticForm(RingPtr ring, std::vector<Z4> table, std::optional<FormDescriptor> descriptor)
    : ring_(std::move(ring)), table_(std::move(table)), descriptor_(std::move(descriptor)) {
  if (!ring_) throw Error(ErrorKind::InvalidParams, "quadratic form without a ring");
  require_tables(*ring_, "a quadratic form table");
  if (table_.size() != ring_->size())
    throw Error(ErrorKind::DimensionMismatch, "form table must have 2^m entries");
  if (table_[0] != Z4(0)) throw Error(ErrorKind::InvalidParams, "quadratic form must satisfy Q(0) = 0");
}

QuadraticForm QuadraticForm::zero(RingPtr ring) {
  const std::size_t n = ring->size();
  return QuadraticForm(std::move(ring), std::vector<Z4>(n), FormDescriptor{"zero", ""});
}

QuadraticForm QuadraticForm::with_entry(std::size_t index, Z4 value) const {
  if (index == 0 || index >= table_.size())
    throw Error(ErrorKind::InvalidParams, "with_entry index must be in [1, 2^m)");
  std::vector<Z4> t = table_;
  t[index] = value;
  return QuadraticForm(ring_, std::move(t), descriptor_);
}

Z4 eval_form(const QuadraticForm& q, TeichElement x) { return q(x); }

QuadraticForm subtract_forms(const QuadraticForm& q, const QuadraticForm& r) {
  require_same_ring(q, r);
  std::vector<Z4> t(q.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = q.at(i) - r.at(i);
  return QuadraticForm(q.ring_ptr(), std::move(t));
}

QuadraticForm add_forms(const QuadraticForm& q, const QuadraticForm& r) {
  require_same_ring(q, r);
  std::vector<Z4> t(q.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = q.at(i) + r.at(i);
  return QuadraticForm(q.ring_ptr(), std::move(t));
}

QuadraticForm scale_form(Z4 c, const QuadraticForm& q) {
  std::vector<Z4> t(q.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = c * q.at(i);
  return QuadraticForm(q.ring_ptr(), std::move(t));
}

QuadraticForm trace_monomial_form(const RingPtr& ring, TeichElement c, std::uint64_t e) {
  require_tables(*ring, "trace_monomial_form");
  std::vector<Z4> t(ring->size());
  for (std::size_t i = 1; i < t.size(); ++i) {
    const TeichElement x = TeichElement::from_index(i);
    t[i] = ring->trace(ring->teich_mul(c, ring->teich_pow(x, e)));
  }
  return QuadraticForm(ring, std::move(t),
                       FormDescriptor{"trace_monomial", "c=" + to_string(c) + ",e=" + std::to_string(e)});
}

QuadraticForm twice_trace_form(const RingPtr& ring) {
  require_tables(*ring, "twice_trace_form");
  std::vector<Z4> t(ring->size());
  for (std::size_t i = 1; i < t.size(); ++i)
    t[i] = Z4(2 * ring->field().trace(ring->mu(TeichElement::from_index(i))));
  return QuadraticForm(ring, std::move(t), FormDescriptor{"twice_trace", ""});
}

QuadraticForm random_quadratic_form(const RingPtr& ring, std::mt19937_64& rng) {
  const int m = ring->degree();
  const std::uint32_t n = ring->group_order();
  QuadraticForm q = QuadraticForm::zero(ring);
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    const TeichElement c = TeichElement::power(static_cast<std::uint32_t>(rng() % n));
    // i = m selects a linear term alpha Tr(c x); otherwise 2Tr(c x^(2^i+1)).
    const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(m + 1));
    if (i == m) {
      const Z4 alpha(1 + static_cast<int>(rng() % 3));
      q = add_forms(q, scale_form(alpha, trace_monomial_form(ring, c, 1)));
    } else {
      q = add_forms(q, scale_form(Z4(2), trace_monomial_form(ring, c, (std::uint64_t{1} << i) + 1)));
    }
  }
  return QuadraticForm(ring, std::vector<Z4>(q.table().begin(), q.table().end()), FormDescriptor{"random", ""});
}

BilinearMatrix::BilinearMatrix(int m, std::vector<std::uint32_t> rows) : m_(m), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != m_) throw Error(ErrorKind::DimensionMismatch, "bilinear matrix row count");
}

void BilinearMatrix::set(int i, int j, bool v) {
  auto& r = rows_[static_cast<std::size_t>(i)];
  if (v)
    r |= 1U << j;
  else
    r &= ~(1U << j);
}

bool BilinearMatrix::is_symmetric() const {
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

int BilinearMatrix::eval(FieldElement x, FieldElement y) const {
  int acc = 0;
  for (int i = 0; i < m_; ++i) {
    if ((x.bits >> i) & 1U) acc ^= std::popcount(rows_[static_cast<std::size_t>(i)] & y.bits) & 1;
  }
  return acc;
}

BilinearMatrix bilinear_matrix(const QuadraticForm& q) {
  const GaloisRing& ring = q.ring();
  const int m = ring.degree();
  BilinearMatrix mat(m);

  auto polar = [&](FieldElement x, FieldElement y) {
    const Z4 d = q.at_field(x + y) - q.at_field(x) - q.at_field(y);
    if (!d.is_even())
      throw Error(ErrorKind::OddDefect, "Q(x+y) - Q(x) - Q(y) is odd; table is not a Z4-valued quadratic form");
    return d.high();
  };

  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      const bool b = polar(FieldElement{1U << i}, FieldElement{1U << j}) != 0;
      mat.set(i, j, b);
      mat.set(j, i, b);
    }
  }

  // Every point x = x' (+) b_i with i the top coordinate of x.
  const std::uint32_t size = static_cast<std::uint32_t>(ring.size());
  for (std::uint32_t v = 1; v < size; ++v) {
    const int top = 31 - std::countl_zero(v);
    const FieldElement basis{1U << top};
    const FieldElement rest{v ^ basis.bits};
    if (rest.is_zero()) continue;
    if (polar(rest, basis) != mat.eval(rest, basis))
      throw Error(ErrorKind::NotQuadratic, "table is not consistent with a symmetric bilinear form");
  }
  return mat;
}

std::vector<FieldElement> radical(const BilinearMatrix& mat) {
  const int m = mat.dimension();
  std::vector<std::uint32_t> rows = mat.rows();
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < m && r < m; ++col) {
    int sel = -1;
    for (int i = r; i < m; ++i) {
      if ((rows[static_cast<std::size_t>(i)] >> col) & 1U) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(sel)]);
    for (int i = 0; i < m; ++i) {
      if (i != r && ((rows[static_cast<std::size_t>(i)] >> col) & 1U))
        rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
    }
    pivot_col.push_back(col);
    ++r;
  }

  std::uint32_t pivots = 0;
  for (int c : pivot_col) pivots |= 1U << c;
  std::vector<FieldElement> basis;
  for (int free = 0; free < m; ++free) {
    if ((pivots >> free) & 1U) continue;
    std::uint32_t v = 1U << free;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
      if ((rows[k] >> free) & 1U) v |= 1U << pivot_col[k];
    }
    basis.push_back(FieldElement{v});
  }
  return basis;
}

int rank(const BilinearMatrix& mat) { return mat.dimension() - static_cast<int>(radical(mat).size()); }

bool is_alternating(const QuadraticForm& q) {
  const BilinearMatrix mat = bilinear_matrix(q);
  for (int i = 0; i < mat.dimension(); ++i)
    if (mat.at(i, i)) return false;
  return true;
}

WalshSpectrum walsh_spectrum(const QuadraticForm& q) {
  const GaloisRing& ring = q.ring();
  const BinaryField& field = ring.field();
  const int m = ring.degree();
  if (m > kMaxTableDegree) throw Error(ErrorKind::TooLarge, "Walsh spectrum needs m <= 14");
  const std::uint32_t size = static_cast<std::uint32_t>(ring.size());

  // Reindex by mu(x), so the additive character becomes (-1)^<w, v>.
  std::vector<GaussInt> g(size);
  for (std::uint32_t v = 0; v < size; ++v) g[v] = GaussInt::i_power(q.at_field(FieldElement{v}).value());
  fwht(g);

  // tr(l v) = <T(l), v> with T(l)_i = tr(l omega^i); T is linear in l.
  std::vector<std::uint32_t> t_basis(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    std::uint32_t t = 0;
    for (int i = 0; i < m; ++i)
      if (field.trace(field.mul(FieldElement{1U << j}, FieldElement{1U << i}))) t |= 1U << i;
    t_basis[static_cast<std::size_t>(j)] = t;
  }

  WalshSpectrum s;
  s.m = m;
  s.values.resize(size);
  for (std::uint32_t l = 0; l < size; ++l) {
    std::uint32_t t = 0;
    for (int j = 0; j < m; ++j)
      if ((l >> j) & 1U) t ^= t_basis[static_cast<std::size_t>(j)];
    s.values[ring.index_of(FieldElement{l})] = g[t];
  }
  return s;
}

void write_spectrum_csv(std::ostream& os, const WalshSpectrum& s) {
  os << "lambda_exponent,re,im\n";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    os << to_string(TeichElement::from_index(i)) << ',' << s.values[i].re << ',' << s.values[i].im << '\n';
  }
}

std::string to_string(BentMethod m) { return m == BentMethod::walsh ? "walsh" : "rank"; }

BentMethod default_bent_method(int m) { return m <= 10 ? BentMethod::walsh : BentMethod::rank; }

bool is_generalized_bent(const QuadraticForm& q, BentMethod method) {
  const int m = q.degree();
  if (method == BentMethod::rank) return rank(bilinear_matrix(q)) == m;
  const std::int64_t target = std::int64_t{1} << m;
  for (const GaussInt& v : walsh_spectrum(q).values)
    if (v.norm() != target) return false;
  return true;
}

RankDistributionCheck spectrum_distribution(const WalshSpectrum& s, int r) {
  const int m = s.m;
  if (r % 2 != 0)
    throw Error(ErrorKind::NotApplicable, "value distribution is only tabulated for even rank, got r=" + std::to_string(r));
  if (r < 0 || r > m) throw Error(ErrorKind::InvalidParams, "rank outside [0, m]");
  RankDistributionCheck c;
  c.m = m;
  c.rank = r;
  c.magnitude = std::int64_t{1} << (m - r / 2);
  c.expected_zero = (std::int64_t{1} << m) - (std::int64_t{1} << r);
  c.expected_plus = ((std::int64_t{1} << r) + (std::int64_t{1} << (r / 2))) / 2;
  c.expected_minus = ((std::int64_t{1} << r) - (std::int64_t{1} << (r / 2))) / 2;
  for (const GaussInt& v : s.values) {
    if (v.im != 0)
      ++c.observed_other;
    else if (v.re == 0)
      ++c.observed_zero;
    else if (v.re == c.magnitude)
      ++c.observed_plus;
    else if (v.re == -c.magnitude)
      ++c.observed_minus;
    else
      ++c.observed_other;
  }
  c.conforms = c.observed_other == 0 && c.observed_zero == c.expected_zero && c.observed_plus == c.expected_plus &&
               c.observed_minus == c.expected_minus;
  return c;
}

RankDistributionCheck rank_distribution_check(const QuadraticForm& q) {
  const BilinearMatrix mat = bilinear_matrix(q);
  for (int i = 0; i < mat.dimension(); ++i)
    if (mat.at(i, i)) throw Error(ErrorKind::NotAlternating, "form is not alternating (B(x,x) != 0 for some x)");
  return spectrum_distribution(walsh_spectrum(q), rank(mat));
}

}  // namespace z4cb
