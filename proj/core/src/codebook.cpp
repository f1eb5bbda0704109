#include "z4cb/codebook.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <set>

#include "parallel.hpp"
#include "z4cb/error.hpp"

namespace z4cb {

namespace {

std::vector<std::uint8_t> row_powers(const GaloisRing& ring, const QuadraticForm& q, TeichElement lambda) {
  std::vector<std::uint8_t> p(ring.size());
  for (std::size_t idx = 0; idx < p.size(); ++idx) {
    const TeichElement x = TeichElement::from_index(idx);
    const Z4 v = q.at(idx) + Z4(2) * ring.trace(ring.teich_mul(lambda, x));
    p[idx] = static_cast<std::uint8_t>(v.value());
  }
  return p;
}

void append_block(std::vector<CodebookRow>& rows, const GaloisRing& ring, const QuadraticForm& q, std::size_t form_id) {
  for (std::size_t l = 0; l < ring.size(); ++l) {
    const TeichElement lambda = TeichElement::from_index(l);
    rows.emplace_back(QuaternaryRow{form_id, lambda, row_powers(ring, q, lambda)});
  }
}

void append_basis(std::vector<CodebookRow>& rows, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) rows.emplace_back(BasisRow{i, k});
}

std::size_t row_length(const CodebookRow& r) {
  if (const auto* q = std::get_if<QuaternaryRow>(&r)) return q->powers.size();
  return std::get<BasisRow>(r).dimension;
}

// Quaternary x quaternary: sum_x i^(p_x - q_x), tallied by exponent class.
GaussInt quaternary_dot(const std::vector<std::uint8_t>& p, const std::vector<std::uint8_t>& q) {
  std::array<std::int64_t, 4> count{};
  for (std::size_t x = 0; x < p.size(); ++x) ++count[static_cast<std::size_t>((p[x] - q[x]) & 3)];
  return {count[0] - count[2], count[1] - count[3]};
}

const QuadraticForm& form_of(const Family& fam, const QuadraticForm& zero, std::size_t id) {
  return id == fam.size() ? zero : fam[id];
}

}  // namespace

Codebook::Codebook(int m, std::size_t family_size, std::vector<CodebookRow> rows, Provenance provenance)
    : m_(m), n_(family_size), rows_(std::move(rows)), provenance_(std::move(provenance)) {
  for (const auto& r : rows_)
    if (row_length(r) != dimension()) throw Error(ErrorKind::DimensionMismatch, "codebook row length differs from 2^m");
}

Codebook assemble(const Family& fam, bool verified) {
  const GaloisRing& ring = fam.ring();
  const std::size_t k = ring.size();
  std::vector<CodebookRow> rows;
  rows.reserve((fam.size() + 1) * k + k);
  for (std::size_t i = 0; i < fam.size(); ++i) append_block(rows, ring, fam[i], i);
  append_block(rows, ring, QuadraticForm::zero(fam.ring_ptr()), fam.size());
  append_basis(rows, k);
  Provenance prov{ring.binary_poly().to_string(), ring.lifted_poly().to_string(), fam.params(), verified};
  return Codebook(ring.degree(), fam.size(), std::move(rows), std::move(prov));
}

Codebook basis_codebook(int m) {
  std::vector<CodebookRow> rows;
  append_basis(rows, std::size_t{1} << m);
  return Codebook(m, 0, std::move(rows), Provenance{});
}

Codebook assemble_empty(const RingPtr& ring) {
  std::vector<CodebookRow> rows;
  append_block(rows, *ring, QuadraticForm::zero(ring), 0);
  append_basis(rows, ring->size());
  return Codebook(ring->degree(), 0, std::move(rows),
                  Provenance{ring->binary_poly().to_string(), ring->lifted_poly().to_string(), std::nullopt, false});
}

InnerProduct inner_product(const CodebookRow& r1, const CodebookRow& r2) {
  const std::size_t k = row_length(r1);
  if (k != row_length(r2)) throw Error(ErrorKind::DimensionMismatch, "rows of different length");
  const auto k64 = static_cast<std::int64_t>(k);
  const auto* q1 = std::get_if<QuaternaryRow>(&r1);
  const auto* q2 = std::get_if<QuaternaryRow>(&r2);
  if (q1 && q2) return {quaternary_dot(q1->powers, q2->powers), k64 * k64};
  if (q1) {
    const auto& b = std::get<BasisRow>(r2);
    return {GaussInt::i_power(q1->powers[b.index]), k64};
  }
  if (q2) {
    const auto& b = std::get<BasisRow>(r1);
    return {GaussInt::i_power(-q2->powers[b.index]), k64};
  }
  const bool same = std::get<BasisRow>(r1).index == std::get<BasisRow>(r2).index;
  return {{same ? 1 : 0, 0}, 1};
}

ExactMagnitude imax_naive(const Codebook& cb, unsigned workers) {
  const std::size_t n = cb.size();
  if (n > kNaiveRowLimit)
    throw Error(ErrorKind::TooLarge, "naive I_max is limited to N <= 5000 rows, got " + std::to_string(n));
  std::vector<ExactMagnitude> best(std::max(1U, workers), Rational(0));
  detail::parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    std::int64_t qq_norm = 0;
    Rational local(0);
    for (std::size_t i = begin; i < end; ++i) {
      const auto* qi = std::get_if<QuaternaryRow>(&cb.row(i));
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto* qj = std::get_if<QuaternaryRow>(&cb.row(j));
        if (qi && qj) {
          qq_norm = std::max(qq_norm, quaternary_dot(qi->powers, qj->powers).norm());
        } else {
          local = std::max(local, inner_product(cb.row(i), cb.row(j)).squared_magnitude());
        }
      }
    }
    const auto k = static_cast<std::int64_t>(cb.dimension());
    best[w] = std::max(local, Rational(qq_norm, k * k));
  });
  return *std::max_element(best.begin(), best.end());
}

std::size_t structured_form_pairs(const Family& fam) {
  const std::size_t forms = fam.size() + 1;
  return forms * (forms - 1) / 2 + forms;
}

ExactMagnitude imax_structured(const Family& fam, unsigned workers) {
  const GaloisRing& ring = fam.ring();
  if (ring.degree() > kMaxTableDegree) throw Error(ErrorKind::TooLarge, "structured I_max needs m <= 14");
  const QuadraticForm zero = QuadraticForm::zero(fam.ring_ptr());
  const std::size_t forms = fam.size() + 1;
  const auto k = static_cast<std::int64_t>(ring.size());

  // Same-form blocks: rows differ only in lambda, so lambda'' != 0.
  std::int64_t best_norm = 0;
  {
    const WalshSpectrum s = walsh_spectrum(zero);
    for (std::size_t l = 1; l < s.values.size(); ++l) best_norm = std::max(best_norm, s.values[l].norm());
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(forms * (forms - 1) / 2);
  for (std::size_t i = 0; i < forms; ++i)
    for (std::size_t j = i + 1; j < forms; ++j) pairs.emplace_back(i, j);

  std::vector<std::int64_t> best(std::max(1U, workers), 0);
  detail::parallel_chunks(pairs.size(), workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    for (std::size_t p = begin; p < end; ++p) {
      const auto [i, j] = pairs[p];
      const WalshSpectrum s = walsh_spectrum(subtract_forms(form_of(fam, zero, i), form_of(fam, zero, j)));
      for (const GaussInt& v : s.values) best[w] = std::max(best[w], v.norm());
    }
  });
  best_norm = std::max(best_norm, *std::max_element(best.begin(), best.end()));

  Rational result(best_norm, k * k);
  // Any quaternary row against any basis row: |i^p|^2 / 2^m.
  result = std::max(result, Rational(1, k));
  return result;
}

ExactMagnitude structured_pair_magnitude(const Family& fam, const CodebookRow& r1, const CodebookRow& r2) {
  const GaloisRing& ring = fam.ring();
  const auto k = static_cast<std::int64_t>(ring.size());
  const auto* q1 = std::get_if<QuaternaryRow>(&r1);
  const auto* q2 = std::get_if<QuaternaryRow>(&r2);
  if (!q1 && !q2) return Rational(std::get<BasisRow>(r1).index == std::get<BasisRow>(r2).index ? 1 : 0);
  if (!q1 || !q2) return Rational(1, k);

  const QuadraticForm zero = QuadraticForm::zero(fam.ring_ptr());
  const QuadraticForm diff = subtract_forms(form_of(fam, zero, q1->form_id), form_of(fam, zero, q2->form_id));
  const TeichElement lambda = ring.lift(ring.mu(q1->lambda) + ring.mu(q2->lambda));
  GaussInt chi;
  for (std::size_t idx = 0; idx < ring.size(); ++idx) {
    const TeichElement x = TeichElement::from_index(idx);
    chi += GaussInt::i_power((diff.at(idx) + Z4(2) * ring.trace(ring.teich_mul(lambda, x))).value());
  }
  return Rational(chi.norm(), k * k);
}

Bounds bounds(std::int64_t n_rows, std::int64_t dim) {
  if (dim < 1 || n_rows < dim) throw Error(ErrorKind::InvalidParams, "bounds require N >= K >= 1");
  Bounds b;
  b.n_rows = n_rows;
  b.dim = dim;
  const std::int64_t n = n_rows;
  const std::int64_t k = dim;
  b.welch_sq = n == k ? Rational(0) : Rational(n - k) / (Rational(n - 1) * Rational(k));
  if (n > k) {
    b.lev_real_sq = (Rational(3) * Rational(n) - Rational(k) * Rational(k) - Rational(2 * k)) /
                    (Rational(n - k) * Rational(k + 2));
    b.lev_complex_sq = (Rational(2) * Rational(n) - Rational(k) * Rational(k) - Rational(k)) /
                       (Rational(n - k) * Rational(k + 1));
  }
  b.lev_real_applicable = Rational(n) > Rational(k) * Rational(k + 1) / Rational(2);
  b.lev_complex_applicable = Rational(n) > Rational(k) * Rational(k);
  return b;
}

std::string to_string(Symbol s) {
  switch (s) {
    case Symbol::plus_inv_sqrt_k: return "+1/sqrt(K)";
    case Symbol::minus_inv_sqrt_k: return "-1/sqrt(K)";
    case Symbol::plus_i_inv_sqrt_k: return "+i/sqrt(K)";
    case Symbol::minus_i_inv_sqrt_k: return "-i/sqrt(K)";
    case Symbol::zero: return "0";
    case Symbol::one: return "1";
  }
  return "?";
}

Audit audit(const Codebook& cb) {
  static constexpr std::array<Symbol, 4> kPowerSymbol = {Symbol::plus_inv_sqrt_k, Symbol::plus_i_inv_sqrt_k,
                                                         Symbol::minus_inv_sqrt_k, Symbol::minus_i_inv_sqrt_k};
  std::set<Symbol> seen;
  bool unit = true;
  const auto k = static_cast<std::int64_t>(cb.dimension());
  for (const auto& r : cb.rows()) {
    if (const auto* q = std::get_if<QuaternaryRow>(&r)) {
      for (std::uint8_t p : q->powers) {
        if (p > 3) unit = false;
        seen.insert(kPowerSymbol[p & 3U]);
      }
      // K entries of squared modulus 1/K each.
      if (Rational(static_cast<std::int64_t>(q->powers.size()), k) != Rational(1)) unit = false;
    } else {
      const auto& b = std::get<BasisRow>(r);
      seen.insert(Symbol::one);
      if (b.dimension > 1) seen.insert(Symbol::zero);
      if (b.index >= b.dimension) unit = false;
    }
  }
  Audit a;
  a.alphabet.assign(seen.begin(), seen.end());
  a.n_rows = cb.size();
  a.dim = cb.dimension();
  a.unit_norm = unit;
  return a;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::optimal: return "OPTIMAL";
    case Verdict::not_optimal: return "NOT-OPTIMAL";
    case Verdict::not_applicable: return "N/A";
  }
  return "?";
}

OptimalityReport optimality_verdict(const Codebook& cb, const ExactMagnitude& imax_sq, std::string method) {
  OptimalityReport r;
  r.family_size = cb.family_size();
  r.n_rows = cb.size();
  r.dim = cb.dimension();
  r.imax_sq = imax_sq;
  r.method = std::move(method);
  r.bounds = bounds(static_cast<std::int64_t>(r.n_rows), static_cast<std::int64_t>(r.dim));
  if (r.n_rows <= r.dim)
    r.verdict = Verdict::not_applicable;
  else if (r.bounds.lev_complex_applicable && r.bounds.lev_complex_sq && *r.bounds.lev_complex_sq == imax_sq)
    r.verdict = Verdict::optimal;
  else
    r.verdict = Verdict::not_optimal;
  return r;
}

void write_codebook_csv(std::ostream& os, const Codebook& cb) {
  os << "type,form_id,lambda_exp,scale_denom_sq,entries\n";
  for (const auto& r : cb.rows()) {
    if (const auto* q = std::get_if<QuaternaryRow>(&r)) {
      os << "Q,";
      if (q->form_id == cb.family_size())
        os << "S0";
      else
        os << q->form_id;
      os << ',' << to_string(q->lambda) << ',' << cb.dimension() << ',';
      for (std::uint8_t p : q->powers) os << static_cast<char>('0' + p);
      os << '\n';
    } else {
      os << "B,,,1,B" << std::get<BasisRow>(r).index << '\n';
    }
  }
}

}  // namespace z4cb
