#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "z4cb/families.hpp"
#include "z4cb/rational.hpp"
#include "z4cb/scalars.hpp"

namespace z4cb {

/// (1/sqrt(2^m)) (i^(Q(x) + 2Tr(lambda x)))_x. form_id indexes the family;
/// form_id == n (the family size) denotes the zero form of S_0.
struct QuaternaryRow {
  std::size_t form_id = 0;
  TeichElement lambda;
  std::vector<std::uint8_t> powers;  // exponent of i per column, canonical F-order
};

/// Standard basis vector e_index of dimension K.
struct BasisRow {
  std::size_t index = 0;
  std::size_t dimension = 0;
};

using CodebookRow = std::variant<QuaternaryRow, BasisRow>;

struct Provenance {
  std::string polynomial;  // binary polynomial, lowest degree first
  std::string lifted;      // Z4 lift
  std::optional<ChainParams> chain;
  bool verified = false;
};

class Codebook {
 public:
  Codebook(int m, std::size_t family_size, std::vector<CodebookRow> rows, Provenance provenance);

  int degree() const { return m_; }
  /// Dimension K = 2^m.
  std::size_t dimension() const { return std::size_t{1} << m_; }
  std::size_t size() const { return rows_.size(); }
  /// n = |family|.
  std::size_t family_size() const { return n_; }
  const std::vector<CodebookRow>& rows() const { return rows_; }
  const CodebookRow& row(std::size_t i) const { return rows_[i]; }
  const Provenance& provenance() const { return provenance_; }

 private:
  int m_;
  std::size_t n_;
  std::vector<CodebookRow> rows_;
  Provenance provenance_;
};

/// Row order: S_{f_a} blocks in family order (lambda ascending within each),
/// then S_0, then e_0 .. e_{K-1}.
Codebook assemble(const Family& fam, bool verified = false);
/// E_{2^m} alone.
Codebook basis_codebook(int m);
/// S_0 and E_{2^m} only.
Codebook assemble_empty(const RingPtr& ring);

/// c_i c_j^H = numerator / sqrt(denom_sq).
struct InnerProduct {
  GaussInt numerator;
  std::int64_t denom_sq = 1;

  ExactMagnitude squared_magnitude() const { return Rational(numerator.norm(), denom_sq); }
};

/// DimensionMismatch when the rows have different lengths.
InnerProduct inner_product(const CodebookRow& r1, const CodebookRow& r2);

inline constexpr std::size_t kNaiveRowLimit = 5000;

/// Maximum squared correlation over all unordered row pairs, by direct inner
/// products. TooLarge for N > 5000.
ExactMagnitude imax_naive(const Codebook& cb, unsigned workers = 1);

/// Maximum squared correlation of assemble(fam) computed from Walsh spectra of
/// form differences: rows (Q, l) and (Q', l') correlate with
/// chi_{Q-Q'}(l'') / 2^m where mu(l'') = mu(l) + mu(l').
ExactMagnitude imax_structured(const Family& fam, unsigned workers = 1);
/// Number of form pairs (including same-form blocks) examined by imax_structured.
std::size_t structured_form_pairs(const Family& fam);
/// The same identity for a single pair of rows of assemble(fam).
ExactMagnitude structured_pair_magnitude(const Family& fam, const CodebookRow& r1, const CodebookRow& r2);

/// Squared bounds. The Levenshtein values are absent when N == K.
struct Bounds {
  std::int64_t n_rows = 0;
  std::int64_t dim = 0;
  Rational welch_sq;
  std::optional<Rational> lev_real_sq;
  std::optional<Rational> lev_complex_sq;
  bool lev_real_applicable = false;     // N > K(K+1)/2
  bool lev_complex_applicable = false;  // N > K^2
};

/// Requires N >= K >= 1.
Bounds bounds(std::int64_t n_rows, std::int64_t dim);

enum class Symbol { plus_inv_sqrt_k, minus_inv_sqrt_k, plus_i_inv_sqrt_k, minus_i_inv_sqrt_k, zero, one };
std::string to_string(Symbol s);

struct Audit {
  std::vector<Symbol> alphabet;  // sorted, distinct
  std::size_t n_rows = 0;
  std::size_t dim = 0;
  bool unit_norm = false;

  std::size_t alphabet_size() const { return alphabet.size(); }
};

Audit audit(const Codebook& cb);

enum class Verdict { optimal, not_optimal, not_applicable };
std::string to_string(Verdict v);

struct OptimalityReport {
  Verdict verdict = Verdict::not_applicable;
  std::size_t family_size = 0;
  std::size_t n_rows = 0;
  std::size_t dim = 0;
  ExactMagnitude imax_sq;
  Bounds bounds;
  std::string method;
};

/// OPTIMAL iff the complex Levenshtein bound applies and equals imax_sq
/// exactly; N/A when N <= K.
OptimalityReport optimality_verdict(const Codebook& cb, const ExactMagnitude& imax_sq, std::string method);

/// Header type,form_id,lambda_exp,scale_denom_sq,entries. Quaternary rows carry
/// their i-power digits; basis rows carry B<k> with scale 1.
void write_codebook_csv(std::ostream& os, const Codebook& cb);

}  // namespace z4cb
