#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "z4cb/galois_ring.hpp"
#include "z4cb/scalars.hpp"

namespace z4cb {

using RingPtr = std::shared_ptr<const GaloisRing>;

/// Where a form came from (family id and parameters), carried for reporting.
struct FormDescriptor {
  std::string family;
  std::string params;
};

/// Z4-valued function on F stored as a value table in canonical F-order.
///
/// Construction only enforces the table shape and Q(0) = 0; whether the table
/// really is a quadratic form is established by bilinear_matrix(), which
/// checks the polarization identity on every point.
class QuadraticForm {
 public:
  QuadraticForm(RingPtr ring, std::vector<Z4> table, std::optional<FormDescriptor> descriptor = std::nullopt);
  static QuadraticForm zero(RingPtr ring);

  const GaloisRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  int degree() const { return ring_->degree(); }
  std::size_t size() const { return table_.size(); }
  std::span<const Z4> table() const { return table_; }
  const std::optional<FormDescriptor>& descriptor() const { return descriptor_; }

  Z4 at(std::size_t index) const { return table_[index]; }
  Z4 operator()(TeichElement x) const { return table_[x.index()]; }
  /// Value at the Teichmuller lift of a field element.
  Z4 at_field(FieldElement x) const { return table_[ring_->index_of(x)]; }

  /// Copy with one entry replaced (index 0 is rejected: Q(0) = 0).
  QuadraticForm with_entry(std::size_t index, Z4 value) const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.ring_->tag() == b.ring_->tag() && a.table_ == b.table_;
  }

 private:
  RingPtr ring_;
  std::vector<Z4> table_;
  std::optional<FormDescriptor> descriptor_;
};

Z4 eval_form(const QuadraticForm& q, TeichElement x);
/// Pointwise Q - Q'. ContextMismatch if the rings differ.
QuadraticForm subtract_forms(const QuadraticForm& q, const QuadraticForm& r);
QuadraticForm add_forms(const QuadraticForm& q, const QuadraticForm& r);
QuadraticForm scale_form(Z4 c, const QuadraticForm& q);

/// x -> Tr_1^m(c x^e) for Teichmuller c.
QuadraticForm trace_monomial_form(const RingPtr& ring, TeichElement c, std::uint64_t e);
/// x -> 2 tr_1^m(mu(x)).
QuadraticForm twice_trace_form(const RingPtr& ring);
/// Random sum of alpha Tr(c x) and 2Tr(c x^(2^i+1)) terms; deterministic in rng.
QuadraticForm random_quadratic_form(const RingPtr& ring, std::mt19937_64& rng);

/// Symmetric m x m bit matrix of B over the basis lift(1), lift(omega), ...,
/// lift(omega^(m-1)). Row i is a bit mask; with this basis the coordinate
/// vector of x is exactly the bit pattern of mu(x).
class BilinearMatrix {
 public:
  explicit BilinearMatrix(int m) : m_(m), rows_(static_cast<std::size_t>(m), 0U) {}
  BilinearMatrix(int m, std::vector<std::uint32_t> rows);

  int dimension() const { return m_; }
  bool at(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1U; }
  void set(int i, int j, bool v);
  std::uint32_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint32_t>& rows() const { return rows_; }
  bool is_symmetric() const;
  /// B(x, y) for coordinate vectors x, y.
  int eval(FieldElement x, FieldElement y) const;

  friend bool operator==(const BilinearMatrix&, const BilinearMatrix&) = default;

 private:
  int m_;
  std::vector<std::uint32_t> rows_;
};

/// B recovered as ((Q(x (+) y) - Q(x) - Q(y)) mod 4) / 2 on basis pairs; then
/// Q(x (+) y) = Q(x) + Q(y) + 2B(x, y) is verified for every x.
/// Throws OddDefect when a difference is odd and NotQuadratic when it is even
/// but inconsistent with the basis matrix.
BilinearMatrix bilinear_matrix(const QuadraticForm& q);

/// Basis of the null space of M over F_2 (coordinate vectors).
std::vector<FieldElement> radical(const BilinearMatrix& m);
int rank(const BilinearMatrix& m);

bool is_alternating(const QuadraticForm& q);

struct WalshSpectrum {
  int m = 0;
  /// chi_Q(lambda) indexed by lambda in canonical F-order.
  std::vector<GaussInt> values;
};

/// chi_Q(lambda) = sum_x i^(Q(x) + 2Tr(lambda x)), exact. TooLarge for m > 14.
WalshSpectrum walsh_spectrum(const QuadraticForm& q);
/// Writes "lambda_exponent,re,im" rows; lambda = 0 is written as "zero".
void write_spectrum_csv(std::ostream& os, const WalshSpectrum& s);

enum class BentMethod { walsh, rank };
std::string to_string(BentMethod m);
/// Default decision method: walsh for m <= 10, rank above.
BentMethod default_bent_method(int m);
bool is_generalized_bent(const QuadraticForm& q, BentMethod method);

/// Value counts of a Walsh spectrum against the distribution for alternating forms of rank r.
struct RankDistributionCheck {
  int m = 0;
  int rank = 0;
  std::int64_t magnitude = 0;  // 2^(m - r/2)
  std::int64_t expected_zero = 0;
  std::int64_t expected_plus = 0;
  std::int64_t expected_minus = 0;
  std::int64_t observed_zero = 0;
  std::int64_t observed_plus = 0;
  std::int64_t observed_minus = 0;
  std::int64_t observed_other = 0;
  bool conforms = false;
};

/// Compares the multiset of spectrum values with the rank-r distribution:
/// 0 (2^m - 2^r times), +2^(m-r/2) (2^(r-1) + 2^(r/2-1)), -2^(m-r/2)
/// (2^(r-1) - 2^(r/2-1)). Odd r raises NotApplicable.
RankDistributionCheck spectrum_distribution(const WalshSpectrum& s, int expected_rank);
/// Checks that q is alternating (NotAlternating otherwise), takes its rank from
/// the radical and runs spectrum_distribution.
RankDistributionCheck rank_distribution_check(const QuadraticForm& q);

}  // namespace z4cb
