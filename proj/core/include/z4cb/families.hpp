#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "z4cb/chain.hpp"
#include "z4cb/forms.hpp"

namespace z4cb {

/// S = {f_a : a in F*} (or S' for the f' variant), ordered by a = xi^0, xi^1, ...
class Family {
 public:
  Family(RingPtr ring, ChainParams params, std::vector<QuadraticForm> forms,
         Constraints constraints = Constraints::enforce);

  const GaloisRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const ChainParams& params() const { return params_; }
  /// Policy the members were built under.
  Constraints constraints() const { return constraints_; }
  std::size_t size() const { return forms_.size(); }
  const QuadraticForm& operator[](std::size_t i) const { return forms_[i]; }
  const std::vector<QuadraticForm>& forms() const { return forms_; }

  /// First n members only.
  Family truncated(std::size_t n) const;
  /// Copy with member i replaced.
  Family with_member(std::size_t i, QuadraticForm q) const;

 private:
  RingPtr ring_;
  ChainParams params_;
  std::vector<QuadraticForm> forms_;
  Constraints constraints_;
};

/// f_a(x) = Tr(a x) + 2 sum_j Q_j(gamma_j a x), or Tr(a(1+2eta)x) + ... for f',
/// with Q_j(y) = Tr(sum_{i=1}^{(f_j-1)/2} y^(2^(i e_j)+1)).
QuadraticForm family_member(const RingPtr& ring, const ChainParams& p, TeichElement a,
                            Constraints c = Constraints::enforce);
/// All 2^m - 1 members; throws InvalidParams when validate_chain fails.
Family build_family(const RingPtr& ring, const ChainParams& p, Constraints c = Constraints::enforce);

enum class VerifyMethod { walsh, rank, closed_rank };
std::string to_string(VerifyMethod m);
VerifyMethod parse_verify_method(const std::string& s);

/// Which differences to check: everything, or k seeded samples drawn without
/// replacement (k unordered pairs from F* plus k single members).
struct PairBudget {
  bool all = true;
  std::size_t sample = 0;
  std::uint64_t seed = 0;

  static PairBudget everything() { return {}; }
  static PairBudget sampled(std::size_t k, std::uint64_t seed) { return {false, k, seed}; }
};

struct PairFailure {
  TeichElement a;
  TeichElement b;  // zero: single member f_a
  int rank = -1;   // -1 when the walsh method decided
};

struct VerifyReport {
  VerifyMethod method = VerifyMethod::rank;
  PairBudget budget;
  int m = 0;
  std::size_t singles_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<PairFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks that every selected f_a and f_a - f_b (a != b) is generalized bent.
/// TooLarge for the walsh method above m = 14.
VerifyReport verify_family(const Family& fam, VerifyMethod method, PairBudget budget, unsigned workers = 1);
/// Same check from the chain alone via the closed-form bilinear matrix; no
/// forms are materialized.
VerifyReport verify_closed_rank(const BinaryField& field, const ChainParams& p, PairBudget budget,
                                unsigned workers = 1, Constraints c = Constraints::enforce);

/// Uniform integer in [0, bound) from a 64-bit Mersenne twister, independent
/// of the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Selected (singles, pairs) as exponent indices into F*, sorted.
std::pair<std::vector<std::uint32_t>, std::vector<std::pair<std::uint32_t, std::uint32_t>>> select_checks(
    std::uint32_t n, const PairBudget& budget);

}  // namespace z4cb
