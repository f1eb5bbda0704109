#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z4cb/binary_field.hpp"
#include "z4cb/galois_ring.hpp"

namespace z4cb {

enum class Variant { f, f_prime };
std::string to_string(Variant v);

/// gamma_j given as an exponent of the canonical generator of F_2^{e_j}
/// (omega^((2^m-1)/(2^e_j-1))), or the zero element.
struct GammaSpec {
  std::optional<std::uint32_t> exponent;

  static GammaSpec zero() { return {}; }
  static GammaSpec power(std::uint32_t k) { return {k}; }
  bool is_zero() const { return !exponent.has_value(); }
  friend bool operator==(const GammaSpec&, const GammaSpec&) = default;
};
std::string to_string(const GammaSpec& g);

/// Divisor chain 1 = e_0 <= e_1 < ... < e_l = m with coefficients
/// gamma_1..gamma_{l-1} and the eta shift of the f' variant.
struct ChainParams {
  int m = 0;
  std::vector<int> chain;
  std::vector<GammaSpec> gammas;
  TeichElement eta;
  Variant variant = Variant::f;

  int length() const { return static_cast<int>(chain.size()) - 1; }
  friend bool operator==(const ChainParams&, const ChainParams&) = default;
};

enum class ViolationKind {
  DegreeRange,
  ChainEndpoints,
  ChainOrder,
  ChainDivisibility,
  EvenCofactor,
  GammaCount,
  GammaRange,
  GammaPrimeField,
  GammaSumZero,
  EtaRange,
  FieldMismatch,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ChainValidation {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind k) const;
  std::string summary() const;
};

/// Checks every constraint on the chain and its coefficients. The field is
/// needed for the 1 + sum gamma_j^2 != 0 condition.
ChainValidation validate_chain(const ChainParams& p, const BinaryField& field);

/// How strictly a chain is checked before forms are built. relax_coefficients
/// lets a GammaSumZero violation through (for negative-control experiments);
/// every structural constraint is still enforced.
enum class Constraints { enforce, relax_coefficients };

/// Throws InvalidParams listing the violations not excused by the policy.
void require_valid(const ChainParams& p, const BinaryField& field, Constraints c = Constraints::enforce);

/// gamma_j resolved in a concrete field.
struct ResolvedGamma {
  int e = 0;                 // e_j
  int cofactor = 0;          // f_j = m / e_j
  FieldElement bar;          // mu(gamma_j)
  TeichElement teich;        // gamma_j in F
};

/// Resolves gamma_1..gamma_{l-1}; throws InvalidParams if validation fails.
std::vector<ResolvedGamma> resolve_gammas(const ChainParams& p, const BinaryField& field,
                                          Constraints c = Constraints::enforce);

enum class Preset { kerdock, heng_yue_1, heng_yue_2, heng_yue_3 };
std::string to_string(Preset p);
Preset parse_preset(const std::string& name);

struct PresetArgs {
  int e1 = 0;  // heng_yue_2/3: e_1 = t with s = m/t odd
  GammaSpec gamma = GammaSpec::power(1);
  TeichElement eta;
};

/// The known families as chain instances: kerdock / heng_yue_1 are the l = 1
/// chain (1, m) in the f' variant; heng_yue_2 / heng_yue_3 are the l = 2
/// chain (1, e_1, m) in the f and f' variants.
ChainParams preset(Preset which, int m, const PresetArgs& args = {});

}  // namespace z4cb
