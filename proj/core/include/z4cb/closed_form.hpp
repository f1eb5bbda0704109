#pragma once

#include <optional>
#include <vector>

#include "z4cb/binary_field.hpp"
#include "z4cb/chain.hpp"
#include "z4cb/forms.hpp"

namespace z4cb {

/// Bilinear forms of the family members evaluated entirely in F_2^m:
///
///   B_{f_a}(x, y) = tr( y ( a^2 x + sum_j (g_j a) (tr_{e_j}^m(g_j a x) + g_j a x) ) )
///
/// with all quantities reduced mod 2 (g_j = mu(gamma_j)). The difference
/// f_a - f_b has B_{f_a} + B_{f_b}. The eta shift of the f' variant is
/// additive and does not contribute. Needs no 2^m tables, so it runs up to
/// m = 20.
class ClosedFormBilinear {
 public:
  ClosedFormBilinear(const BinaryField& field, const ChainParams& params, Constraints c = Constraints::enforce);

  /// x -> a^2 x + sum_j (g_j a)(tr_{e_j}(g_j a x) + g_j a x), with a_bar = mu(a).
  FieldElement linear_map(FieldElement a_bar, FieldElement x) const;
  /// B_{f_a}(x, y) when b is empty, otherwise B_{f_a - f_b}(x, y).
  int eval(FieldElement a_bar, std::optional<FieldElement> b_bar, FieldElement x, FieldElement y) const;
  BilinearMatrix matrix(FieldElement a_bar, std::optional<FieldElement> b_bar) const;

  const BinaryField& field() const { return field_; }

 private:
  const BinaryField& field_;
  std::vector<ResolvedGamma> gammas_;
};

/// Single entry, taking Teichmuller a and b (mu computed in the field).
int closed_form_bilinear(const BinaryField& field, const ChainParams& params, TeichElement a,
                         std::optional<TeichElement> b, FieldElement x, FieldElement y);

}  // namespace z4cb
