#include "z4cb/closed_form.hpp"

namespace z4cb {

namespace {

FieldElement mu_of(const BinaryField& field, TeichElement t) {
  return t.is_zero() ? field.zero() : field.exp(t.exponent());
}

}  // namespace

ClosedFormBilinear::ClosedFormBilinear(const BinaryField& field, const ChainParams& params, Constraints c)
    : field_(field), gammas_(resolve_gammas(params, field, c)) {}

FieldElement ClosedFormBilinear::linear_map(FieldElement a_bar, FieldElement x) const {
  FieldElement acc = field_.mul(field_.square(a_bar), x);
  for (const ResolvedGamma& g : gammas_) {
    if (g.bar.is_zero()) continue;
    const FieldElement ga = field_.mul(g.bar, a_bar);
    const FieldElement gax = field_.mul(ga, x);
    acc += field_.mul(ga, field_.relative_trace(gax, g.e) + gax);
  }
  return acc;
}

int ClosedFormBilinear::eval(FieldElement a_bar, std::optional<FieldElement> b_bar, FieldElement x,
                             FieldElement y) const {
  FieldElement l = linear_map(a_bar, x);
  if (b_bar) l += linear_map(*b_bar, x);
  return field_.trace(field_.mul(y, l));
}

BilinearMatrix ClosedFormBilinear::matrix(FieldElement a_bar, std::optional<FieldElement> b_bar) const {
  const int m = field_.degree();
  BilinearMatrix mat(m);
  for (int i = 0; i < m; ++i) {
    const FieldElement x{1U << i};
    FieldElement l = linear_map(a_bar, x);
    if (b_bar) l += linear_map(*b_bar, x);
    for (int j = 0; j < m; ++j) mat.set(i, j, field_.trace(field_.mul(FieldElement{1U << j}, l)) != 0);
  }
  return mat;
}

int closed_form_bilinear(const BinaryField& field, const ChainParams& params, TeichElement a,
                         std::optional<TeichElement> b, FieldElement x, FieldElement y) {
  const ClosedFormBilinear cf(field, params);
  std::optional<FieldElement> b_bar;
  if (b) b_bar = mu_of(field, *b);
  return cf.eval(mu_of(field, a), b_bar, x, y);
}

}  // namespace z4cb
