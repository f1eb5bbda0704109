#include "z4cb/chain.hpp"

#include <sstream>

#include "z4cb/error.hpp"

namespace z4cb {

std::string to_string(Variant v) { return v == Variant::f ? "f" : "f_prime"; }

std::string to_string(const GammaSpec& g) { return g.is_zero() ? std::string("zero") : std::to_string(*g.exponent); }

bool ChainValidation::has(ViolationKind k) const {
  for (const auto& v : violations)
    if (v.kind == k) return true;
  return false;
}

std::string ChainValidation::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].message;
  }
  return os.str();
}

ChainValidation validate_chain(const ChainParams& p, const BinaryField& field) {
  ChainValidation out;
  auto fail = [&](ViolationKind k, std::string msg) { out.violations.push_back({k, std::move(msg)}); };

  const int m = p.m;
  if (m < kMinDegree || m > kMaxDegree) {
    fail(ViolationKind::DegreeRange, "m must lie in [2, 20], got " + std::to_string(m));
    return out;
  }
  if (field.degree() != m) {
    fail(ViolationKind::FieldMismatch, "field degree " + std::to_string(field.degree()) + " differs from m");
    return out;
  }
  const auto& e = p.chain;
  if (e.size() < 2 || e.front() != 1 || e.back() != m) {
    fail(ViolationKind::ChainEndpoints, "chain must start with e_0 = 1 and end with e_l = m");
    return out;
  }
  const int l = p.length();
  bool structural = true;
  for (int i = 0; i < l; ++i) {
    const int a = e[static_cast<std::size_t>(i)];
    const int b = e[static_cast<std::size_t>(i + 1)];
    // e_0 <= e_1 < e_2 < ... < e_l
    if (b < a || (b == a && i != 0)) {
      fail(ViolationKind::ChainOrder, "chain must satisfy e_0 <= e_1 < ... < e_l (at e_" + std::to_string(i + 1) + ")");
      structural = false;
    } else if (b % a != 0) {
      fail(ViolationKind::ChainDivisibility, "e_i | e_{i+1} violated: " + std::to_string(a) + " does not divide " +
                                                 std::to_string(b));
      structural = false;
    }
  }
  if (!structural) return out;

  for (int j = 1; j < l; ++j) {
    const int ej = e[static_cast<std::size_t>(j)];
    const int fj = m / ej;
    if (fj % 2 == 0) {
      fail(ViolationKind::EvenCofactor, "f_" + std::to_string(j) + " = m/e_" + std::to_string(j) +
                                            " must be odd (f_i is odd), got " + std::to_string(m) + "/" +
                                            std::to_string(ej) + " = " + std::to_string(fj));
    }
  }

  if (static_cast<int>(p.gammas.size()) != l - 1) {
    fail(ViolationKind::GammaCount, "expected " + std::to_string(l - 1) + " gamma values (gamma_1..gamma_{l-1}), got " +
                                        std::to_string(p.gammas.size()));
    return out;
  }

  FieldElement sum = field.one();
  for (int j = 1; j < l; ++j) {
    const int ej = e[static_cast<std::size_t>(j)];
    const GammaSpec& g = p.gammas[static_cast<std::size_t>(j - 1)];
    FieldElement bar = field.zero();
    if (!g.is_zero()) {
      const std::uint32_t sub_order = (1U << ej) - 1U;
      if (*g.exponent >= sub_order) {
        fail(ViolationKind::GammaRange, "gamma_" + std::to_string(j) + " exponent must be < 2^e_" + std::to_string(j) +
                                            " - 1 = " + std::to_string(sub_order));
        continue;
      }
      if (ej == 1) {
        fail(ViolationKind::GammaPrimeField,
             "gamma_" + std::to_string(j) + " must be zero when e_" + std::to_string(j) +
                 " = 1 (1 + gamma_j^2 != 0 forces mu(gamma_j) = 0 in F_2)");
        continue;
      }
      bar = field.pow(field.subfield_generator(ej), *g.exponent);
    } else {
      out.warnings.push_back("gamma_" + std::to_string(j) + " is zero: term j = " + std::to_string(j) +
                             " vanishes and the family reduces to a shorter chain");
    }
    sum += field.square(bar);
    if (sum.is_zero()) {
      fail(ViolationKind::GammaSumZero, "1 + sum_{j=1}^{t} gamma_j^2 must be nonzero (1+sum gamma_j^2 != 0), fails at t = " +
                                            std::to_string(j));
    }
  }

  if (!p.eta.is_zero() && p.eta.exponent() >= field.group_order())
    fail(ViolationKind::EtaRange, "eta exponent must be < 2^m - 1");
  return out;
}

void require_valid(const ChainParams& p, const BinaryField& field, Constraints c) {
  ChainValidation v = validate_chain(p, field);
  if (c == Constraints::relax_coefficients)
    std::erase_if(v.violations, [](const Violation& x) { return x.kind == ViolationKind::GammaSumZero; });
  if (!v.ok()) throw Error(ErrorKind::InvalidParams, v.summary());
}

std::vector<ResolvedGamma> resolve_gammas(const ChainParams& p, const BinaryField& field, Constraints c) {
  require_valid(p, field, c);
  std::vector<ResolvedGamma> out;
  const std::uint64_t n = field.group_order();
  for (int j = 1; j < p.length(); ++j) {
    ResolvedGamma r;
    r.e = p.chain[static_cast<std::size_t>(j)];
    r.cofactor = p.m / r.e;
    const GammaSpec& g = p.gammas[static_cast<std::size_t>(j - 1)];
    if (!g.is_zero()) {
      const std::uint64_t step = n / ((std::uint64_t{1} << r.e) - 1);
      const std::uint64_t k = (step * *g.exponent) % n;
      r.bar = field.exp(k);
      r.teich = TeichElement::power(static_cast<std::uint32_t>(k));
    }
    out.push_back(r);
  }
  return out;
}

std::string to_string(Preset p) {
  switch (p) {
    case Preset::kerdock: return "kerdock";
    case Preset::heng_yue_1: return "heng_yue_1";
    case Preset::heng_yue_2: return "heng_yue_2";
    case Preset::heng_yue_3: return "heng_yue_3";
  }
  return "?";
}

Preset parse_preset(const std::string& name) {
  for (Preset p : {Preset::kerdock, Preset::heng_yue_1, Preset::heng_yue_2, Preset::heng_yue_3})
    if (to_string(p) == name) return p;
  throw Error(ErrorKind::InvalidParams, "unknown preset '" + name + "'");
}

ChainParams preset(Preset which, int m, const PresetArgs& args) {
  if (m < kMinDegree || m > kMaxDegree) throw Error(ErrorKind::InvalidParams, "preset m must lie in [2, 20]");
  ChainParams p;
  p.m = m;
  switch (which) {
    case Preset::kerdock:
    case Preset::heng_yue_1:
      p.chain = {1, m};
      p.eta = args.eta;
      p.variant = Variant::f_prime;
      return p;
    case Preset::heng_yue_2:
    case Preset::heng_yue_3: {
      const int t = args.e1;
      if (t <= 1 || t >= m || m % t != 0)
        throw Error(ErrorKind::InvalidParams, "heng_yue presets need 1 < e_1 < m with e_1 | m");
      if ((m / t) % 2 == 0)
        throw Error(ErrorKind::InvalidParams, "s = m/e_1 must be odd (f_1 = m/e_1 must be odd)");
      p.chain = {1, t, m};
      p.gammas = {args.gamma};
      if (which == Preset::heng_yue_3) {
        p.eta = args.eta;
        p.variant = Variant::f_prime;
      }
      return p;
    }
  }
  throw Error(ErrorKind::InvalidParams, "unknown preset");
}

}  // namespace z4cb
