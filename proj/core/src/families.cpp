#include "z4cb/families.hpp"

#include <algorithm>
#include <set>

#include "parallel.hpp"
#include "z4cb/closed_form.hpp"
#include "z4cb/error.hpp"

namespace z4cb {

namespace {

constexpr std::uint64_t kMaxExhaustivePairs = std::uint64_t{1} << 24;

bool pair_less(const PairFailure& x, const PairFailure& y) {
  return std::pair(x.a.index(), x.b.index()) < std::pair(y.a.index(), y.b.index());
}

}  // namespace

Family::Family(RingPtr ring, ChainParams params, std::vector<QuadraticForm> forms, Constraints constraints)
    : ring_(std::move(ring)), params_(std::move(params)), forms_(std::move(forms)), constraints_(constraints) {
  for (const auto& q : forms_)
    if (q.ring().tag() != ring_->tag()) throw Error(ErrorKind::ContextMismatch, "family member from another ring");
}

Family Family::truncated(std::size_t n) const {
  if (n > forms_.size()) throw Error(ErrorKind::InvalidParams, "cannot truncate a family to a larger size");
  return Family(ring_, params_, std::vector<QuadraticForm>(forms_.begin(), forms_.begin() + static_cast<long>(n)),
                constraints_);
}

Family Family::with_member(std::size_t i, QuadraticForm q) const {
  std::vector<QuadraticForm> f = forms_;
  f.at(i) = std::move(q);
  return Family(ring_, params_, std::move(f), constraints_);
}

QuadraticForm family_member(const RingPtr& ring, const ChainParams& p, TeichElement a, Constraints c) {
  const GaloisRing& r = *ring;
  const std::vector<ResolvedGamma> gammas = resolve_gammas(p, r.field(), c);
  const bool shifted = p.variant == Variant::f_prime && !p.eta.is_zero();
  std::vector<Z4> table(r.size());
  for (std::size_t idx = 1; idx < table.size(); ++idx) {
    const TeichElement ax = r.teich_mul(a, TeichElement::from_index(idx));
    Z4 v = r.trace(ax);
    if (shifted) v += Z4(2) * r.trace(r.teich_mul(p.eta, ax));
    for (const ResolvedGamma& g : gammas) {
      if (g.teich.is_zero()) continue;
      const TeichElement y = r.teich_mul(g.teich, ax);
      for (int i = 1; i <= (g.cofactor - 1) / 2; ++i) {
        const std::uint64_t e = (std::uint64_t{1} << (i * g.e)) + 1;
        v += Z4(2) * r.trace(r.teich_pow(y, e));
      }
    }
    table[idx] = v;
  }
  const std::string name = p.variant == Variant::f ? "f" : "f_prime";
  return QuadraticForm(ring, std::move(table), FormDescriptor{name, "a=" + to_string(a)});
}

Family build_family(const RingPtr& ring, const ChainParams& p, Constraints c) {
  if (!ring->has_tables()) throw Error(ErrorKind::TooLarge, "families are only materialized for m <= 14");
  require_valid(p, ring->field(), c);
  std::vector<QuadraticForm> forms;
  forms.reserve(ring->group_order());
  for (std::uint32_t k = 0; k < ring->group_order(); ++k)
    forms.push_back(family_member(ring, p, TeichElement::power(k), c));
  return Family(ring, p, std::move(forms), c);
}

std::string to_string(VerifyMethod m) {
  switch (m) {
    case VerifyMethod::walsh: return "walsh";
    case VerifyMethod::rank: return "rank";
    case VerifyMethod::closed_rank: return "closed_rank";
  }
  return "?";
}

VerifyMethod parse_verify_method(const std::string& s) {
  if (s == "walsh") return VerifyMethod::walsh;
  if (s == "rank") return VerifyMethod::rank;
  if (s == "closed_rank") return VerifyMethod::closed_rank;
  throw Error(ErrorKind::InvalidConfig, "unknown verification method '" + s + "'");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidParams, "uniform_below(0)");
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

std::pair<std::vector<std::uint32_t>, std::vector<std::pair<std::uint32_t, std::uint32_t>>> select_checks(
    std::uint32_t n, const PairBudget& budget) {
  const std::uint64_t total_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<std::uint32_t> singles;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

  if (budget.all || (budget.sample >= n && budget.sample >= total_pairs)) {
    if (total_pairs > kMaxExhaustivePairs)
      throw Error(ErrorKind::TooLarge, "exhaustive pair check is infeasible at this m; use a sampled budget");
    singles.resize(n);
    for (std::uint32_t s = 0; s < n; ++s) singles[s] = s;
    pairs.reserve(total_pairs);
    for (std::uint32_t s = 0; s < n; ++s)
      for (std::uint32_t t = s + 1; t < n; ++t) pairs.emplace_back(s, t);
    return {singles, pairs};
  }

  std::mt19937_64 rng(budget.seed);
  const std::uint64_t want_pairs = std::min<std::uint64_t>(budget.sample, total_pairs);
  std::set<std::pair<std::uint32_t, std::uint32_t>> chosen;
  while (chosen.size() < want_pairs) {
    auto s = static_cast<std::uint32_t>(uniform_below(rng, n));
    auto t = static_cast<std::uint32_t>(uniform_below(rng, n));
    if (s == t) continue;
    chosen.emplace(std::min(s, t), std::max(s, t));
  }
  pairs.assign(chosen.begin(), chosen.end());

  const std::uint64_t want_singles = std::min<std::uint64_t>(budget.sample, n);
  std::set<std::uint32_t> picked;
  while (picked.size() < want_singles) picked.insert(static_cast<std::uint32_t>(uniform_below(rng, n)));
  singles.assign(picked.begin(), picked.end());
  return {singles, pairs};
}

VerifyReport verify_family(const Family& fam, VerifyMethod method, PairBudget budget, unsigned workers) {
  if (method == VerifyMethod::closed_rank)
    return verify_closed_rank(fam.ring().field(), fam.params(), budget, workers, fam.constraints());
  if (method == VerifyMethod::walsh && fam.ring().degree() > kMaxTableDegree)
    throw Error(ErrorKind::TooLarge, "walsh verification needs m <= 14");

  const auto n = static_cast<std::uint32_t>(fam.size());
  const auto [singles, pairs] = select_checks(n, budget);
  const BentMethod bent = method == VerifyMethod::walsh ? BentMethod::walsh : BentMethod::rank;
  const int m = fam.ring().degree();

  auto check = [&](const QuadraticForm& q, TeichElement a, TeichElement b, std::vector<PairFailure>& out) {
    try {
      if (bent == BentMethod::rank) {
        const int r = rank(bilinear_matrix(q));
        if (r != m) out.push_back({a, b, r});
      } else if (!is_generalized_bent(q, bent)) {
        out.push_back({a, b, -1});
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OddDefect && e.kind() != ErrorKind::NotQuadratic) throw;
      out.push_back({a, b, -1});
    }
  };

  const std::size_t total = singles.size() + pairs.size();
  std::vector<std::vector<PairFailure>> per_worker(std::max(1U, workers));
  detail::parallel_chunks(total, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    for (std::size_t i = begin; i < end; ++i) {
      if (i < singles.size()) {
        const std::uint32_t s = singles[i];
        check(fam[s], TeichElement::power(s), TeichElement::zero(), per_worker[w]);
      } else {
        const auto [s, t] = pairs[i - singles.size()];
        check(subtract_forms(fam[s], fam[t]), TeichElement::power(s), TeichElement::power(t), per_worker[w]);
      }
    }
  });

  VerifyReport rep;
  rep.method = method;
  rep.budget = budget;
  rep.m = m;
  rep.singles_checked = singles.size();
  rep.pairs_checked = pairs.size();
  for (auto& v : per_worker) rep.failures.insert(rep.failures.end(), v.begin(), v.end());
  std::sort(rep.failures.begin(), rep.failures.end(), pair_less);
  return rep;
}

VerifyReport verify_closed_rank(const BinaryField& field, const ChainParams& p, PairBudget budget, unsigned workers,
                                Constraints c) {
  const ClosedFormBilinear cf(field, p, c);
  const std::uint32_t n = field.group_order();
  const int m = field.degree();
  const auto [singles, pairs] = select_checks(n, budget);

  const std::size_t total = singles.size() + pairs.size();
  std::vector<std::vector<PairFailure>> per_worker(std::max(1U, workers));
  detail::parallel_chunks(total, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    for (std::size_t i = begin; i < end; ++i) {
      TeichElement a;
      TeichElement b;
      BilinearMatrix mat(m);
      if (i < singles.size()) {
        a = TeichElement::power(singles[i]);
        mat = cf.matrix(field.exp(a.exponent()), std::nullopt);
      } else {
        const auto [s, t] = pairs[i - singles.size()];
        a = TeichElement::power(s);
        b = TeichElement::power(t);
        mat = cf.matrix(field.exp(s), field.exp(t));
      }
      const int r = rank(mat);
      if (r != m) per_worker[w].push_back({a, b, r});
    }
  });

  VerifyReport rep;
  rep.method = VerifyMethod::closed_rank;
  rep.budget = budget;
  rep.m = m;
  rep.singles_checked = singles.size();
  rep.pairs_checked = pairs.size();
  for (auto& v : per_worker) rep.failures.insert(rep.failures.end(), v.begin(), v.end());
  std::sort(rep.failures.begin(), rep.failures.end(), pair_less);
  return rep;
}

}  // namespace z4cb
