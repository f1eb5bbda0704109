#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "z4cb/z4cb.hpp"

using namespace z4cb;

namespace {

ChainParams chain(int m, std::vector<int> e, std::vector<GammaSpec> g, Variant v = Variant::f,
                  TeichElement eta = TeichElement::zero()) {
  return ChainParams{m, std::move(e), std::move(g), eta, v};
}

/// Every valid chain with m <= 8 together with a few gamma choices.
std::vector<ChainParams> small_valid_chains() {
  std::vector<ChainParams> out;
  for (int m = 2; m <= 8; ++m) {
    out.push_back(chain(m, {1, m}, {}));
    out.push_back(chain(m, {1, m}, {}, Variant::f_prime, TeichElement::power(1)));
  }
  out.push_back(chain(6, {1, 2, 6}, {GammaSpec::power(1)}));
  out.push_back(chain(6, {1, 2, 6}, {GammaSpec::power(2)}, Variant::f_prime, TeichElement::power(5)));
  out.push_back(chain(6, {1, 2, 6}, {GammaSpec::zero()}));
  return out;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("chain validation examples") {
    auto r6 = GaloisRing::create(6);
    auto r4 = GaloisRing::create(4);
    CHECK(validate_chain(chain(6, {1, 2, 6}, {GammaSpec::power(1)}), r6->field()).ok());
    const auto even = validate_chain(chain(4, {1, 2, 4}, {GammaSpec::power(1)}), r4->field());
    CHECK(even.has(ViolationKind::EvenCofactor));
    const auto sum = validate_chain(chain(6, {1, 2, 6}, {GammaSpec::power(0)}), r6->field());
    CHECK(sum.has(ViolationKind::GammaSumZero));
    CHECK_FALSE(sum.ok());
  }

  TEST_CASE("every structural constraint is reported") {
    auto r6 = GaloisRing::create(6);
    const auto& f = r6->field();
    CHECK(validate_chain(chain(6, {2, 6}, {}), f).has(ViolationKind::ChainEndpoints));
    CHECK(validate_chain(chain(6, {1, 3}, {}), f).has(ViolationKind::ChainEndpoints));
    CHECK(validate_chain(chain(6, {1, 3, 2, 6}, {GammaSpec::power(1), GammaSpec::power(1)}), f)
              .has(ViolationKind::ChainOrder));
    CHECK(validate_chain(chain(6, {1, 4, 6}, {GammaSpec::power(1)}), f).has(ViolationKind::ChainDivisibility));
    CHECK(validate_chain(chain(6, {1, 2, 6}, {}), f).has(ViolationKind::GammaCount));
    CHECK(validate_chain(chain(6, {1, 2, 6}, {GammaSpec::power(3)}), f).has(ViolationKind::GammaRange));
    CHECK(validate_chain(chain(6, {1, 1, 6}, {GammaSpec::power(0)}), f).has(ViolationKind::GammaPrimeField));
    CHECK(validate_chain(chain(6, {1, 6}, {}, Variant::f_prime, TeichElement::power(63)), f)
              .has(ViolationKind::EtaRange));
    CHECK(validate_chain(chain(4, {1, 6}, {}), f).has(ViolationKind::FieldMismatch));
    CHECK(validate_chain(chain(1, {1, 1}, {}), f).has(ViolationKind::DegreeRange));
    const auto degenerate = validate_chain(chain(6, {1, 2, 6}, {GammaSpec::zero()}), f);
    CHECK(degenerate.ok());
    CHECK(degenerate.warnings.size() == 1);
    try {
      (void)build_family(r6, chain(6, {1, 2, 6}, {GammaSpec::power(0)}));
      FAIL("expected InvalidParams");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidParams);
    }
  }

  TEST_CASE("m = 2 family is the three linear traces") {
    auto ring = GaloisRing::create(2);
    const auto fam = build_family(ring, chain(2, {1, 2}, {}));
    REQUIRE(fam.size() == 3);
    for (std::uint32_t s = 0; s < 3; ++s) {
      const RingElement a = ring->pow(ring->xi(), s);
      for (auto x : ring->teichmuller_set())
        CHECK(fam[s](x) == oracle::trace_by_search(*ring, oracle::ring_mul(*ring, a, ring->to_ring(x))));
    }
  }

  TEST_CASE("f' with eta = 0 is f") {
    for (int m : {3, 6}) {
      auto ring = GaloisRing::create(m);
      auto p = m == 6 ? chain(6, {1, 2, 6}, {GammaSpec::power(2)}) : chain(3, {1, 3}, {});
      auto q = p;
      q.variant = Variant::f_prime;
      CHECK(build_family(ring, p).forms() == build_family(ring, q).forms());
    }
  }

  TEST_CASE("m = 6 chain (1,2,6) members carry the 2Tr((gamma a x)^5) term") {
    auto ring = GaloisRing::create(6);
    const auto p = chain(6, {1, 2, 6}, {GammaSpec::power(1)});
    const auto gammas = resolve_gammas(p, ring->field());
    REQUIRE(gammas.size() == 1);
    CHECK(gammas[0].bar == ring->field().subfield_generator(2));
    const RingElement g = ring->to_ring(gammas[0].teich);
    for (std::uint32_t s : {0U, 1U, 17U, 62U}) {
      const auto f = family_member(ring, p, TeichElement::power(s));
      const RingElement a = ring->pow(ring->xi(), s);
      for (auto x : ring->teichmuller_set()) {
        const RingElement ax = oracle::ring_mul(*ring, a, ring->to_ring(x));
        const RingElement gax = oracle::ring_mul(*ring, g, ax);
        const Z4 want = oracle::trace_by_search(*ring, ax) +
                        Z4(2) * oracle::trace_by_search(*ring, oracle::ring_pow(*ring, gax, 5));
        REQUIRE(f(x) == want);
      }
    }
  }

  TEST_CASE("f' members match Tr(a(1+2eta)x) + the chain terms") {
    auto ring = GaloisRing::create(4);
    const auto eta = TeichElement::power(6);
    const auto p = chain(4, {1, 4}, {}, Variant::f_prime, eta);
    const RingElement shift = ring->one() + ring->to_ring(eta) + ring->to_ring(eta);
    for (std::uint32_t s = 0; s < ring->group_order(); ++s) {
      const auto f = family_member(ring, p, TeichElement::power(s));
      const RingElement a = oracle::ring_mul(*ring, ring->pow(ring->xi(), s), shift);
      for (auto x : ring->teichmuller_set())
        CHECK(f(x) == oracle::trace_by_search(*ring, oracle::ring_mul(*ring, a, ring->to_ring(x))));
    }
  }

  TEST_CASE("presets") {
    const auto k = preset(Preset::kerdock, 5);
    CHECK(k.chain == std::vector<int>{1, 5});
    CHECK(k.variant == Variant::f_prime);
    CHECK(k.length() == 1);
    PresetArgs args;
    args.e1 = 2;
    const auto h2 = preset(Preset::heng_yue_2, 6, args);
    CHECK(h2.chain == std::vector<int>{1, 2, 6});
    CHECK(h2.variant == Variant::f);
    args.eta = TeichElement::power(4);
    CHECK(preset(Preset::heng_yue_1, 7, args) == preset(Preset::kerdock, 7, args));
    const auto h3 = preset(Preset::heng_yue_3, 6, args);
    CHECK(h3.variant == Variant::f_prime);
    CHECK(h3.eta == TeichElement::power(4));
    CHECK(parse_preset("heng_yue_2") == Preset::heng_yue_2);
    CHECK_THROWS_AS(parse_preset("gold"), Error);
  }

  TEST_CASE("m = 2 verification: all singles and pairs bent") {
    auto ring = GaloisRing::create(2);
    const auto fam = build_family(ring, chain(2, {1, 2}, {}));
    for (auto method : {VerifyMethod::walsh, VerifyMethod::rank}) {
      const auto rep = verify_family(fam, method, PairBudget::everything());
      CHECK(rep.ok());
      CHECK(rep.singles_checked == 3);
      CHECK(rep.pairs_checked == 3);
    }
  }

  TEST_CASE("m = 6 chain (1,2,6): every single and pair has full rank") {
    auto ring = GaloisRing::create(6);
    const auto p = chain(6, {1, 2, 6}, {GammaSpec::power(1)});
    const auto fam = build_family(ring, p);
    const auto rank_rep = verify_family(fam, VerifyMethod::rank, PairBudget::everything(), 2);
    CHECK(rank_rep.ok());
    CHECK(rank_rep.singles_checked + rank_rep.pairs_checked == 2016);
    CHECK(verify_family(fam, VerifyMethod::walsh, PairBudget::everything()).ok());
    CHECK(verify_closed_rank(ring->field(), p, PairBudget::everything()).ok());
  }

  TEST_CASE("walsh and rank verdicts agree on every small valid chain") {
    for (const auto& p : small_valid_chains()) {
      auto ring = GaloisRing::create(p.m);
      const auto fam = build_family(ring, p);
      const auto w = verify_family(fam, VerifyMethod::walsh, PairBudget::everything());
      const auto r = verify_family(fam, VerifyMethod::rank, PairBudget::everything());
      CHECK(w.ok() == r.ok());
      CHECK(w.ok());
    }
  }

  TEST_CASE("verification detects a broken member") {
    auto ring = GaloisRing::create(4);
    const auto fam = build_family(ring, chain(4, {1, 4}, {}));
    // f_1 + 2tr(x) agrees with f_1 only in the odd part; its difference with
    // f_1 is 2tr(x), of rank 0.
    const auto broken = fam.with_member(3, add_forms(fam[0], twice_trace_form(ring)));
    for (auto method : {VerifyMethod::walsh, VerifyMethod::rank}) {
      const auto rep = verify_family(broken, method, PairBudget::everything());
      CHECK_FALSE(rep.ok());
      bool found = false;
      for (const auto& f : rep.failures)
        if ((f.a == TeichElement::power(0) && f.b == TeichElement::power(3)) ||
            (f.a == TeichElement::power(3) && f.b == TeichElement::power(0)))
          found = true;
      CHECK(found);
    }
    // A corrupted table is reported as a failed check, not an exception.
    const auto corrupt = fam.with_member(2, fam[2].with_entry(5, fam[2].at(5) + Z4(1)));
    CHECK_FALSE(verify_family(corrupt, VerifyMethod::rank, PairBudget::everything()).ok());
  }

  TEST_CASE("differences in f' families are bent up to m = 8") {
    for (int m = 2; m <= 8; ++m) {
      auto ring = GaloisRing::create(m);
      const auto p = chain(m, {1, m}, {}, Variant::f_prime, TeichElement::power(static_cast<std::uint32_t>(m)));
      CHECK(verify_family(build_family(ring, p), VerifyMethod::rank, PairBudget::everything()).ok());
    }
  }

  TEST_CASE("radical of every checked difference is trivial") {
    auto ring = GaloisRing::create(6);
    const auto p = chain(6, {1, 2, 6}, {GammaSpec::power(2)});
    const ClosedFormBilinear cf(ring->field(), p);
    for (std::uint32_t a = 0; a < 63; ++a)
      for (std::uint32_t b = a + 1; b < 63; b += 4)
        CHECK(radical(cf.matrix(ring->field().exp(a), ring->field().exp(b))).empty());
  }

  TEST_CASE("build_family is deterministic") {
    auto r1 = GaloisRing::create(6);
    auto r2 = GaloisRing::create(6);
    const auto p = chain(6, {1, 2, 6}, {GammaSpec::power(1)});
    CHECK(build_family(r1, p).forms() == build_family(r2, p).forms());
  }

  TEST_CASE("a zero gamma gives the shorter chain") {
    auto ring = GaloisRing::create(9);
    const auto longer = chain(9, {1, 3, 9}, {GammaSpec::zero()});
    const auto shorter = chain(9, {1, 9}, {});
    for (std::uint32_t s : {0U, 5U, 300U})
      CHECK(family_member(ring, longer, TeichElement::power(s)) == family_member(ring, shorter, TeichElement::power(s)));
  }

  TEST_CASE("sampling budget") {
    const auto [singles, pairs] = select_checks(63, PairBudget::sampled(100, 1));
    CHECK(singles.size() == 63);
    CHECK(pairs.size() == 100);
    std::set<std::pair<std::uint32_t, std::uint32_t>> distinct(pairs.begin(), pairs.end());
    CHECK(distinct.size() == 100);
    for (auto [a, b] : pairs) {
      CHECK(a < b);
      CHECK(b < 63);
    }
    CHECK(select_checks(63, PairBudget::sampled(100, 1)) == select_checks(63, PairBudget::sampled(100, 1)));
    CHECK(select_checks(63, PairBudget::sampled(100, 1)) != select_checks(63, PairBudget::sampled(100, 2)));
    const auto [s_all, p_all] = select_checks(63, PairBudget::everything());
    CHECK(p_all.size() == 63 * 62 / 2);
    std::mt19937_64 rng(0);
    for (int t = 0; t < 1000; ++t) CHECK(uniform_below(rng, 7) < 7);
  }

  TEST_CASE("closed-form rank verification at m = 12 without building the family") {
    auto field = BinaryField(BinaryPoly::smallest_primitive(12));
    const auto p = chain(12, {1, 4, 12}, {GammaSpec::power(3)});
    REQUIRE(validate_chain(p, field).ok());
    const auto rep = verify_closed_rank(field, p, PairBudget::sampled(300, 7));
    CHECK(rep.ok());
    CHECK(rep.pairs_checked == 300);
    CHECK(rep.singles_checked == 300);
  }

  TEST_CASE("closed-form verification rejects invalid chains and unknown methods") {
    CHECK_THROWS_AS(verify_closed_rank(BinaryField(BinaryPoly::smallest_primitive(8)),
                                       chain(8, {1, 2, 8}, {GammaSpec::power(1)}), PairBudget::everything()),
                    Error);
    CHECK(parse_verify_method("closed_rank") == VerifyMethod::closed_rank);
    CHECK_THROWS_AS(parse_verify_method("fast"), Error);
  }
}

TEST_SUITE("families") {
  TEST_CASE("relaxed coefficients build a family whose differences are not bent") {
    auto ring = GaloisRing::create(6);
    const auto p = chain(6, {1, 2, 6}, {GammaSpec::power(0)});
    CHECK_THROWS_AS(build_family(ring, p), Error);
    const auto fam = build_family(ring, p, Constraints::relax_coefficients);
    CHECK(fam.constraints() == Constraints::relax_coefficients);
    CHECK_FALSE(verify_family(fam, VerifyMethod::rank, PairBudget::everything()).ok());
    CHECK_FALSE(verify_family(fam, VerifyMethod::closed_rank, PairBudget::sampled(20, 1)).ok());
    // Structural violations stay fatal under the relaxed policy.
    CHECK_THROWS_AS(build_family(GaloisRing::create(4), chain(4, {1, 2, 4}, {GammaSpec::power(1)}),
                                 Constraints::relax_coefficients),
                    Error);
  }
}
