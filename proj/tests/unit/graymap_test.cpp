#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "z4cb/z4cb.hpp"

using namespace z4cb;

namespace {

ChainParams kerdock_like(int m, TeichElement eta) { return ChainParams{m, {1, m}, {}, eta, Variant::f_prime}; }

/// q(x) = sum_{i=1}^{(m-1)/2} tr(x^(2^i+1)) on F_2^m.
int q_of(const BinaryField& f, FieldElement x) {
  int v = 0;
  for (int i = 1; i <= (f.degree() - 1) / 2; ++i) v ^= f.trace(f.mul(x, f.pow(x, std::uint64_t{1} << i)));
  return v;
}

}  // namespace

TEST_SUITE("graymap") {
  TEST_CASE("decomposition examples") {
    auto ring = GaloisRing::create(4);
    const auto [z1, z2] = decompose(QuadraticForm::zero(ring));
    CHECK(z1 == BooleanFn(4));
    CHECK(z2 == BooleanFn(4));
    const auto [t1, t2] = decompose(twice_trace_form(ring));
    CHECK(t1 == BooleanFn(4));
    for (std::uint32_t u = 0; u < 16; ++u) CHECK(t2.at(u) == ring->field().trace({u}));
  }

  TEST_CASE("Tr(x) = tr(x_bar) + 2q(x_bar) for odd m") {
    for (int m : {3, 5, 7}) {
      auto ring = GaloisRing::create(m);
      const auto tr = trace_monomial_form(ring, TeichElement::power(0), 1);
      const auto [q1, q2] = decompose(tr);
      for (std::uint32_t u = 0; u < ring->size(); ++u) {
        CHECK(q1.at(u) == ring->field().trace({u}));
        CHECK(q2.at(u) == q_of(ring->field(), {u}));
        CHECK(tr.at_field({u}) == Z4(ring->field().trace({u}) + 2 * q_of(ring->field(), {u})));
      }
    }
  }

  TEST_CASE("decompose and recompose") {
    std::mt19937_64 rng(31);
    for (int m = 2; m <= 8; ++m) {
      auto ring = GaloisRing::create(m);
      const auto q = random_quadratic_form(ring, rng);
      const auto [q1, q2] = decompose(q);
      for (auto x : ring->teichmuller_set()) {
        const auto u = ring->mu(x).bits;
        CHECK(q(x) == Z4(q1.at(u) + 2 * q2.at(u)));
      }
    }
  }

  TEST_CASE("Gray map examples") {
    auto ring = GaloisRing::create(3);
    CHECK(gray(QuadraticForm::zero(ring)) == BooleanFn(4));
    const auto g2 = gray(twice_trace_form(ring));
    for (std::uint32_t u = 0; u < 8; ++u) {
      CHECK(g2.at(2 * u) == g2.at(2 * u + 1));
      CHECK(g2.at(2 * u) == ring->field().trace({u}));
    }
    // f'_1 with eta = 0 is Tr(x): phi(u, v) = tr(u) v + q(u).
    const auto f1 = family_member(ring, kerdock_like(3, TeichElement::zero()), TeichElement::power(0));
    const auto g = gray(f1);
    for (std::uint32_t u = 0; u < 8; ++u)
      for (int v = 0; v < 2; ++v)
        CHECK(g.at(2 * u + static_cast<std::uint32_t>(v)) ==
              ((ring->field().trace({u}) * v) ^ q_of(ring->field(), {u})));
  }

  TEST_CASE("Walsh-Hadamard transform") {
    const auto w0 = walsh_hadamard(BooleanFn(3));
    CHECK(w0.values[0] == 8);
    for (std::size_t i = 1; i < 8; ++i) CHECK(w0.values[i] == 0);
    BooleanFn prod(2);
    prod.set(3, 1);
    for (auto v : walsh_hadamard(prod).values) CHECK(std::abs(v) == 2);
    CHECK(is_boolean_bent(prod));
    std::mt19937_64 rng(32);
    for (int d = 1; d <= 10; ++d) {
      BooleanFn f(d);
      for (std::size_t i = 0; i < f.size(); ++i) f.set(i, static_cast<int>(rng() & 1U));
      const auto s = walsh_hadamard(f);
      std::int64_t sum = 0;
      for (auto v : s.values) sum += v * v;
      CHECK(sum == (std::int64_t{1} << (2 * d)));
      if (d <= 7) CHECK(s.values == oracle::wht_bruteforce(f));
    }
  }

  TEST_CASE("bentness checks") {
    BooleanFn one(4);
    for (std::size_t i = 0; i < 16; ++i) one.set(i, 1);
    CHECK_FALSE(is_boolean_bent(one));
    CHECK_FALSE(is_boolean_bent(BooleanFn(4)));
    try {
      (void)is_boolean_bent(BooleanFn(3));
      FAIL("expected OddDimension");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OddDimension);
    }
  }

  TEST_CASE("Gray images of f'_a are bent for m = 3") {
    auto ring = GaloisRing::create(3);
    for (auto eta : {TeichElement::zero(), TeichElement::power(0), TeichElement::power(1)}) {
      const auto fam = build_family(ring, kerdock_like(3, eta));
      for (const auto& f : fam.forms()) CHECK(is_boolean_bent(gray(f)));
    }
  }

  TEST_CASE("Gray images of f'_a are bent for m = 5 and 7") {
    std::mt19937_64 rng(33);
    for (int m : {5, 7}) {
      auto ring = GaloisRing::create(m);
      for (int t = 0; t < 20; ++t) {
        const auto eta = TeichElement::from_index(rng() % ring->size());
        const auto a = TeichElement::power(static_cast<std::uint32_t>(rng() % ring->group_order()));
        CHECK(is_boolean_bent(gray(family_member(ring, kerdock_like(m, eta), a))));
      }
    }
  }
}
