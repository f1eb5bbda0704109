#include <doctest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "z4cb/z4cb.hpp"

using namespace z4cb;

namespace {

std::vector<TeichElement> teich(const GaloisRing& r) { return r.teichmuller_set(); }

}  // namespace

TEST_SUITE("ring_core") {
  TEST_CASE("default binary polynomials are the smallest primitive masks") {
    CHECK(BinaryPoly::smallest_primitive(2).to_string() == "111");
    CHECK(BinaryPoly::smallest_primitive(3).to_string() == "1101");
    CHECK(BinaryPoly::smallest_primitive(4).to_string() == "11001");
    for (int m = 2; m <= 12; ++m) {
      const auto g = BinaryPoly::smallest_primitive(m);
      CHECK(g.degree() == m);
      CHECK(g.is_primitive());
      for (std::uint32_t mask = (1U << m) + 1; mask < g.mask(); mask += 2)
        CHECK_FALSE(BinaryPoly(mask).is_primitive());
    }
  }

  TEST_CASE("primitivity rejects reducible and non-primitive irreducible polynomials") {
    CHECK_FALSE(BinaryPoly::parse("11111").is_primitive());  // x^4+x^3+x^2+x+1, order 5
    CHECK_FALSE(BinaryPoly::parse("101").is_primitive());    // (x+1)^2
    CHECK(BinaryPoly::parse("10011").is_primitive());        // x^4+x^3+1
  }

  TEST_CASE("hensel lift of small primitive polynomials") {
    CHECK(hensel_lift(BinaryPoly::parse("111")).to_string() == "111");
    CHECK(hensel_lift(BinaryPoly::parse("1101")).to_string() == "3121");
    CHECK_THROWS_AS(hensel_lift(BinaryPoly::parse("11")), Error);
    try {
      hensel_lift(BinaryPoly::parse("11111"));
      FAIL("expected NonPrimitiveInput");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonPrimitiveInput);
    }
  }

  TEST_CASE("lifted polynomial reduces to g and divides y^(2^m-1) - 1 over Z4") {
    for (int m = 2; m <= 12; ++m) {
      const auto g = BinaryPoly::smallest_primitive(m);
      const Z4Poly f = hensel_lift(g);
      CHECK(f.reduce_mod2() == g);
      CHECK(f.coeff(m) == Z4(1));
      // y^n - 1 mod f via repeated multiplication by y.
      const auto fi = oracle::to_int_poly(f);
      oracle::IntPoly acc{1};
      const std::uint32_t n = (1U << m) - 1;
      for (std::uint32_t k = 0; k < n; ++k) acc = oracle::poly_mod(oracle::poly_mul(acc, {0, 1}), fi);
      oracle::IntPoly one(static_cast<std::size_t>(m), 0);
      one[0] = 1;
      CHECK(acc == one);
    }
  }

  TEST_CASE("every primitive polynomial of degree 4 and 5 lifts") {
    for (int m : {4, 5}) {
      int count = 0;
      for (std::uint32_t mask = 1U << m; mask < (2U << m); ++mask) {
        BinaryPoly g(mask);
        if (!g.is_primitive()) continue;
        ++count;
        auto ring = GaloisRing::create(g);
        CHECK(ring->pow(ring->xi(), ring->group_order()) == ring->one());
      }
      CHECK(count == (m == 4 ? 2 : 6));
    }
  }

  TEST_CASE("ring multiplication example and agreement with long division") {
    auto ring = GaloisRing::create(2);
    const RingElement x2 = ring->mul(ring->xi(), ring->xi());
    CHECK(x2.coeff(0) == Z4(3));
    CHECK(x2.coeff(1) == Z4(3));
    CHECK(ring->add(ring->constant(Z4(2)), ring->constant(Z4(2))) == ring->zero());

    for (int m = 2; m <= 3; ++m) {
      auto r = GaloisRing::create(m);
      const auto all = oracle::all_ring_elements(*r);
      for (const auto& a : all)
        for (const auto& b : all) REQUIRE(r->mul(a, b) == oracle::ring_mul(*r, a, b));
    }
    std::mt19937_64 rng(7);
    for (int m : {5, 8, 13, 17, 20}) {
      auto r = GaloisRing::create(m);
      const std::uint32_t mask = (1U << m) - 1;
      for (int t = 0; t < 200; ++t) {
        RingElement a(static_cast<std::uint32_t>(rng()) & mask, static_cast<std::uint32_t>(rng()) & mask, r->tag());
        RingElement b(static_cast<std::uint32_t>(rng()) & mask, static_cast<std::uint32_t>(rng()) & mask, r->tag());
        REQUIRE(r->mul(a, b) == oracle::ring_mul(*r, a, b));
      }
    }
  }

  TEST_CASE("ring axioms hold exhaustively for m = 2") {
    auto r = GaloisRing::create(2);
    const auto all = oracle::all_ring_elements(*r);
    for (const auto& a : all) {
      CHECK(r->add(a, r->zero()) == a);
      CHECK(r->mul(a, r->one()) == a);
      CHECK(r->add(a, r->neg(a)) == r->zero());
      CHECK(r->scale(Z4(4), a) == r->zero());
      for (const auto& b : all) {
        CHECK(r->mul(a, b) == r->mul(b, a));
        for (const auto& c : all) {
          REQUIRE(r->mul(r->mul(a, b), c) == r->mul(a, r->mul(b, c)));
          REQUIRE(r->mul(a, r->add(b, c)) == r->add(r->mul(a, b), r->mul(a, c)));
        }
      }
    }
  }

  TEST_CASE("elements from different rings do not mix") {
    auto r3 = GaloisRing::create(3);
    auto r4 = GaloisRing::create(4);
    try {
      (void)(r3->one() + r4->one());
      FAIL("expected ContextMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ContextMismatch);
    }
    CHECK_THROWS_AS(r3->mul(r3->xi(), r4->xi()), Error);
  }

  TEST_CASE("Teichmuller set of GR(4,2)") {
    auto r = GaloisRing::create(2);
    std::set<std::pair<int, int>> got;
    for (auto t : teich(*r)) {
      const auto z = r->to_ring(t);
      got.insert({z.coeff(0).value(), z.coeff(1).value()});
    }
    const std::set<std::pair<int, int>> want{{0, 0}, {1, 0}, {0, 1}, {3, 3}};
    CHECK(got == want);
  }

  TEST_CASE("Teichmuller elements are fixed by x -> x^(2^m) and have distinct residues") {
    for (int m = 2; m <= 10; ++m) {
      auto r = GaloisRing::create(m);
      std::set<std::uint32_t> residues;
      for (auto t : teich(*r)) {
        const auto z = r->to_ring(t);
        CHECK(r->pow(z, r->size()) == z);
        CHECK(r->is_teichmuller(z));
        residues.insert(r->mu(z).bits);
        CHECK(r->mu(z) == r->mu(t));
        CHECK(r->lift(r->mu(t)) == t);
      }
      CHECK(residues.size() == r->size());
    }
  }

  TEST_CASE("units are exactly the elements with nonzero residue") {
    for (int m = 2; m <= 3; ++m) {
      auto r = GaloisRing::create(m);
      const auto all = oracle::all_ring_elements(*r);
      for (const auto& a : all) {
        bool found = false;
        for (const auto& b : all)
          if (oracle::ring_mul(*r, a, b) == r->one()) found = true;
        CHECK(found == r->is_invertible(a));
        if (found) {
          CHECK(oracle::ring_mul(*r, a, r->inverse(a)) == r->one());
        } else {
          try {
            (void)r->inverse(a);
            FAIL("expected NotInvertible");
          } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotInvertible);
          }
        }
      }
    }
  }

  TEST_CASE("differences and sums of distinct Teichmuller elements are units") {
    for (int m = 2; m <= 6; ++m) {
      auto r = GaloisRing::create(m);
      const auto f = teich(*r);
      for (auto a : f)
        for (auto b : f) {
          if (a == b) continue;
          const auto za = r->to_ring(a);
          const auto zb = r->to_ring(b);
          REQUIRE(r->is_invertible(za - zb));
          REQUIRE(r->is_invertible(za + zb));
          CHECK(r->mul(za - zb, r->inverse(za - zb)) == r->one());
        }
    }
  }

  TEST_CASE("2-adic decomposition examples") {
    auto r = GaloisRing::create(2);
    CHECK(r->two_adic_decompose(r->zero()) == std::pair{TeichElement::zero(), TeichElement::zero()});
    CHECK(r->two_adic_decompose(r->constant(Z4(2))) == std::pair{TeichElement::zero(), TeichElement::power(0)});
    CHECK(r->two_adic_decompose(r->constant(Z4(3))) == std::pair{TeichElement::power(0), TeichElement::power(0)});
  }

  TEST_CASE("2-adic decomposition is the unique representation, by enumeration") {
    for (int m = 2; m <= 3; ++m) {
      auto r = GaloisRing::create(m);
      const auto f = teich(*r);
      for (const auto& z : oracle::all_ring_elements(*r)) {
        int hits = 0;
        std::pair<TeichElement, TeichElement> hit;
        for (auto a : f)
          for (auto b : f)
            if (r->to_ring(a) + r->to_ring(b) + r->to_ring(b) == z) {
              ++hits;
              hit = {a, b};
            }
        REQUIRE(hits == 1);
        CHECK(r->two_adic_decompose(z) == hit);
      }
    }
  }

  TEST_CASE("2-adic decomposition recomposes for random elements up to m = 20") {
    std::mt19937_64 rng(11);
    for (int m : {4, 7, 12, 16, 20}) {
      auto r = GaloisRing::create(m);
      const std::uint32_t mask = (1U << m) - 1;
      for (int t = 0; t < 50; ++t) {
        RingElement z(static_cast<std::uint32_t>(rng()) & mask, static_cast<std::uint32_t>(rng()) & mask, r->tag());
        auto [a, b] = r->two_adic_decompose_ring(z);
        CHECK(a + b + b == z);
        CHECK(r->pow(a, r->size()) == a);
        CHECK(r->pow(b, r->size()) == b);
      }
    }
  }

  TEST_CASE("Teichmuller addition examples") {
    for (int m = 2; m <= 6; ++m) {
      auto r = GaloisRing::create(m);
      const auto one = TeichElement::power(0);
      CHECK(r->teich_add(one, one) == TeichElement::zero());
      for (auto a : teich(*r)) {
        CHECK(r->teich_add(a, TeichElement::zero()) == a);
        CHECK(r->teich_add(a, a) == TeichElement::zero());
      }
    }
    auto r2 = GaloisRing::create(2);
    CHECK(r2->teich_add(TeichElement::power(1), TeichElement::power(0)) == TeichElement::power(2));
  }

  TEST_CASE("mu is a field isomorphism from (F, (+), *) to F_2^m") {
    for (int m = 2; m <= 5; ++m) {
      auto r = GaloisRing::create(m);
      const auto& fld = r->field();
      const auto f = teich(*r);
      const std::uint32_t modulus = r->binary_poly().mask();
      for (auto a : f)
        for (auto b : f) {
          REQUIRE(r->mu(r->teich_add(a, b)) == r->mu(a) + r->mu(b));
          REQUIRE(r->mu(r->teich_mul(a, b)).bits == oracle::field_mul(r->mu(a).bits, r->mu(b).bits, modulus));
          CHECK(fld.mul(r->mu(a), r->mu(b)) == r->mu(r->teich_mul(a, b)));
        }
    }
  }

  TEST_CASE("(F, (+), *) satisfies the field axioms for m <= 3") {
    for (int m = 2; m <= 3; ++m) {
      auto r = GaloisRing::create(m);
      const auto f = teich(*r);
      for (auto a : f) {
        if (!a.is_zero()) {
          bool has_inverse = false;
          for (auto b : f)
            if (r->teich_mul(a, b) == TeichElement::power(0)) has_inverse = true;
          CHECK(has_inverse);
        }
        for (auto b : f) {
          CHECK(r->teich_add(a, b) == r->teich_add(b, a));
          for (auto c : f) {
            CHECK(r->teich_add(r->teich_add(a, b), c) == r->teich_add(a, r->teich_add(b, c)));
            CHECK(r->teich_mul(a, r->teich_add(b, c)) == r->teich_add(r->teich_mul(a, b), r->teich_mul(a, c)));
          }
        }
      }
    }
  }

  TEST_CASE("mu kills 2R and matches the field exponentials") {
    for (int m = 2; m <= 8; ++m) {
      auto r = GaloisRing::create(m);
      for (auto b : teich(*r)) CHECK(r->mu(r->to_ring(b) + r->to_ring(b)).is_zero());
      for (std::uint32_t k = 0; k < r->group_order(); ++k)
        CHECK(r->mu(TeichElement::power(k)) == r->field().exp(k));
    }
  }

  TEST_CASE("trace examples") {
    for (int m = 2; m <= 9; ++m) {
      auto r = GaloisRing::create(m);
      CHECK(r->trace(r->one()) == Z4(m));
      CHECK(r->trace(TeichElement::power(0)) == Z4(m));
      CHECK(r->trace(TeichElement::zero()) == Z4(0));
    }
    auto r2 = GaloisRing::create(2);
    CHECK(r2->trace(TeichElement::power(1)) == Z4(3));
  }

  TEST_CASE("trace agrees with the conjugate-sum oracle for m <= 3") {
    for (int m = 2; m <= 3; ++m) {
      auto r = GaloisRing::create(m);
      for (const auto& z : oracle::all_ring_elements(*r)) REQUIRE(r->trace(z) == oracle::trace_by_search(*r, z));
    }
  }

  TEST_CASE("trace is Z4-linear and Frobenius invariant") {
    std::mt19937_64 rng(3);
    for (int m : {3, 6, 11, 15, 19}) {
      auto r = GaloisRing::create(m);
      const std::uint32_t mask = (1U << m) - 1;
      auto rnd = [&] {
        return RingElement(static_cast<std::uint32_t>(rng()) & mask, static_cast<std::uint32_t>(rng()) & mask, r->tag());
      };
      for (int t = 0; t < 40; ++t) {
        const auto a = rnd();
        const auto b = rnd();
        const Z4 c(static_cast<int>(rng() & 3));
        CHECK(r->trace(a + b) == r->trace(a) + r->trace(b));
        CHECK(r->trace(r->scale(c, a)) == c * r->trace(a));
        CHECK(r->trace(r->frobenius(a)) == r->trace(a));
        CHECK(r->trace(a + a).is_even());
      }
    }
  }

  TEST_CASE("twice the ring trace is twice the field trace of the residue") {
    for (int m = 2; m <= 10; ++m) {
      auto r = GaloisRing::create(m);
      for (auto t : teich(*r)) {
        const Z4 lhs = Z4(2) * r->trace(t);
        const Z4 rhs(2 * r->field().trace(r->mu(t)));
        REQUIRE(lhs == rhs);
        CHECK(r->trace(t) == r->trace(r->to_ring(t)));
      }
    }
  }

  TEST_CASE("square root is the (m-1)-th Frobenius power on F") {
    for (int m = 2; m <= 8; ++m) {
      auto r = GaloisRing::create(m);
      for (auto t : teich(*r)) {
        auto s = r->to_ring(t);
        for (int i = 0; i < m - 1; ++i) s = r->frobenius(s);
        CHECK(r->mul(s, s) == r->to_ring(t));
        auto full = s;
        full = r->frobenius(full);
        CHECK(full == r->to_ring(t));
      }
    }
  }
}

TEST_SUITE("binary_field") {
  TEST_CASE("field multiplication agrees with carry-less long division") {
    std::mt19937_64 rng(5);
    for (int m : {2, 5, 9, 14, 18, 20}) {
      BinaryField fld(BinaryPoly::smallest_primitive(m));
      const std::uint32_t mask = (1U << m) - 1;
      for (int t = 0; t < 300; ++t) {
        const FieldElement a{static_cast<std::uint32_t>(rng()) & mask};
        const FieldElement b{static_cast<std::uint32_t>(rng()) & mask};
        REQUIRE(fld.mul(a, b).bits == oracle::field_mul(a.bits, b.bits, fld.modulus().mask()));
        if (!a.is_zero()) CHECK(fld.mul(a, fld.inverse(a)) == fld.one());
      }
    }
  }

  TEST_CASE("absolute and relative traces agree with the definition") {
    for (int m = 2; m <= 12; ++m) {
      BinaryField fld(BinaryPoly::smallest_primitive(m));
      for (std::uint32_t x = 0; x < fld.order(); x += (m > 9 ? 7 : 1)) {
        const FieldElement fx{x};
        CHECK(static_cast<std::uint32_t>(fld.trace(fx)) == oracle::relative_trace(x, 1, m, fld.modulus().mask()));
        for (int e = 1; e <= m; ++e) {
          if (m % e != 0) continue;
          CHECK(fld.relative_trace(fx, e).bits == oracle::relative_trace(x, e, m, fld.modulus().mask()));
        }
      }
    }
  }

  TEST_CASE("relative trace identities") {
    BinaryField f6(BinaryPoly::smallest_primitive(6));
    for (std::uint32_t x = 0; x < f6.order(); ++x) {
      const FieldElement fx{x};
      CHECK(f6.relative_trace(fx, 6) == fx);
      CHECK(f6.in_subfield(f6.relative_trace(fx, 2), 2));
      CHECK(f6.relative_trace(f6.relative_trace(fx, 2), 1) == f6.relative_trace(fx, 1));
      CHECK(f6.relative_trace(f6.square(fx), 3) == f6.square(f6.relative_trace(fx, 3)));
    }
    BinaryField f2(BinaryPoly::smallest_primitive(2));
    CHECK(f2.relative_trace(f2.generator(), 1) == f2.one());
    try {
      (void)f6.relative_trace(f6.one(), 4);
      FAIL("expected BadTower");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadTower);
    }
  }

  TEST_CASE("subfield generators generate the subfield") {
    BinaryField f12(BinaryPoly::smallest_primitive(12));
    for (int e : {1, 2, 3, 4, 6, 12}) {
      const FieldElement g = f12.subfield_generator(e);
      CHECK(f12.in_subfield(g, e));
      std::set<std::uint32_t> seen;
      FieldElement x = f12.one();
      for (std::uint32_t k = 0; k < (1U << e) - 1; ++k) {
        seen.insert(x.bits);
        x = f12.mul(x, g);
      }
      CHECK(x == f12.one());
      CHECK(seen.size() == (1U << e) - 1);
    }
  }

  TEST_CASE("oversized and non-primitive moduli are rejected") {
    try {
      BinaryField f(BinaryPoly::parse("11111"));
      FAIL("expected NonPrimitiveInput");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonPrimitiveInput);
    }
    CHECK_THROWS_AS(GaloisRing::create(21), Error);
    CHECK_THROWS_AS(GaloisRing::create(1), Error);
  }
}
