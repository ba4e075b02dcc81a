#include <algorithm>
#include <random>

#include "doctest.h"
#include "sshowe/ff.hpp"

using namespace sshowe;

namespace {

Fp2 random_elem(const FieldContext& ctx, std::mt19937_64& rng) {
  return ctx.dec(rng() % (ctx.p() * ctx.p()));
}

}  // namespace

TEST_SUITE("ff") {

TEST_CASE("prime validation") {
  CHECK_THROWS_AS(Prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Prime(5), std::invalid_argument);
  CHECK_THROWS_AS(Prime(9), std::invalid_argument);
  CHECK_THROWS_AS(Prime(1ull << 31), std::invalid_argument);
  CHECK(Prime(7).value() == 7);
  CHECK(Prime(2147483647).value() == 2147483647);  // 2^31 - 1
}

TEST_CASE("context accepts the customary irreducible quadratic at p=7") {
  // z^2 - z + 3, i.e. a1 = -1, a0 = 3
  FieldContext ctx(Prime(7), 3, 6);
  CHECK(ctx.minpoly_a0() == 3);
  CHECK(ctx.minpoly_a1() == 6);
  CHECK(ctx.zeta_generates());
  CHECK(ctx.element_order(ctx.zeta()) == 48);
}

TEST_CASE("context rejects reducible quadratics") {
  // z^2 - 1 = (z-1)(z+1)
  CHECK_THROWS_AS(FieldContext(Prime(7), 6, 0), std::invalid_argument);
  // z^2 (double root)
  CHECK_THROWS_AS(FieldContext(Prime(7), 0, 0), std::invalid_argument);
}

TEST_CASE("default minimal polynomial uses the least non-residue") {
  // Brute-force the squares mod 11 to find the least non-residue.
  uint64_t p = 11;
  std::vector<bool> sq(p, false);
  for (uint64_t x = 1; x < p; ++x) sq[x * x % p] = true;
  uint64_t n = 2;
  while (sq[n]) ++n;
  CHECK(n == 2);

  FieldContext ctx{Prime(11)};
  CHECK(ctx.minpoly_a1() == 0);
  CHECK(ctx.minpoly_a0() == p - n);  // z^2 - n
}

TEST_CASE("prime-field inverse") {
  FieldContext ctx{Prime(7)};
  CHECK(ctx.fp_inv(3) == 5);  // 3 * 5 = 15 = 1 (mod 7)
  CHECK_THROWS_AS(ctx.fp_inv(0), std::domain_error);
}

TEST_CASE("zeta arithmetic under z^2 - z + 3 at p=7") {
  FieldContext ctx(Prime(7), 3, 6);
  // zeta^2 = zeta - 3 = zeta + 4
  CHECK(ctx.mul(ctx.zeta(), ctx.zeta()) == ctx.make(4, 1));
  // the conjugate root is 1 - zeta (the roots sum to 1)
  CHECK(ctx.frobenius(ctx.zeta()) == ctx.make(1, 6));
}

TEST_CASE("field axioms and Frobenius on random elements") {
  for (uint64_t p : {7ull, 11ull, 101ull}) {
    FieldContext ctx{Prime(p)};
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
      Fp2 x = random_elem(ctx, rng);
      Fp2 y = random_elem(ctx, rng);
      CHECK(ctx.pow(x, p * p) == x);  // Frobenius has order 2
      CHECK(ctx.frobenius(ctx.frobenius(x)) == x);
      CHECK(ctx.mul(x, y) == ctx.mul(y, x));
      if (x != ctx.zero()) {
        CHECK(ctx.mul(x, ctx.inv(x)) == ctx.one());
        CHECK(ctx.pow(x, p * p - 1) == ctx.one());
      }
      Fp2 c = ctx.from_fp(rng() % p);
      CHECK(ctx.frobenius(c) == c);
    }
  }
}

TEST_CASE("inversion of zero is rejected") {
  FieldContext ctx{Prime(7)};
  CHECK_THROWS_AS(ctx.inv(ctx.zero()), std::domain_error);
}

TEST_CASE("square roots are deterministic and minimal") {
  FieldContext ctx{Prime(7)};
  auto r = ctx.sqrt(ctx.from_fp(4));
  REQUIRE(r.has_value());
  CHECK(*r == ctx.from_fp(2));  // enc 2 < enc 5
  CHECK(ctx.sqrt(ctx.zero()) == ctx.zero());

  // every prime-field element is a square in F_{p^2}
  uint64_t n = least_nonresidue(7);
  auto s = ctx.sqrt(ctx.from_fp(n));
  REQUIRE(s.has_value());
  CHECK(ctx.sqr(*s) == ctx.from_fp(n));
  CHECK_FALSE(ctx.is_fp(*s));
}

TEST_CASE("sqrt of a square returns one of the two roots") {
  FieldContext ctx{Prime(101)};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Fp2 x = random_elem(ctx, rng);
    auto r = ctx.sqrt(ctx.sqr(x));
    REQUIRE(r.has_value());
    CHECK((*r == x || *r == ctx.neg(x)));
    CHECK(*r <= ctx.neg(*r));
  }
}

TEST_CASE("non-squares have no square root") {
  FieldContext ctx{Prime(11)};
  std::mt19937_64 rng(3);
  int non_squares = 0;
  for (int i = 0; i < 200; ++i) {
    Fp2 x = random_elem(ctx, rng);
    if (ctx.is_square(x)) continue;
    ++non_squares;
    CHECK_FALSE(ctx.sqrt(x).has_value());
  }
  CHECK(non_squares > 50);
}

TEST_CASE("canonical encoding is compatible with the element order") {
  FieldContext ctx{Prime(13)};
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    Fp2 x = random_elem(ctx, rng);
    Fp2 y = random_elem(ctx, rng);
    CHECK((x < y) == (ctx.enc(x) < ctx.enc(y)));
    CHECK(ctx.dec(ctx.enc(x)) == x);
  }
}

TEST_CASE("generator flag matches the verified multiplicative order") {
  for (uint64_t p : {7ull, 11ull, 13ull, 37ull}) {
    FieldContext ctx{Prime(p)};
    CHECK(ctx.zeta_generates() == (ctx.element_order(ctx.zeta()) == p * p - 1));
  }
}

TEST_CASE("sorting by the canonical order is deterministic") {
  FieldContext ctx{Prime(11)};
  std::mt19937_64 rng(1);
  std::vector<Fp2> a;
  for (int i = 0; i < 64; ++i) a.push_back(random_elem(ctx, rng));
  std::vector<Fp2> b = a;
  std::sort(a.begin(), a.end());
  std::shuffle(b.begin(), b.end(), rng);
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

}  // TEST_SUITE
