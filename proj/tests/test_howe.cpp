#include <random>

#include "doctest.h"
#include "sshowe/genus2.hpp"
#include "sshowe/howe.hpp"

using namespace sshowe;

namespace {

Fp2 random_nonsingular(const FieldContext& ctx, std::mt19937_64& rng) {
  for (;;) {
    Fp2 x = ctx.dec(rng() % (ctx.p() * ctx.p()));
    if (x != ctx.zero() && x != ctx.one() && x != ctx.neg(ctx.one())) return x;
  }
}

}  // namespace

TEST_SUITE("howe") {

TEST_CASE("st from lambdas at p = 11: worked example and round trip") {
  FieldContext ctx{Prime(11)};
  Fp2 l1 = ctx.from_fp(2), l3 = ctx.from_fp(3);
  auto [s, t] = genus4_st_from_lambdas(ctx, l1, l3);
  // d = 4 - 4 + 3 = 3, s = 1/3 = 4, t = (12 - 7)/3 = 5 * 4 = 9 (mod 11)
  CHECK(s == ctx.from_fp(4));
  CHECK(t == ctx.from_fp(9));
  auto lams = genus4_lambdas(ctx, s, t);
  CHECK(lams.lambda1 == l1);  // (9-4)/(1-4) = 5/(-3) = 2 (mod 11)
  CHECK(lams.lambda3 == l3);  // (81-16)/(1-16) = 10/7 = 3 (mod 11)
  CHECK(lams.lambda4 == ctx.mul(l3, ctx.inv(ctx.sqr(t))));  // 3/81
}

TEST_CASE("st from lambdas rejects a vanishing denominator") {
  FieldContext ctx{Prime(11)};
  // lambda3 = 2*lambda1 - lambda1^2 makes l1^2 - 2 l1 + l3 = 0
  Fp2 l1 = ctx.from_fp(3);
  Fp2 l3 = ctx.sub(ctx.add(l1, l1), ctx.sqr(l1));
  REQUIRE(l3 == ctx.from_fp(8));
  CHECK_THROWS_AS(genus4_st_from_lambdas(ctx, l1, l3), std::invalid_argument);
  CHECK_THROWS_AS(genus4_st_from_lambdas(ctx, l1, l1), std::invalid_argument);
  CHECK_THROWS_AS(genus4_st_from_lambdas(ctx, ctx.zero(), l3), std::invalid_argument);
}

TEST_CASE("lambda ratio identity and the six closed forms") {
  std::mt19937_64 rng(77);
  for (uint64_t p : {11ull, 23ull, 101ull}) {
    FieldContext ctx{Prime(p)};
    Fp2 one = ctx.one(), two = ctx.from_fp(2);
    int done = 0;
    while (done < 100) {
      Fp2 l1 = random_nonsingular(ctx, rng);
      Fp2 l3 = random_nonsingular(ctx, rng);
      if (l1 == ctx.neg(one)) continue;
      if (l3 == ctx.neg(one)) continue;
      if (!genus4_conditions(ctx, l1, l3)) continue;
      ++done;
      auto [s, t] = genus4_st_from_lambdas(ctx, l1, l3);
      auto lams = genus4_lambdas(ctx, s, t);
      CHECK(lams.lambda1 == l1);
      CHECK(lams.lambda3 == l3);
      CHECK(ctx.div(lams.lambda3, lams.lambda4) == ctx.sqr(t));

      Fp2 d = ctx.add(ctx.sub(ctx.sqr(l1), ctx.add(l1, l1)), l3);
      Fp2 dinv = ctx.inv(d);
      CHECK(ctx.sub(s, one) == ctx.mul(ctx.mul(two, ctx.sub(l1, l3)), dinv));
      CHECK(ctx.add(s, one) ==
            ctx.mul(ctx.mul(two, ctx.mul(l1, ctx.sub(l1, one))), dinv));
      CHECK(ctx.sub(t, one) ==
            ctx.neg(ctx.mul(ctx.mul(two, ctx.mul(ctx.sub(l1, one), ctx.sub(l1, l3))), dinv)));
      CHECK(ctx.add(t, one) ==
            ctx.mul(ctx.mul(two, ctx.mul(l1, ctx.sub(l3, one))), dinv));
      CHECK(ctx.sub(s, t) ==
            ctx.mul(ctx.mul(two, ctx.mul(l1, ctx.sub(l1, l3))), dinv));
      CHECK(ctx.add(s, t) ==
            ctx.mul(ctx.mul(two, ctx.mul(l3, ctx.sub(l1, one))), dinv));
    }
  }
}

TEST_CASE("genus-4 search: bottom at 13, closed form at 11, hit at 37") {
  SearchConfig cfg;
  {
    FieldContext ctx{Prime(13)};
    auto out = search_genus4(ctx, cfg);
    CHECK(out.status == SearchStatus::Exhausted);
    CHECK(!out.certificate.has_value());
  }
  {
    FieldContext ctx{Prime(11)};
    auto out = search_genus4_cor(ctx);
    REQUIRE(out.status == SearchStatus::Found);
    const auto& d = std::get<Genus4Data>(out.certificate->data);
    // s is a primitive cube root of unity and t its square
    CHECK(ctx.pow(d.s, 3) == ctx.one());
    CHECK(d.s != ctx.one());
    CHECK(d.t == ctx.sqr(d.s));
    CHECK(verify(*out.certificate).ok());
  }
  {
    FieldContext ctx{Prime(37)};
    auto out = search_genus4(ctx, cfg);
    REQUIRE(out.status == SearchStatus::Found);
    CHECK(verify(*out.certificate).ok());
  }
  {
    FieldContext ctx{Prime(13)};
    CHECK_THROWS_AS(search_genus4_cor(ctx), std::invalid_argument);
  }
}

TEST_CASE("genus-4 closed form verifies with all three j-invariants zero") {
  for (uint64_t p : {11ull, 17ull, 23ull, 29ull}) {
    FieldContext ctx{Prime(p)};
    auto out = search_genus4_cor(ctx);
    REQUIRE(out.status == SearchStatus::Found);
    const auto& d = std::get<Genus4Data>(out.certificate->data);
    CHECK(j_from_lambda(ctx, d.lambda1) == ctx.zero());
    CHECK(j_from_lambda(ctx, d.lambda3) == ctx.zero());
    CHECK(j_from_lambda(ctx, d.lambda4) == ctx.zero());
    CHECK(verify(*out.certificate).ok());
  }
}

TEST_CASE("genus-4 search is deterministic and honors the work limit") {
  FieldContext ctx{Prime(37)};
  SearchConfig cfg;
  auto a = search_genus4(ctx, cfg);
  auto b = search_genus4(ctx, cfg);
  REQUIRE(a.status == SearchStatus::Found);
  CHECK(serialize(*a.certificate) == serialize(*b.certificate));
  CHECK(a.stats.pairs_tested == b.stats.pairs_tested);
  CHECK(a.stats.supersingular_checks == b.stats.supersingular_checks);

  SearchConfig capped;
  capped.work_limit = 3;
  FieldContext ctx13{Prime(13)};
  auto c = search_genus4(ctx13, capped);
  CHECK(c.status == SearchStatus::Interrupted);
}

TEST_CASE("restricted first pass and full scan agree on solvability") {
  FieldContext ctx{Prime(37)};
  SearchConfig plain;
  plain.restricted_first = false;
  SearchConfig two_pass;
  auto a = search_genus4(ctx, plain);
  auto b = search_genus4(ctx, two_pass);
  CHECK(a.status == b.status);
  CHECK(verify(*a.certificate).ok());
  CHECK(verify(*b.certificate).ok());
}

TEST_CASE("case-3 j-equation solutions") {
  FieldContext ctx{Prime(23)};
  // j = 0 factors the equation as 64 (3s-1)^3 (s-3)^3
  auto roots = solve_case3_j_equation(ctx, ctx.zero(), 5);
  std::vector<Fp2> expect = {ctx.from_fp(3), ctx.inv(ctx.from_fp(3))};
  std::sort(expect.begin(), expect.end());
  CHECK(roots == expect);

  std::mt19937_64 rng(15);
  for (int i = 0; i < 10; ++i) {
    Fp2 j = ctx.dec(rng() % (23 * 23));
    for (const Fp2& s : solve_case3_j_equation(ctx, j, 5)) CHECK(case3_j(ctx, s) == j);
  }

  // for a supersingular j, every solution gives a superspecial genus-2 curve
  auto tables = build_tables(ctx, 0);
  for (const Fp2& j : tables.S)
    for (const Fp2& s : solve_case3_j_equation(ctx, j, 5))
      CHECK(is_superspecial_g2(ctx, model_case3(ctx, ctx.sqr(s))));
}

TEST_CASE("case-2 j-equation solutions") {
  FieldContext ctx{Prime(23)};
  auto roots = solve_case2_j_equation(ctx, ctx.zero(), 5);
  std::vector<Fp2> expect = {ctx.from_fp(2), ctx.inv(ctx.from_fp(2))};
  std::sort(expect.begin(), expect.end());
  CHECK(roots == expect);

  std::mt19937_64 rng(16);
  for (int i = 0; i < 10; ++i) {
    Fp2 j = ctx.dec(rng() % (23 * 23));
    for (const Fp2& u : solve_case2_j_equation(ctx, j, 5)) CHECK(case2_j(ctx, u) == j);
  }

  auto tables = build_tables(ctx, 0);
  for (const Fp2& j : tables.S)
    for (const Fp2& u : solve_case2_j_equation(ctx, j, 5))
      CHECK(is_superspecial_g2(ctx, model_case2(ctx, ctx.sqr(u))));
}

TEST_CASE("genus-6 E3 j-invariant: symmetry, scaling, and the c-form") {
  FieldContext ctx{Prime(31)};
  std::mt19937_64 rng(18);
  for (int i = 0; i < 100; ++i) {
    Fp2 u = random_nonsingular(ctx, rng);
    Fp2 v = random_nonsingular(ctx, rng);
    if (u == v || u == ctx.neg(v)) continue;
    Fp2 j = genus6_e3_j(ctx, u, v);
    CHECK(genus6_e3_j(ctx, v, u) == j);
    Fp2 c = ctx.dec(2 + rng() % (31 * 31 - 2));
    if (c != ctx.zero()) CHECK(genus6_e3_j(ctx, ctx.mul(c, u), ctx.mul(c, v)) == j);
    // c3 = u/v + v/u reduces to the case-2 closed form
    Fp2 c3 = ctx.add(ctx.div(u, v), ctx.div(v, u));
    Fp2 t = ctx.sub(ctx.mul_fp(c3, 2), ctx.from_fp(5));
    Fp2 num = ctx.mul_fp(ctx.mul(ctx.mul(t, t), t), 6912 % 31);
    Fp2 cp2 = ctx.add(c3, ctx.from_fp(2));
    Fp2 den = ctx.mul(ctx.sub(c3, ctx.from_fp(2)), ctx.mul(ctx.sqr(cp2), cp2));
    CHECK(j == ctx.div(num, den));
  }
  CHECK_THROWS_AS(genus6_e3_j(ctx, ctx.from_fp(2), ctx.from_fp(2)), std::invalid_argument);
}

TEST_CASE("genus-5 naive search: bottoms and a hit") {
  SearchConfig cfg;
  {
    FieldContext ctx{Prime(37)};
    CHECK(search_genus5_naive(ctx, cfg).status == SearchStatus::Exhausted);
  }
  {
    FieldContext ctx{Prime(13)};
    CHECK(search_genus5_naive(ctx, cfg).status == SearchStatus::Exhausted);
  }
  {
    FieldContext ctx{Prime(23)};
    auto out = search_genus5_naive(ctx, cfg);
    REQUIRE(out.status == SearchStatus::Found);
    CHECK(verify(*out.certificate).ok());
    const auto& d = std::get<Genus5Data>(out.certificate->data);
    auto h = h_polynomial(Prime(23));
    CHECK(eval_fp_coeffs(ctx, h, ctx.sqr(d.s)) == ctx.zero());
    CHECK(eval_fp_coeffs(ctx, h, ctx.sqr(d.t)) == ctx.zero());
  }
}

TEST_CASE("genus-5 j-pair search: bottom at 53, hit at 139") {
  SearchConfig cfg;
  {
    FieldContext ctx{Prime(53)};
    CHECK(search_genus5(ctx, cfg).status == SearchStatus::Exhausted);
  }
  {
    FieldContext ctx{Prime(139)};
    auto out = search_genus5(ctx, cfg);
    REQUIRE(out.status == SearchStatus::Found);
    CHECK(verify(*out.certificate).ok());
    const auto& d = std::get<Genus5Data>(out.certificate->data);
    auto h = h_polynomial(Prime(139));
    CHECK(eval_fp_coeffs(ctx, h, ctx.sqr(d.s)) == ctx.zero());
    CHECK(eval_fp_coeffs(ctx, h, ctx.sqr(d.t)) == ctx.zero());
  }
}

TEST_CASE("genus-6 naive search: bottom at 19, hit at 23") {
  SearchConfig cfg;
  {
    FieldContext ctx{Prime(19)};
    CHECK(search_genus6_naive(ctx, cfg).status == SearchStatus::Exhausted);
  }
  {
    FieldContext ctx{Prime(23)};
    auto out = search_genus6_naive(ctx, cfg);
    REQUIRE(out.status == SearchStatus::Found);
    CHECK(verify(*out.certificate).ok());
  }
}

TEST_CASE("genus-6 j-pair search: bottom at 67, hit at 73") {
  SearchConfig cfg;
  {
    FieldContext ctx{Prime(67)};
    CHECK(search_genus6(ctx, cfg).status == SearchStatus::Exhausted);
  }
  {
    FieldContext ctx{Prime(73)};
    auto out = search_genus6(ctx, cfg);
    REQUIRE(out.status == SearchStatus::Found);
    CHECK(verify(*out.certificate).ok());
    const auto& d = std::get<Genus6Data>(out.certificate->data);
    auto g = g_polynomial(Prime(73));
    CHECK(eval_fp_coeffs(ctx, g, ctx.sqr(d.s3)) == ctx.zero());
    CHECK(eval_fp_coeffs(ctx, g, ctx.sqr(d.t3)) == ctx.zero());
    CHECK(eval_fp_coeffs(ctx, g, ctx.sqr(ctx.div(d.s3, d.t3))) == ctx.zero());
  }
}

TEST_CASE("genus-6 family is empty at p = 13") {
  // Both engines exhaust, and a direct scan over every parameter pair with
  // plain Hasse-Witt tests (no shared code path with the engines' criteria)
  // confirms there is nothing to find.
  FieldContext ctx{Prime(13)};
  SearchConfig cfg;
  CHECK(search_genus6_naive(ctx, cfg).status == SearchStatus::Exhausted);
  CHECK(search_genus6(ctx, cfg).status == SearchStatus::Exhausted);

  size_t hits = 0;
  for (uint64_t e1 = 2; e1 < 169; ++e1) {
    Fp2 a1 = ctx.dec(e1);
    if (!hasse_witt(ctx, model_case2(ctx, a1)).is_zero()) continue;
    for (uint64_t e2 = 2; e2 < 169; ++e2) {
      if (e2 == e1) continue;
      Fp2 a2 = ctx.dec(e2);
      if (!hasse_witt(ctx, model_case2(ctx, a2)).is_zero()) continue;
      Poly c3 = poly_mul(ctx, Poly({ctx.neg(a1), ctx.zero(), ctx.zero(), ctx.one()}),
                         Poly({ctx.neg(a2), ctx.zero(), ctx.zero(), ctx.one()}));
      if (hasse_witt(ctx, {c3, std::nullopt}).is_zero()) ++hits;
    }
  }
  CHECK(hits == 0);
}

TEST_CASE("strategy agreement at sample primes") {
  SearchConfig cfg;
  for (uint64_t p : {89ull, 113ull}) {
    FieldContext ctx{Prime(p)};
    auto naive = search_genus5_naive(ctx, cfg);
    auto jroute = search_genus5(ctx, cfg);
    CHECK(naive.status == jroute.status);
  }
  for (uint64_t p : {79ull, 83ull}) {
    FieldContext ctx{Prime(p)};
    auto naive = search_genus6_naive(ctx, cfg);
    auto jroute = search_genus6(ctx, cfg);
    CHECK(naive.status == jroute.status);
  }
}

TEST_CASE("pair searches refuse out-of-bound primes") {
  SearchConfig cfg;
  FieldContext ctx{Prime(23)};
  CHECK_THROWS_AS(search_genus5_pairs(ctx, cfg), std::invalid_argument);
  CHECK_THROWS_AS(search_genus6_pairs(ctx, cfg), std::invalid_argument);
}

TEST_CASE("genus-5 pair search finds a verified pair at p = 7") {
  FieldContext ctx{Prime(7)};
  SearchConfig cfg;
  auto out = search_genus5_pairs(ctx, cfg);
  REQUIRE(out.status == SearchStatus::Found);
  const auto& d = std::get<Genus5PairData>(out.certificate->data);
  // five marked points pairwise distinct and the quartic supersingular
  std::vector<Fp2> pts = {ctx.zero(), ctx.one(), d.lambda1, d.lambda2, d.lambda3};
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) CHECK(pts[i] != pts[j]);
  CHECK(verify(*out.certificate).ok());
}

TEST_CASE("exhaustive mode counts hits and returns the canonical first") {
  FieldContext ctx{Prime(37)};
  SearchConfig first;
  first.restricted_first = false;
  SearchConfig all = first;
  all.exhaustive = true;
  auto a = search_genus4(ctx, first);
  auto b = search_genus4(ctx, all);
  REQUIRE(a.status == SearchStatus::Found);
  REQUIRE(b.status == SearchStatus::Found);
  CHECK(serialize(*a.certificate) == serialize(*b.certificate));
  CHECK(b.stats.hits >= a.stats.hits);
  CHECK(b.stats.pairs_tested >= a.stats.pairs_tested);
}

}  // TEST_SUITE
