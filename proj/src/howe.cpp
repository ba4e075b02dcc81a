#include "sshowe/howe.hpp"

#include <algorithm>

#include "sshowe/genus2.hpp"

namespace sshowe {

namespace {

uint64_t mix_seed(uint64_t a, uint64_t b) {
  uint64_t x = a + 0x9e3779b97f4a7c15ull + (b << 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

bool bump_pairs(SearchOutcome& out, const SearchConfig& cfg) {
  ++out.stats.pairs_tested;
  if (cfg.work_limit && out.stats.pairs_tested > cfg.work_limit) {
    out.status = SearchStatus::Interrupted;
    return false;
  }
  return true;
}

Certificate base_cert(const FieldContext& ctx) {
  Certificate c;
  c.p = ctx.p();
  c.minpoly_a0 = ctx.minpoly_a0();
  c.minpoly_a1 = ctx.minpoly_a1();
  return c;
}

bool nonsingular_param(const FieldContext& ctx, const Fp2& x) {
  return x != ctx.zero() && x != ctx.one() && x != ctx.neg(ctx.one());
}

}  // namespace

bool genus4_conditions(const FieldContext& ctx, const Fp2& l1, const Fp2& l3) {
  Fp2 l1sq = ctx.sqr(l1);
  if (l1 == l3) return false;
  if (l1sq == l3) return false;
  if (ctx.add(ctx.sub(l1sq, ctx.add(l1, l1)), l3) == ctx.zero()) return false;
  Fp2 two_l1l3 = ctx.mul_fp(ctx.mul(l1, l3), 2);
  if (ctx.sub(two_l1l3, ctx.add(l1sq, l3)) == ctx.zero()) return false;
  return true;
}

std::pair<Fp2, Fp2> genus4_st_from_lambdas(const FieldContext& ctx, const Fp2& l1,
                                           const Fp2& l3) {
  if (l1 == ctx.zero() || l1 == ctx.one() || l3 == ctx.zero() || l3 == ctx.one())
    throw std::invalid_argument("lambda parameters must avoid {0, 1}");
  if (!genus4_conditions(ctx, l1, l3))
    throw std::invalid_argument("lambda pair violates the compatibility conditions");
  Fp2 l1sq = ctx.sqr(l1);
  Fp2 d = ctx.add(ctx.sub(l1sq, ctx.add(l1, l1)), l3);
  Fp2 dinv = ctx.inv(d);
  Fp2 s = ctx.mul(ctx.sub(l1sq, l3), dinv);
  Fp2 t = ctx.mul(ctx.sub(ctx.mul_fp(ctx.mul(l1, l3), 2), ctx.add(l1sq, l3)), dinv);
  return {s, t};
}

Genus4Lambdas genus4_lambdas(const FieldContext& ctx, const Fp2& s, const Fp2& t) {
  if (!nonsingular_param(ctx, s) || !nonsingular_param(ctx, t) || ctx.sqr(s) == ctx.sqr(t))
    throw std::invalid_argument("need s, t outside {0, +-1} with s^2 != t^2");
  Fp2 one = ctx.one();
  Fp2 ssq = ctx.sqr(s), tsq = ctx.sqr(t);
  Genus4Lambdas out;
  out.lambda1 = ctx.div(ctx.sub(t, s), ctx.sub(one, s));
  Fp2 num = ctx.sub(tsq, ssq);
  Fp2 den = ctx.inv(ctx.sub(one, ssq));
  out.lambda3 = ctx.mul(num, den);
  out.lambda4 = ctx.mul(out.lambda3, ctx.inv(tsq));
  return out;
}

std::vector<Fp2> solve_case3_j_equation(const FieldContext& ctx, const Fp2& j, uint64_t seed) {
  Fp2 one = ctx.one();
  Poly t1({ctx.neg(one), ctx.from_fp(3)});  // 3s - 1
  Poly t2({ctx.from_int(-3), one});         // s - 3
  Poly lhs = poly_pow(ctx, poly_mul(ctx, t1, t2), 3);
  lhs = poly_scalar_mul(ctx, lhs, ctx.from_fp(64 % ctx.p()));
  Poly sm1({ctx.neg(one), one});
  Poly sp1({one, one});
  Poly rhs = poly_mul(ctx, poly_pow(ctx, sm1, 2), poly_pow(ctx, sp1, 4));
  rhs = poly_scalar_mul(ctx, rhs, j);
  Poly eq = poly_sub(ctx, lhs, rhs);
  std::vector<Fp2> out;
  for (const Fp2& s : roots_in_field(ctx, eq, RootField::Fp2, seed))
    if (nonsingular_param(ctx, s)) out.push_back(s);
  return out;
}

std::vector<Fp2> solve_case2_j_equation(const FieldContext& ctx, const Fp2& j, uint64_t seed) {
  Fp2 one = ctx.one();
  Poly u({ctx.zero(), one});
  Poly t1({ctx.neg(one), ctx.from_fp(2)});  // 2u - 1
  Poly t2({ctx.from_int(-2), one});         // u - 2
  Poly lhs = poly_mul(ctx, u, poly_pow(ctx, poly_mul(ctx, t1, t2), 3));
  lhs = poly_scalar_mul(ctx, lhs, ctx.from_fp(6912 % ctx.p()));
  Poly um1({ctx.neg(one), one});
  Poly up1({one, one});
  Poly rhs = poly_mul(ctx, poly_pow(ctx, um1, 2), poly_pow(ctx, up1, 6));
  rhs = poly_scalar_mul(ctx, rhs, j);
  Poly eq = poly_sub(ctx, lhs, rhs);
  std::vector<Fp2> out;
  for (const Fp2& r : roots_in_field(ctx, eq, RootField::Fp2, seed))
    if (nonsingular_param(ctx, r)) out.push_back(r);
  return out;
}

Fp2 genus6_e3_j(const FieldContext& ctx, const Fp2& u, const Fp2& v) {
  if (u == v || u == ctx.neg(v) || u == ctx.zero() || v == ctx.zero())
    throw std::invalid_argument("genus6_e3_j needs u != +-v and uv != 0");
  auto cube = [&](const Fp2& x) { return ctx.mul(ctx.sqr(x), x); };
  Fp2 two_u_m_v = ctx.sub(ctx.mul_fp(u, 2), v);
  Fp2 u_m_2v = ctx.sub(u, ctx.mul_fp(v, 2));
  Fp2 num = ctx.mul(ctx.mul(u, v), ctx.mul(cube(two_u_m_v), cube(u_m_2v)));
  num = ctx.mul_fp(num, 6912 % ctx.p());
  Fp2 d1 = ctx.sqr(ctx.sub(u, v));
  Fp2 upv = ctx.add(u, v);
  Fp2 d2 = ctx.mul(ctx.sqr(ctx.sqr(upv)), ctx.sqr(upv));
  return ctx.div(num, ctx.mul(d1, d2));
}

SearchOutcome search_genus4_cor(const FieldContext& ctx) {
  if (ctx.p() % 6 != 5) throw std::invalid_argument("closed form needs p = 5 (mod 6)");
  SearchOutcome out;
  out.stats.strategy = "cor";
  out.stats.passes = 1;
  // omega = (-1 + sqrt(-3)) / 2, a primitive cube root of unity; -3 is a
  // non-square mod p since p = 2 (mod 3).
  Fp2 r = *ctx.sqrt(ctx.from_int(-3));
  Fp2 omega = ctx.mul(ctx.sub(r, ctx.one()), ctx.inv(ctx.from_fp(2)));
  Fp2 omega2 = ctx.sqr(omega);
  Fp2 s = std::min(omega, omega2);
  Fp2 t = ctx.sqr(s);
  Certificate cert = base_cert(ctx);
  Genus4Data d;
  d.s = s;
  d.t = t;
  auto lams = genus4_lambdas(ctx, s, t);
  d.lambda1 = lams.lambda1;
  d.lambda3 = lams.lambda3;
  d.lambda4 = lams.lambda4;
  cert.data = d;
  out.certificate = cert;
  out.status = SearchStatus::Found;
  out.stats.hits = 1;
  return out;
}

SearchOutcome search_genus4(const FieldContext& ctx, const SearchConfig& cfg) {
  SearchOutcome out;
  out.stats.strategy = "naive";
  SupersingularTables tables = build_tables(ctx, mix_seed(cfg.seed, ctx.p()));

  std::vector<const std::vector<Fp2>*> passes;
  if (!cfg.exhaustive && cfg.restricted_first && !tables.T_restricted.empty() &&
      tables.T_restricted.size() < tables.T.size())
    passes.push_back(&tables.T_restricted);
  passes.push_back(&tables.T);

  for (const auto* span : passes) {
    ++out.stats.passes;
    for (const Fp2& l1 : *span) {
      for (const Fp2& l3 : *span) {
        if (!bump_pairs(out, cfg)) return out;
        if (!genus4_conditions(ctx, l1, l3)) continue;
        auto [s, t] = genus4_st_from_lambdas(ctx, l1, l3);
        Fp2 l4 = ctx.mul(l3, ctx.inv(ctx.sqr(t)));
        ++out.stats.supersingular_checks;
        if (!tables.in_T(l4)) continue;
        ++out.stats.hits;
        if (!out.certificate) {
          Certificate cert = base_cert(ctx);
          cert.data = Genus4Data{s, t, l1, l3, l4};
          out.certificate = cert;
        }
        if (!cfg.exhaustive) {
          out.status = SearchStatus::Found;
          return out;
        }
      }
    }
    if (out.certificate) break;
  }
  out.status = out.certificate ? SearchStatus::Found : SearchStatus::Exhausted;
  return out;
}

namespace {

// Shared scan body for the two genus-5 engines: candidate (s, t) pairs come
// from the caller; the hit condition is supersingularity of
// y^2 = (x^2-s^2)(x^2-t^2), decided by the Deuring polynomial on the
// cross-ratio of (s, -s, t, -t).
bool genus5_e3_test(const FieldContext& ctx, const std::vector<uint64_t>& deuring, const Fp2& s,
                    const Fp2& t, Fp2* e3_lambda) {
  *e3_lambda = cross_ratio_lambda(ctx, ProjPoint::finite(s), ProjPoint::finite(ctx.neg(s)),
                                  ProjPoint::finite(t), ProjPoint::finite(ctx.neg(t)));
  return eval_fp_coeffs(ctx, deuring, *e3_lambda) == ctx.zero();
}

}  // namespace

SearchOutcome search_genus5_naive(const FieldContext& ctx, const SearchConfig& cfg) {
  SearchOutcome out;
  out.stats.strategy = "naive";
  out.stats.passes = 1;
  auto deuring = deuring_polynomial(Prime(ctx.p()));
  Poly h = Poly::from_fp_coeffs(h_polynomial(Prime(ctx.p())));
  std::vector<Fp2> roots;
  for (const Fp2& b : roots_in_field(ctx, h, RootField::Fp2, mix_seed(cfg.seed, ctx.p())))
    if (b != ctx.zero() && b != ctx.one()) roots.push_back(b);

  for (const Fp2& b1 : roots) {
    for (const Fp2& b2 : roots) {
      if (b1 == b2) continue;
      if (!bump_pairs(out, cfg)) return out;
      auto s = ctx.sqrt(b1);
      auto t = ctx.sqrt(b2);
      if (!s || !t) continue;  // unreachable for genuine h-roots
      ++out.stats.supersingular_checks;
      Fp2 e3_lambda;
      if (!genus5_e3_test(ctx, deuring, *s, *t, &e3_lambda)) continue;
      ++out.stats.hits;
      if (!out.certificate) {
        Certificate cert = base_cert(ctx);
        cert.data = Genus5Data{*s, *t, case3_j(ctx, *s), case3_j(ctx, *t), e3_lambda};
        out.certificate = cert;
      }
      if (!cfg.exhaustive) {
        out.status = SearchStatus::Found;
        return out;
      }
    }
  }
  out.status = out.certificate ? SearchStatus::Found : SearchStatus::Exhausted;
  return out;
}

SearchOutcome search_genus5(const FieldContext& ctx, const SearchConfig& cfg) {
  SearchOutcome out;
  out.stats.strategy = "jpairs";
  out.stats.passes = 1;
  SupersingularTables tables = build_tables(ctx, mix_seed(cfg.seed, ctx.p()));

  std::vector<std::vector<Fp2>> s_roots(tables.S.size());
  for (size_t i = 0; i < tables.S.size(); ++i)
    s_roots[i] = solve_case3_j_equation(ctx, tables.S[i], mix_seed(cfg.seed, ctx.enc(tables.S[i])));

  for (size_t i1 = 0; i1 < tables.S.size(); ++i1) {
    for (size_t i2 = 0; i2 < tables.S.size(); ++i2) {
      if (!bump_pairs(out, cfg)) return out;
      for (const Fp2& s : s_roots[i1]) {
        for (const Fp2& t : s_roots[i2]) {
          if (ctx.sqr(s) == ctx.sqr(t)) continue;
          ++out.stats.supersingular_checks;
          Fp2 e3_lambda;
          if (!genus5_e3_test(ctx, tables.deuring, s, t, &e3_lambda)) continue;
          ++out.stats.hits;
          if (!out.certificate) {
            Certificate cert = base_cert(ctx);
            cert.data = Genus5Data{s, t, tables.S[i1], tables.S[i2], e3_lambda};
            out.certificate = cert;
          }
          if (!cfg.exhaustive) {
            out.status = SearchStatus::Found;
            return out;
          }
        }
      }
    }
  }
  out.status = out.certificate ? SearchStatus::Found : SearchStatus::Exhausted;
  return out;
}

SearchOutcome search_genus6_naive(const FieldContext& ctx, const SearchConfig& cfg) {
  SearchOutcome out;
  out.stats.strategy = "naive";
  out.stats.passes = 1;
  Poly g = Poly::from_fp_coeffs(g_polynomial(Prime(ctx.p())));
  std::vector<Fp2> roots;
  for (const Fp2& a : roots_in_field(ctx, g, RootField::Fp2, mix_seed(cfg.seed, ctx.p())))
    if (a != ctx.zero() && a != ctx.one()) roots.push_back(a);

  for (const Fp2& a1 : roots) {
    for (const Fp2& a2 : roots) {
      if (a1 == a2) continue;
      if (!bump_pairs(out, cfg)) return out;
      ++out.stats.supersingular_checks;
      Fp2 q = ctx.div(a1, a2);
      if (!std::binary_search(roots.begin(), roots.end(), q)) continue;
      // a1 = s^6 and a2 = t^6 for a superspecial member, so the cubes
      // s^3 = sqrt(a1), t^3 = sqrt(a2) exist in F_{p^2}.
      auto s3 = ctx.sqrt(a1);
      auto t3 = ctx.sqrt(a2);
      if (!s3 || !t3) continue;
      ++out.stats.hits;
      if (!out.certificate) {
        Certificate cert = base_cert(ctx);
        cert.data = Genus6Data{*s3, *t3, case2_j(ctx, *s3), case2_j(ctx, *t3),
                               genus6_e3_j(ctx, *s3, *t3)};
        out.certificate = cert;
      }
      if (!cfg.exhaustive) {
        out.status = SearchStatus::Found;
        return out;
      }
    }
  }
  out.status = out.certificate ? SearchStatus::Found : SearchStatus::Exhausted;
  return out;
}

SearchOutcome search_genus6(const FieldContext& ctx, const SearchConfig& cfg) {
  SearchOutcome out;
  out.stats.strategy = "jpairs";
  out.stats.passes = 1;
  SupersingularTables tables = build_tables(ctx, mix_seed(cfg.seed, ctx.p()));

  std::vector<std::vector<Fp2>> u_roots(tables.S.size());
  for (size_t i = 0; i < tables.S.size(); ++i)
    u_roots[i] = solve_case2_j_equation(ctx, tables.S[i], mix_seed(cfg.seed, ctx.enc(tables.S[i])));

  for (size_t i1 = 0; i1 < tables.S.size(); ++i1) {
    for (size_t i2 = 0; i2 < tables.S.size(); ++i2) {
      if (!bump_pairs(out, cfg)) return out;
      for (const Fp2& u : u_roots[i1]) {
        for (const Fp2& v : u_roots[i2]) {
          if (ctx.sqr(u) == ctx.sqr(v)) continue;
          ++out.stats.supersingular_checks;
          Fp2 j3 = genus6_e3_j(ctx, u, v);
          if (!tables.in_S(j3)) continue;
          ++out.stats.hits;
          if (!out.certificate) {
            Certificate cert = base_cert(ctx);
            cert.data = Genus6Data{u, v, tables.S[i1], tables.S[i2], j3};
            out.certificate = cert;
          }
          if (!cfg.exhaustive) {
            out.status = SearchStatus::Found;
            return out;
          }
        }
      }
    }
  }
  out.status = out.certificate ? SearchStatus::Found : SearchStatus::Exhausted;
  return out;
}

namespace {

// All superspecial Rosenhain triples (l1 < l2 < l3 by canonical encoding),
// found by exhaustive Hasse-Witt testing over F_{p^2}.
std::vector<std::array<Fp2, 3>> enumerate_ss_rosenhain(const FieldContext& ctx,
                                                       SearchStats* stats) {
  uint64_t n = ctx.p() * ctx.p();
  Fp2 one = ctx.one();
  Poly base({ctx.zero(), ctx.neg(one), one});  // x(x-1)
  std::vector<std::array<Fp2, 3>> out;
  for (uint64_t e1 = 2; e1 < n; ++e1) {
    Fp2 l1 = ctx.dec(e1);
    Poly p1 = poly_mul(ctx, base, Poly({ctx.neg(l1), one}));
    for (uint64_t e2 = e1 + 1; e2 < n; ++e2) {
      Fp2 l2 = ctx.dec(e2);
      Poly p2 = poly_mul(ctx, p1, Poly({ctx.neg(l2), one}));
      for (uint64_t e3 = e2 + 1; e3 < n; ++e3) {
        Fp2 l3 = ctx.dec(e3);
        Poly f = poly_mul(ctx, p2, Poly({ctx.neg(l3), one}));
        ++stats->supersingular_checks;
        if (hasse_witt(ctx, {f, std::nullopt}).is_zero()) out.push_back({l1, l2, l3});
      }
    }
  }
  return out;
}

int shared_count(const std::array<Fp2, 3>& a, const std::array<Fp2, 3>& b, Fp2* shared) {
  int count = 0;
  for (const Fp2& x : a)
    for (const Fp2& y : b)
      if (x == y) {
        *shared = x;
        ++count;
      }
  return count;
}

}  // namespace

SearchOutcome search_genus5_pairs(const FieldContext& ctx, const SearchConfig& cfg) {
  if (ctx.p() > cfg.pair_search_max_p_genus5)
    throw std::invalid_argument("exhaustive pair search is bounded to p <= " +
                                std::to_string(cfg.pair_search_max_p_genus5));
  SearchOutcome out;
  out.stats.strategy = "pairs";
  out.stats.passes = 1;
  auto deuring = deuring_polynomial(Prime(ctx.p()));
  auto triples = enumerate_ss_rosenhain(ctx, &out.stats);

  for (size_t i = 0; i < triples.size(); ++i) {
    for (size_t j = i + 1; j < triples.size(); ++j) {
      Fp2 shared;
      if (shared_count(triples[i], triples[j], &shared) != 1) continue;
      if (!bump_pairs(out, cfg)) return out;
      std::vector<Fp2> rest1, rest2;
      for (const Fp2& x : triples[i])
        if (x != shared) rest1.push_back(x);
      for (const Fp2& x : triples[j])
        if (x != shared) rest2.push_back(x);
      ++out.stats.supersingular_checks;
      Fp2 e3_lambda =
          cross_ratio_lambda(ctx, ProjPoint::finite(rest1[0]), ProjPoint::finite(rest1[1]),
                             ProjPoint::finite(rest2[0]), ProjPoint::finite(rest2[1]));
      if (eval_fp_coeffs(ctx, deuring, e3_lambda) != ctx.zero()) continue;
      ++out.stats.hits;
      if (!out.certificate) {
        Certificate cert = base_cert(ctx);
        cert.data = Genus5PairData{shared, rest1[0], rest1[1], rest2[0], rest2[1], e3_lambda};
        out.certificate = cert;
      }
      if (!cfg.exhaustive) {
        out.status = SearchStatus::Found;
        return out;
      }
    }
  }
  out.status = out.certificate ? SearchStatus::Found : SearchStatus::Exhausted;
  return out;
}

SearchOutcome search_genus6_pairs(const FieldContext& ctx, const SearchConfig& cfg) {
  if (ctx.p() > cfg.pair_search_max_p_genus6)
    throw std::invalid_argument("exhaustive pair search is bounded to p <= " +
                                std::to_string(cfg.pair_search_max_p_genus6));
  SearchOutcome out;
  out.stats.strategy = "pairs";
  out.stats.passes = 1;
  auto triples = enumerate_ss_rosenhain(ctx, &out.stats);

  for (size_t i = 0; i < triples.size(); ++i) {
    for (size_t j = i + 1; j < triples.size(); ++j) {
      Fp2 shared;
      if (shared_count(triples[i], triples[j], &shared) != 0) continue;
      if (!bump_pairs(out, cfg)) return out;
      std::vector<Fp2> roots(triples[i].begin(), triples[i].end());
      roots.insert(roots.end(), triples[j].begin(), triples[j].end());
      ++out.stats.supersingular_checks;
      if (!hasse_witt(ctx, {Poly::from_roots(ctx, roots), roots}).is_zero()) continue;
      ++out.stats.hits;
      if (!out.certificate) {
        Certificate cert = base_cert(ctx);
        cert.data = Genus6PairData{triples[i], triples[j]};
        out.certificate = cert;
      }
      if (!cfg.exhaustive) {
        out.status = SearchStatus::Found;
        return out;
      }
    }
  }
  out.status = out.certificate ? SearchStatus::Found : SearchStatus::Exhausted;
  return out;
}

}  // namespace sshowe
