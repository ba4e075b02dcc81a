#include "sshowe/ssec.hpp"

#include <algorithm>

namespace sshowe {

std::vector<uint64_t> deuring_polynomial(const Prime& p) {
  uint64_t pp = p.value();
  uint64_t m = (pp - 1) / 2;
  // binom(m, i) mod p by the multiplicative recurrence; all of m, i stay
  // below p, so no Lucas reduction is needed.
  std::vector<uint64_t> coeffs(m + 1);
  uint64_t b = 1;
  for (uint64_t i = 0; i <= m; ++i) {
    coeffs[i] = b * b % pp;
    if (i < m) {
      // b <- b * (m - i) / (i + 1)
      uint64_t num = (m - i) % pp;
      uint64_t den = (i + 1) % pp;
      uint64_t den_inv = 1, base = den, e = pp - 2;
      while (e) {
        if (e & 1) den_inv = den_inv * base % pp;
        base = base * base % pp;
        e >>= 1;
      }
      b = b * num % pp * den_inv % pp;
    }
  }
  return coeffs;
}

Fp2 eval_fp_coeffs(const FieldContext& ctx, const std::vector<uint64_t>& coeffs, const Fp2& x) {
  Fp2 acc{};
  for (size_t i = coeffs.size(); i-- > 0;)
    acc = ctx.add(ctx.mul(acc, x), ctx.from_fp(coeffs[i]));
  return acc;
}

bool is_supersingular_legendre(const FieldContext& ctx, const std::vector<uint64_t>& deuring,
                               const Fp2& lambda) {
  if (lambda == ctx.zero() || lambda == ctx.one())
    throw std::invalid_argument("Legendre parameter must avoid {0, 1}");
  return eval_fp_coeffs(ctx, deuring, lambda) == ctx.zero();
}

Fp2 j_from_lambda(const FieldContext& ctx, const Fp2& lambda) {
  if (lambda == ctx.zero() || lambda == ctx.one())
    throw std::invalid_argument("Legendre parameter must avoid {0, 1}");
  Fp2 num = ctx.add(ctx.sub(ctx.sqr(lambda), lambda), ctx.one());
  num = ctx.mul_fp(ctx.mul(ctx.mul(num, num), num), 256 % ctx.p());
  Fp2 den = ctx.mul(ctx.sqr(lambda), ctx.sqr(ctx.sub(lambda, ctx.one())));
  return ctx.div(num, den);
}

Fp2 cross_ratio_lambda(const FieldContext& ctx, const ProjPoint& r1, const ProjPoint& r2,
                       const ProjPoint& r3, const ProjPoint& r4) {
  const ProjPoint pts[4] = {r1, r2, r3, r4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j]) throw std::invalid_argument("cross-ratio of coincident points");

  // lambda = ((r3-r1)(r2-r4)) / ((r3-r4)(r2-r1)); factors containing a point
  // at infinity are dropped in pairs.
  auto diff = [&](const ProjPoint& a, const ProjPoint& b) { return ctx.sub(a.v, b.v); };
  Fp2 num, den;
  if (r1.at_infinity) {
    num = diff(r2, r4);
    den = diff(r3, r4);
  } else if (r2.at_infinity) {
    num = diff(r3, r1);
    den = diff(r3, r4);
  } else if (r3.at_infinity) {
    num = diff(r2, r4);
    den = diff(r2, r1);
  } else if (r4.at_infinity) {
    num = diff(r3, r1);
    den = diff(r2, r1);
  } else {
    num = ctx.mul(diff(r3, r1), diff(r2, r4));
    den = ctx.mul(diff(r3, r4), diff(r2, r1));
  }
  return ctx.div(num, den);
}

bool is_supersingular_quartic(const FieldContext& ctx, const std::vector<uint64_t>& deuring,
                              const ProjPoint& r1, const ProjPoint& r2, const ProjPoint& r3,
                              const ProjPoint& r4) {
  Fp2 lambda = cross_ratio_lambda(ctx, r1, r2, r3, r4);
  return is_supersingular_legendre(ctx, deuring, lambda);
}

bool SupersingularTables::in_T(const Fp2& lambda) const {
  return std::binary_search(T.begin(), T.end(), lambda);
}

bool SupersingularTables::in_S(const Fp2& j) const {
  return std::binary_search(S.begin(), S.end(), j);
}

SupersingularTables build_tables(const FieldContext& ctx, uint64_t seed) {
  SupersingularTables t;
  t.p = ctx.p();
  t.deuring = deuring_polynomial(Prime(ctx.p()));
  Poly hp = Poly::from_fp_coeffs(t.deuring);
  t.T = roots_in_field(ctx, hp, RootField::Fp2, seed);
  for (const Fp2& lam : t.T) {
    Fp2 j = j_from_lambda(ctx, lam);
    t.S.push_back(j);
    if (ctx.is_fp(j)) t.T_restricted.push_back(lam);
  }
  std::sort(t.S.begin(), t.S.end());
  t.S.erase(std::unique(t.S.begin(), t.S.end()), t.S.end());
  return t;
}

bool is_supersingular_j(const FieldContext& ctx, const Fp2& j, const SupersingularTables& tables) {
  if (tables.p != ctx.p()) throw std::invalid_argument("tables built for a different prime");
  return tables.in_S(j);
}

bool is_supersingular_j_deuring(const FieldContext& ctx, const std::vector<uint64_t>& deuring,
                                const Fp2& j, uint64_t seed) {
  // Legendre parameters of j solve 256 (l^2-l+1)^3 = j l^2 (l-1)^2. For a
  // supersingular j the whole fiber lies in F_{p^2}; for an ordinary j no
  // fiber point can pass the Deuring test.
  Fp2 one = ctx.one();
  Poly q1({one, ctx.neg(one), one});  // l^2 - l + 1
  Poly lhs = poly_scalar_mul(ctx, poly_pow(ctx, q1, 3), ctx.from_fp(256 % ctx.p()));
  Poly l1({ctx.zero(), ctx.neg(one), one});  // l^2 - l
  Poly rhs = poly_scalar_mul(ctx, poly_mul(ctx, l1, l1), j);
  Poly eq = poly_sub(ctx, lhs, rhs);
  for (const Fp2& lam : roots_in_field(ctx, eq, RootField::Fp2, seed)) {
    if (lam == ctx.zero() || lam == ctx.one()) continue;
    if (is_supersingular_legendre(ctx, deuring, lam)) return true;
  }
  return false;
}

}  // namespace sshowe
