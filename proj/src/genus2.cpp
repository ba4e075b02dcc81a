#include "sshowe/genus2.hpp"

#include <algorithm>

namespace sshowe {

namespace {

// binom(m, k) mod p for 0 <= k <= m < p, one full row.
std::vector<uint64_t> binom_row(uint64_t p, uint64_t m) {
  std::vector<uint64_t> row(m + 1);
  row[0] = 1;
  uint64_t b = 1;
  for (uint64_t k = 1; k <= m; ++k) {
    uint64_t den = k % p;
    uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    b = b * ((m - k + 1) % p) % p * inv % p;
    row[k] = b;
  }
  return row;
}

Fp2 cube(const FieldContext& ctx, const Fp2& x) { return ctx.mul(ctx.sqr(x), x); }

enum class Parity { Even, OddTimesEven, Mixed };

Parity parity_structure(const Poly& f) {
  bool even_ok = true, odd_ok = true;
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == Fp2{}) continue;
    if (i % 2 == 1) even_ok = false;
    if (i % 2 == 0) odd_ok = false;
  }
  if (even_ok) return Parity::Even;
  if (odd_ok) return Parity::OddTimesEven;
  return Parity::Mixed;
}

// Compress f(x) = F(x^2) or f(x) = x * F(x^2) to F(u).
Poly compress_even(const FieldContext&, const Poly& f, int shift) {
  std::vector<Fp2> c((f.degree() - shift) / 2 + 1);
  for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(2 * i + shift);
  return Poly(std::move(c));
}

}  // namespace

HyperellipticModel model_from_roots(const FieldContext& ctx, const std::vector<Fp2>& roots) {
  return {Poly::from_roots(ctx, roots), roots};
}

HyperellipticModel model_case3(const FieldContext& ctx, const Fp2& b) {
  // x(x^2-1)(x^2-b) = x^5 - (1+b)x^3 + b x
  Fp2 one = ctx.one();
  return {Poly({ctx.zero(), b, ctx.zero(), ctx.neg(ctx.add(one, b)), ctx.zero(), one}),
          std::nullopt};
}

HyperellipticModel model_case2(const FieldContext& ctx, const Fp2& a) {
  // (x^3-1)(x^3-a) = x^6 - (1+a)x^3 + a
  Fp2 one = ctx.one();
  std::vector<Fp2> c(7);
  c[0] = a;
  c[3] = ctx.neg(ctx.add(one, a));
  c[6] = one;
  return {Poly(std::move(c)), std::nullopt};
}

HyperellipticModel model_case1(const FieldContext& ctx, const Fp2& A, const Fp2& B) {
  // (x^2-1)(x^2-A)(x^2-B)
  Fp2 one = ctx.one();
  Fp2 s1 = ctx.add(one, ctx.add(A, B));
  Fp2 s2 = ctx.add(ctx.add(A, B), ctx.mul(A, B));
  Fp2 s3 = ctx.mul(A, B);
  std::vector<Fp2> c(7);
  c[0] = ctx.neg(s3);
  c[2] = s2;
  c[4] = ctx.neg(s1);
  c[6] = one;
  return {Poly(std::move(c)), std::nullopt};
}

HasseWittMatrix hasse_witt(const FieldContext& ctx, const HyperellipticModel& model) {
  const Poly& f = model.f;
  if (f.degree() != 5 && f.degree() != 6)
    throw std::invalid_argument("hasse_witt needs deg f in {5, 6}");
  if (!is_squarefree(ctx, f)) throw std::invalid_argument("hasse_witt needs squarefree f");

  uint64_t p = ctx.p();
  uint64_t m = (p - 1) / 2;
  const uint64_t want[2][2] = {{p - 1, p - 2}, {2 * p - 1, 2 * p - 2}};
  HasseWittMatrix hw;

  Parity par = parity_structure(f);
  if (par == Parity::Mixed) {
    Poly fm = poly_pow_trunc(ctx, f, m, static_cast<int>(2 * p - 1));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) hw.m[i][j] = fm.coeff(want[i][j]);
    return hw;
  }

  // f = x^shift * F(x^2), so f^m = x^(shift*m) * F^m(x^2) and only every
  // other coefficient is populated.
  int shift = par == Parity::Even ? 0 : 1;
  uint64_t base = static_cast<uint64_t>(shift) * m;
  int max_u = static_cast<int>((2 * p - 2 - base) / 2);
  Poly F = compress_even(ctx, f, shift);
  Poly Fm = poly_pow_trunc(ctx, F, m, max_u);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      uint64_t k = want[i][j];
      if (k >= base && (k - base) % 2 == 0) hw.m[i][j] = Fm.coeff((k - base) / 2);
    }
  return hw;
}

bool is_superspecial_g2(const FieldContext& ctx, const HyperellipticModel& model) {
  return hasse_witt(ctx, model).is_zero();
}

std::vector<uint64_t> h_polynomial(const Prime& p) {
  uint64_t pp = p.value();
  uint64_t m = (pp - 1) / 2;
  auto row = binom_row(pp, m);
  uint64_t off = (pp + 1) / 4;
  uint64_t deg = pp / 4;
  std::vector<uint64_t> coeffs(deg + 1);
  for (uint64_t i = 0; i <= deg; ++i) coeffs[i] = row[off + i] * row[i] % pp;
  return coeffs;
}

std::vector<uint64_t> g_polynomial(const Prime& p) {
  uint64_t pp = p.value();
  uint64_t m = (pp - 1) / 2;
  auto row = binom_row(pp, m);
  uint64_t off = (pp + 1) / 6;
  uint64_t deg = pp / 3;
  std::vector<uint64_t> coeffs(deg + 1);
  for (uint64_t i = 0; i <= deg; ++i) coeffs[i] = row[off + i] * row[i] % pp;
  return coeffs;
}

std::pair<Fp2, Fp2> case1_split(const FieldContext& ctx, const Fp2& A, const Fp2& B) {
  Fp2 one = ctx.one();
  if (A == ctx.zero() || A == one || B == ctx.zero() || B == one || A == B)
    throw std::invalid_argument("case1_split needs A, B outside {0,1} and A != B");
  Fp2 diff = ctx.sub(B, A);
  Fp2 inv1A = ctx.inv(ctx.sub(one, A));
  Fp2 l_sigma = ctx.mul(diff, inv1A);
  Fp2 l_tau = ctx.mul(l_sigma, ctx.inv(B));
  return {l_sigma, l_tau};
}

Fp2 case3_j(const FieldContext& ctx, const Fp2& s) {
  Fp2 one = ctx.one();
  if (s == ctx.zero() || s == one || s == ctx.neg(one))
    throw std::invalid_argument("case3_j needs s outside {0, 1, -1}");
  Fp2 t1 = ctx.sub(ctx.mul_fp(s, 3 % ctx.p()), one);          // 3s - 1
  Fp2 t2 = ctx.sub(s, ctx.from_fp(3));                        // s - 3
  Fp2 num = ctx.mul(cube(ctx, t1), cube(ctx, t2));
  num = ctx.mul_fp(num, 64 % ctx.p());
  Fp2 d1 = ctx.sqr(ctx.sub(s, one));
  Fp2 d2 = ctx.sqr(ctx.sqr(ctx.add(s, one)));
  return ctx.div(num, ctx.mul(d1, d2));
}

Fp2 case2_j(const FieldContext& ctx, const Fp2& u) {
  Fp2 one = ctx.one();
  if (u == ctx.zero() || u == one || u == ctx.neg(one))
    throw std::invalid_argument("case2_j needs u outside {0, 1, -1}");
  Fp2 t1 = ctx.sub(ctx.mul_fp(u, 2 % ctx.p()), one);  // 2u - 1
  Fp2 t2 = ctx.sub(u, ctx.from_fp(2));                // u - 2
  Fp2 num = ctx.mul(u, ctx.mul(cube(ctx, t1), cube(ctx, t2)));
  num = ctx.mul_fp(num, 6912 % ctx.p());
  Fp2 d1 = ctx.sqr(ctx.sub(u, one));
  Fp2 up1 = ctx.add(u, one);
  Fp2 d2 = ctx.mul(ctx.sqr(ctx.sqr(up1)), ctx.sqr(up1));
  return ctx.div(num, ctx.mul(d1, d2));
}

}  // namespace sshowe
