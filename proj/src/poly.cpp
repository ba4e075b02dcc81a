#include "sshowe/poly.hpp"

#include <algorithm>
#include <random>

namespace sshowe {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

// ---- prime-field fast path on raw coefficient vectors (ascending) ----

void rnormalize(std::vector<uint64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<uint64_t> rmul(uint64_t p, const std::vector<uint64_t>& a,
                           const std::vector<uint64_t>& b, int max_deg = -1) {
  if (a.empty() || b.empty()) return {};
  size_t n = a.size() + b.size() - 1;
  if (max_deg >= 0) n = std::min(n, static_cast<size_t>(max_deg) + 1);
  std::vector<uint64_t> c(n);
  for (size_t k = 0; k < n; ++k) {
    u128 acc = 0;
    size_t lo = k >= b.size() - 1 ? k - (b.size() - 1) : 0;
    size_t hi = std::min(k, a.size() - 1);
    for (size_t i = lo; i <= hi; ++i) acc += static_cast<u128>(a[i]) * b[k - i];
    c[k] = static_cast<uint64_t>(acc % p);
  }
  rnormalize(c);
  return c;
}

// Division with lazy 128-bit accumulation of the remainder updates;
// the divisor must be monic.
void rdivmod_monic(uint64_t p, const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                   std::vector<uint64_t>* quot, std::vector<uint64_t>* rem) {
  size_t db = b.size() - 1;
  if (a.size() <= db) {
    if (quot) quot->clear();
    if (rem) *rem = a;
    return;
  }
  std::vector<i128> acc(a.begin(), a.end());
  std::vector<uint64_t> q(a.size() - db);
  int64_t sp = static_cast<int64_t>(p);
  for (size_t k = a.size(); k-- > db;) {
    i128 v = acc[k] % sp;
    if (v < 0) v += sp;
    uint64_t qk = static_cast<uint64_t>(v);
    q[k - db] = qk;
    if (qk == 0) continue;
    for (size_t i = 0; i < db; ++i) acc[k - db + i] -= static_cast<i128>(qk) * b[i];
    // acc[k - db + i] stays within +-(db * p^2 + p), well inside 128 bits
  }
  if (quot) {
    *quot = std::move(q);
    rnormalize(*quot);
  }
  if (rem) {
    rem->resize(db);
    for (size_t i = 0; i < db; ++i) {
      i128 v = acc[i] % sp;
      if (v < 0) v += sp;
      (*rem)[i] = static_cast<uint64_t>(v);
    }
    rnormalize(*rem);
  }
}

std::vector<Fp2> lift(const std::vector<uint64_t>& a) {
  std::vector<Fp2> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = {a[i], 0};
  return c;
}

std::vector<uint64_t> drop(const std::vector<Fp2>& a) {
  std::vector<uint64_t> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i].c0;
  return c;
}

}  // namespace

void Poly::normalize() {
  while (!c_.empty() && c_.back() == Fp2{}) c_.pop_back();
}

bool Poly::is_fp() const {
  return std::all_of(c_.begin(), c_.end(), [](const Fp2& x) { return x.c1 == 0; });
}

Poly Poly::from_fp_coeffs(const std::vector<uint64_t>& coeffs) { return Poly(lift(coeffs)); }

Poly Poly::from_roots(const FieldContext& ctx, const std::vector<Fp2>& roots) {
  Poly f({ctx.one()});
  for (const Fp2& r : roots) f = poly_mul(ctx, f, Poly({ctx.neg(r), ctx.one()}));
  return f;
}

Poly poly_add(const FieldContext& ctx, const Poly& f, const Poly& g) {
  std::vector<Fp2> c(std::max(f.coeffs().size(), g.coeffs().size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = ctx.add(f.coeff(i), g.coeff(i));
  return Poly(std::move(c));
}

Poly poly_sub(const FieldContext& ctx, const Poly& f, const Poly& g) {
  std::vector<Fp2> c(std::max(f.coeffs().size(), g.coeffs().size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = ctx.sub(f.coeff(i), g.coeff(i));
  return Poly(std::move(c));
}

Poly poly_mul_trunc(const FieldContext& ctx, const Poly& f, const Poly& g, int max_deg) {
  if (f.is_zero() || g.is_zero()) return Poly();
  uint64_t p = ctx.p();
  if (f.is_fp() && g.is_fp())
    return Poly(lift(rmul(p, drop(f.coeffs()), drop(g.coeffs()), max_deg)));

  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  size_t n = a.size() + b.size() - 1;
  if (max_deg >= 0) n = std::min(n, static_cast<size_t>(max_deg) + 1);
  std::vector<Fp2> c(n);
  uint64_t a0 = ctx.minpoly_a0(), a1 = ctx.minpoly_a1();
  for (size_t k = 0; k < n; ++k) {
    // Accumulate the three bilinear sums of the quadratic-extension product,
    // reducing once per output coefficient.
    u128 s00 = 0, s11 = 0, scross = 0;
    size_t lo = k >= b.size() - 1 ? k - (b.size() - 1) : 0;
    size_t hi = std::min(k, a.size() - 1);
    for (size_t i = lo; i <= hi; ++i) {
      const Fp2& x = a[i];
      const Fp2& y = b[k - i];
      s00 += static_cast<u128>(x.c0) * y.c0;
      s11 += static_cast<u128>(x.c1) * y.c1;
      scross += static_cast<u128>(x.c0) * y.c1 + static_cast<u128>(x.c1) * y.c0;
    }
    uint64_t t = static_cast<uint64_t>(s11 % p);
    uint64_t u = static_cast<uint64_t>(s00 % p);
    uint64_t cr = static_cast<uint64_t>(scross % p);
    c[k] = {ctx.fp_sub(u, a0 * t % p), ctx.fp_sub(cr, a1 * t % p)};
  }
  return Poly(std::move(c));
}

Poly poly_mul(const FieldContext& ctx, const Poly& f, const Poly& g) {
  return poly_mul_trunc(ctx, f, g, -1);
}

Poly poly_scalar_mul(const FieldContext& ctx, const Poly& f, const Fp2& a) {
  std::vector<Fp2> c(f.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = ctx.mul(f.coeffs()[i], a);
  return Poly(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const FieldContext& ctx, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.degree() < g.degree()) return {Poly(), f};

  Fp2 linv = ctx.inv(g.lead());
  bool monic = g.lead() == ctx.one();

  if (f.is_fp() && g.is_fp() && monic) {
    std::vector<uint64_t> q, r;
    rdivmod_monic(ctx.p(), drop(f.coeffs()), drop(g.coeffs()), &q, &r);
    return {Poly(lift(q)), Poly(lift(r))};
  }

  std::vector<Fp2> rem = f.coeffs();
  std::vector<Fp2> quot(f.degree() - g.degree() + 1);
  int dg = g.degree();
  for (int k = f.degree(); k >= dg; --k) {
    Fp2 c = rem[k];
    if (c == Fp2{}) continue;
    Fp2 qk = monic ? c : ctx.mul(c, linv);
    quot[k - dg] = qk;
    for (int i = 0; i <= dg; ++i)
      rem[k - dg + i] = ctx.sub(rem[k - dg + i], ctx.mul(qk, g.coeffs()[i]));
  }
  rem.resize(dg);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_mod(const FieldContext& ctx, const Poly& f, const Poly& g) {
  return poly_divmod(ctx, f, g).second;
}

Poly poly_make_monic(const FieldContext& ctx, const Poly& f) {
  if (f.is_zero() || f.lead() == ctx.one()) return f;
  return poly_scalar_mul(ctx, f, ctx.inv(f.lead()));
}

Poly poly_gcd(const FieldContext& ctx, Poly f, Poly g) {
  while (!g.is_zero()) {
    Poly r = poly_mod(ctx, f, poly_make_monic(ctx, g));
    f = std::move(g);
    g = std::move(r);
  }
  return poly_make_monic(ctx, f);
}

Poly poly_derivative(const FieldContext& ctx, const Poly& f) {
  if (f.degree() <= 0) return Poly();
  std::vector<Fp2> c(f.degree());
  for (int i = 1; i <= f.degree(); ++i)
    c[i - 1] = ctx.mul_fp(f.coeffs()[i], static_cast<uint64_t>(i) % ctx.p());
  return Poly(std::move(c));
}

Fp2 poly_eval(const FieldContext& ctx, const Poly& f, const Fp2& x) {
  Fp2 acc{};
  for (size_t i = f.coeffs().size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), f.coeffs()[i]);
  return acc;
}

Poly poly_pow(const FieldContext& ctx, const Poly& f, uint64_t e) {
  Poly r({ctx.one()});
  for (uint64_t i = 0; i < e; ++i) r = poly_mul(ctx, r, f);
  return r;
}

Poly poly_pow_trunc(const FieldContext& ctx, const Poly& f, uint64_t e, int max_deg) {
  Poly r({ctx.one()});
  for (uint64_t i = 0; i < e; ++i) r = poly_mul_trunc(ctx, r, f, max_deg);
  return r;
}

Poly poly_mulmod(const FieldContext& ctx, const Poly& a, const Poly& b, const Poly& f) {
  return poly_mod(ctx, poly_mul(ctx, a, b), f);
}

Poly poly_powmod(const FieldContext& ctx, const Poly& base, uint64_t e, const Poly& f) {
  Poly r({ctx.one()});
  Poly b = poly_mod(ctx, base, f);
  while (e) {
    if (e & 1) r = poly_mulmod(ctx, r, b, f);
    b = poly_mulmod(ctx, b, b, f);
    e >>= 1;
  }
  return r;
}

namespace {

// r * x mod f for monic f with deg r < deg f.
Poly shift_mod(const FieldContext& ctx, const Poly& r, const Poly& f) {
  if (r.is_zero()) return r;
  std::vector<Fp2> c(r.coeffs().size() + 1);
  std::copy(r.coeffs().begin(), r.coeffs().end(), c.begin() + 1);
  Poly s(std::move(c));
  if (s.degree() < f.degree()) return s;
  Fp2 lead = s.lead();
  std::vector<Fp2> out(f.degree());
  for (int i = 0; i < f.degree(); ++i) out[i] = ctx.sub(s.coeff(i), ctx.mul(lead, f.coeffs()[i]));
  return Poly(std::move(out));
}

}  // namespace

Poly powmod_frobenius(const FieldContext& ctx, const Poly& f, uint64_t q) {
  if (f.degree() < 1) throw std::invalid_argument("powmod_frobenius needs deg f >= 1");
  Poly fm = poly_make_monic(ctx, f);
  if (fm.degree() == 1) {
    Fp2 c = ctx.neg(fm.coeff(0));  // x = c mod (x - c)
    return Poly::constant(ctx.pow(c, q));
  }
  // Square-and-multiply with x as the base; the x-multiplications are shifts.
  int msb = 63;
  while (((q >> msb) & 1) == 0) --msb;
  Poly r({ctx.zero(), ctx.one()});
  for (int i = msb - 1; i >= 0; --i) {
    r = poly_mulmod(ctx, r, r, fm);
    if ((q >> i) & 1) r = shift_mod(ctx, r, fm);
  }
  return r;
}

bool is_squarefree(const FieldContext& ctx, const Poly& f) {
  if (f.degree() <= 0) return !f.is_zero();
  return poly_gcd(ctx, f, poly_derivative(ctx, f)).degree() == 0;
}

Poly squarefree_part(const FieldContext& ctx, const Poly& f) {
  Poly d = poly_gcd(ctx, f, poly_derivative(ctx, f));
  if (d.degree() <= 0) return poly_make_monic(ctx, f);
  return poly_make_monic(ctx, poly_divmod(ctx, f, d).first);
}

Poly half_power_coeffs(const FieldContext& ctx, const Poly& f, const Prime& p) {
  if (p.value() != ctx.p()) throw std::invalid_argument("prime does not match context");
  if (f.degree() != 5 && f.degree() != 6)
    throw std::invalid_argument("half_power_coeffs needs deg f in {5, 6}");
  if (!is_squarefree(ctx, f)) throw std::invalid_argument("half_power_coeffs needs squarefree f");
  return poly_pow(ctx, f, (p.value() - 1) / 2);
}

// ---- root finding: distinct-degree structure plus randomized splitting ----

namespace {

// Roots of a monic quadratic over F_{p^2} (both roots lie there by assumption).
void solve_quadratic(const FieldContext& ctx, const Poly& g, std::vector<Fp2>* out) {
  Fp2 b = g.coeff(1), c = g.coeff(0);
  Fp2 disc = ctx.sub(ctx.sqr(b), ctx.mul_fp(c, 4 % ctx.p()));
  auto s = ctx.sqrt(disc);
  if (!s) throw std::logic_error("quadratic expected to split over F_{p^2}");
  Fp2 inv2 = ctx.inv(ctx.from_fp(2));
  out->push_back(ctx.mul(ctx.sub(*s, b), inv2));
  out->push_back(ctx.mul(ctx.sub(ctx.neg(*s), b), inv2));
}

// Cantor-Zassenhaus split of a product of distinct linear factors over the
// field of size q (q = p or p^2); random shifts are drawn from rng.
void split_linear(const FieldContext& ctx, Poly g, uint64_t q, std::mt19937_64& rng,
                  std::vector<Fp2>* out) {
  std::vector<Poly> stack{std::move(g)};
  while (!stack.empty()) {
    Poly cur = std::move(stack.back());
    stack.pop_back();
    if (cur.degree() <= 0) continue;
    if (cur.degree() == 1) {
      out->push_back(ctx.neg(cur.coeff(0)));
      continue;
    }
    for (;;) {
      Fp2 a = ctx.dec(rng() % q);
      Poly base({a, ctx.one()});
      Poly h = poly_powmod(ctx, base, (q - 1) / 2, cur);
      Poly d = poly_gcd(ctx, cur, poly_sub(ctx, h, Poly({ctx.one()})));
      if (d.degree() > 0 && d.degree() < cur.degree()) {
        Poly other = poly_divmod(ctx, cur, d).first;
        stack.push_back(std::move(d));
        stack.push_back(std::move(other));
        break;
      }
    }
  }
}

// Split of a product of distinct irreducible quadratics over F_p into its
// quadratic factors, then root extraction in F_{p^2}.
void split_quadratic(const FieldContext& ctx, Poly g, std::mt19937_64& rng,
                     std::vector<Fp2>* out) {
  uint64_t p = ctx.p();
  uint64_t e = (p * p - 1) / 2;
  std::vector<Poly> stack{std::move(g)};
  while (!stack.empty()) {
    Poly cur = std::move(stack.back());
    stack.pop_back();
    if (cur.degree() <= 0) continue;
    if (cur.degree() == 2) {
      solve_quadratic(ctx, cur, out);
      continue;
    }
    for (;;) {
      std::vector<Fp2> rc(cur.degree());
      for (auto& x : rc) x = ctx.from_fp(rng() % p);
      Poly r(std::move(rc));
      if (r.is_zero()) continue;
      Poly h = poly_powmod(ctx, r, e, cur);
      Poly d = poly_gcd(ctx, cur, poly_sub(ctx, h, Poly({ctx.one()})));
      if (d.degree() > 0 && d.degree() < cur.degree()) {
        Poly other = poly_divmod(ctx, cur, d).first;
        stack.push_back(std::move(d));
        stack.push_back(std::move(other));
        break;
      }
    }
  }
}

}  // namespace

std::vector<Fp2> roots_in_field(const FieldContext& ctx, const Poly& f, RootField which,
                                uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  Poly fs = squarefree_part(ctx, f);
  std::vector<Fp2> roots;
  if (fs.degree() >= 1) {
    uint64_t p = ctx.p();
    uint64_t q = which == RootField::Fp ? p : p * p;
    Poly xq = powmod_frobenius(ctx, fs, q);
    Poly w = poly_gcd(ctx, fs, poly_sub(ctx, xq, Poly({ctx.zero(), ctx.one()})));
    if (w.degree() >= 1) {
      std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
      if (which == RootField::Fp) {
        split_linear(ctx, w, p, rng, &roots);
      } else if (w.is_fp()) {
        // All roots lie in F_{p^2}, so over F_p the factors have degree 1 or 2.
        Poly xp = powmod_frobenius(ctx, w, p);
        Poly w1 = poly_gcd(ctx, w, poly_sub(ctx, xp, Poly({ctx.zero(), ctx.one()})));
        Poly w2 = w1.degree() >= 1 ? poly_divmod(ctx, w, w1).first : w;
        if (w1.degree() >= 1) split_linear(ctx, w1, p, rng, &roots);
        split_quadratic(ctx, w2, rng, &roots);
      } else {
        split_linear(ctx, w, q, rng, &roots);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace sshowe
