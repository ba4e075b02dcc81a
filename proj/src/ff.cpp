#include "sshowe/ff.hpp"

#include <algorithm>

namespace sshowe {

namespace {

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  // Operands stay below 2^31, so products fit in 64 bits.
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

bool miller_rabin(uint64_t n, uint64_t a) {
  if (a % n == 0) return true;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Deterministic witness set for n < 3,215,031,751.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull})
    if (!miller_rabin(n, a)) return false;
  return true;
}

Prime::Prime(uint64_t p) : p_(p) {
  if (p <= 5) throw std::invalid_argument("prime must exceed 5, got " + std::to_string(p));
  if (p >= (1ull << 31))
    throw std::invalid_argument("prime must be below 2^31, got " + std::to_string(p));
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

uint64_t least_nonresidue(uint64_t p) {
  for (uint64_t n = 2;; ++n) {
    if (powmod_u64(n, (p - 1) / 2, p) == p - 1) return n;
  }
}

FieldContext::FieldContext(Prime p) : p_(p.value()), a1_(0) {
  a0_ = p_ - least_nonresidue(p_);  // z^2 - n
  init();
}

FieldContext::FieldContext(Prime p, uint64_t a0, uint64_t a1)
    : p_(p.value()), a0_(a0 % p.value()), a1_(a1 % p.value()) {
  init();
}

void FieldContext::init() {
  // Irreducible over F_p iff the discriminant a1^2 - 4*a0 is a non-square.
  uint64_t disc = fp_sub(fp_mul(a1_, a1_), fp_mul(4 % p_, a0_));
  if (disc == 0 || fp_legendre(disc) == 1)
    throw std::invalid_argument("minimal polynomial z^2 + " + std::to_string(a1_) + "z + " +
                                std::to_string(a0_) + " is reducible mod " + std::to_string(p_));

  // Factor p^2 - 1 = (p - 1)(p + 1) by trial division of the two halves.
  auto accumulate = [&](uint64_t n) {
    for (uint64_t d = 2; d * d <= n; ++d) {
      while (n % d == 0) {
        n /= d;
        auto it = std::find_if(order_factors_.begin(), order_factors_.end(),
                               [&](const auto& f) { return f.first == d; });
        if (it == order_factors_.end())
          order_factors_.push_back({d, 1});
        else
          ++it->second;
      }
    }
    if (n > 1) {
      auto it = std::find_if(order_factors_.begin(), order_factors_.end(),
                             [&](const auto& f) { return f.first == n; });
      if (it == order_factors_.end())
        order_factors_.push_back({n, 1});
      else
        ++it->second;
    }
  };
  accumulate(p_ - 1);
  accumulate(p_ + 1);
  std::sort(order_factors_.begin(), order_factors_.end());

  generator_flag_ = element_order(zeta()) == p_ * p_ - 1;

  // Deterministic non-residue scan in canonical-encoding order.
  for (uint64_t e = 2;; ++e) {
    Fp2 x = dec(e);
    if (!is_square(x)) {
      nqr_ = x;
      break;
    }
  }
}

uint64_t FieldContext::fp_add(uint64_t a, uint64_t b) const {
  uint64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}

uint64_t FieldContext::fp_sub(uint64_t a, uint64_t b) const {
  return a >= b ? a - b : a + p_ - b;
}

uint64_t FieldContext::fp_neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }

uint64_t FieldContext::fp_pow(uint64_t a, uint64_t e) const { return powmod_u64(a, e, p_); }

uint64_t FieldContext::fp_inv(uint64_t a) const {
  if (a == 0) throw std::domain_error("inversion of zero in F_p");
  return powmod_u64(a, p_ - 2, p_);
}

int FieldContext::fp_legendre(uint64_t a) const {
  a %= p_;
  if (a == 0) return 0;
  return powmod_u64(a, (p_ - 1) / 2, p_) == 1 ? 1 : -1;
}

Fp2 FieldContext::from_int(int64_t a) const {
  int64_t m = a % static_cast<int64_t>(p_);
  if (m < 0) m += static_cast<int64_t>(p_);
  return {static_cast<uint64_t>(m), 0};
}

Fp2 FieldContext::add(const Fp2& x, const Fp2& y) const {
  return {fp_add(x.c0, y.c0), fp_add(x.c1, y.c1)};
}

Fp2 FieldContext::sub(const Fp2& x, const Fp2& y) const {
  return {fp_sub(x.c0, y.c0), fp_sub(x.c1, y.c1)};
}

Fp2 FieldContext::neg(const Fp2& x) const { return {fp_neg(x.c0), fp_neg(x.c1)}; }

Fp2 FieldContext::mul(const Fp2& x, const Fp2& y) const {
  // zeta^2 = -a1*zeta - a0
  uint64_t t = x.c1 * y.c1 % p_;
  uint64_t u = x.c0 * y.c0 % p_;
  uint64_t cross = (x.c0 * y.c1 + x.c1 * y.c0) % p_;
  return {fp_sub(u, a0_ * t % p_), fp_sub(cross, a1_ * t % p_)};
}

Fp2 FieldContext::mul_fp(const Fp2& x, uint64_t a) const {
  return {x.c0 * a % p_, x.c1 * a % p_};
}

Fp2 FieldContext::pow(const Fp2& x, uint64_t e) const {
  Fp2 r = one();
  Fp2 b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

uint64_t FieldContext::norm(const Fp2& x) const {
  // x * conj(x) = c0^2 - a1*c0*c1 + a0*c1^2
  uint64_t n = fp_sub(x.c0 * x.c0 % p_, a1_ * x.c0 % p_ * x.c1 % p_);
  return fp_add(n, a0_ * x.c1 % p_ * x.c1 % p_);
}

Fp2 FieldContext::inv(const Fp2& x) const {
  if (x == zero()) throw std::domain_error("inversion of zero in F_{p^2}");
  uint64_t ninv = fp_inv(norm(x));
  Fp2 conj = frobenius(x);
  return mul_fp(conj, ninv);
}

Fp2 FieldContext::frobenius(const Fp2& x) const {
  // conj(c0 + c1*zeta) = (c0 - a1*c1) - c1*zeta, since zeta + conj(zeta) = -a1.
  return {fp_sub(x.c0, a1_ * x.c1 % p_), fp_neg(x.c1)};
}

bool FieldContext::is_square(const Fp2& x) const {
  if (x == zero()) return true;
  return pow(x, (p_ * p_ - 1) / 2) == one();
}

std::optional<Fp2> FieldContext::sqrt(const Fp2& x) const {
  if (x == zero()) return zero();
  if (!is_square(x)) return std::nullopt;
  // Tonelli-Shanks in F_q, q = p^2.
  uint64_t q1 = p_ * p_ - 1;
  int e = 0;
  uint64_t m = q1;
  while ((m & 1) == 0) {
    m >>= 1;
    ++e;
  }
  Fp2 z = pow(nqr_, m);
  Fp2 t = pow(x, m);
  Fp2 r = pow(x, (m + 1) / 2);
  while (t != one()) {
    int i = 0;
    Fp2 s = t;
    while (s != one()) {
      s = sqr(s);
      ++i;
    }
    Fp2 b = z;
    for (int k = 0; k < e - i - 1; ++k) b = sqr(b);
    r = mul(r, b);
    z = sqr(b);
    t = mul(t, z);
    e = i;
  }
  Fp2 other = neg(r);
  return std::min(r, other);
}

uint64_t FieldContext::element_order(const Fp2& x) const {
  if (x == zero()) throw std::domain_error("order of zero");
  uint64_t ord = p_ * p_ - 1;
  for (const auto& [q, mult] : order_factors_) {
    for (int i = 0; i < mult; ++i) {
      if (pow(x, ord / q) == one())
        ord /= q;
      else
        break;
    }
  }
  return ord;
}

}  // namespace sshowe
