#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sshowe {

bool is_prime(uint64_t n);

/// Odd prime p with 5 < p < 2^31; primality is verified at construction.
class Prime {
 public:
  explicit Prime(uint64_t p);
  uint64_t value() const { return p_; }

 private:
  uint64_t p_;
};

/// Element of F_{p^2} in coordinates over the basis {1, zeta}, where zeta is
/// the designated root of the context's minimal polynomial. The canonical
/// encoding is enc(x) = c0 + p*c1; comparing (c1, c0) lexicographically
/// reproduces that order without knowing p.
struct Fp2 {
  uint64_t c0 = 0;
  uint64_t c1 = 0;

  friend bool operator==(const Fp2&, const Fp2&) = default;
  friend std::strong_ordering operator<=>(const Fp2& x, const Fp2& y) {
    if (auto c = x.c1 <=> y.c1; c != 0) return c;
    return x.c0 <=> y.c0;
  }
};

/// F_{p^2} = F_p[z] / (z^2 + a1*z + a0), with the minimal polynomial monic
/// and irreducible over F_p. Immutable after construction; every operation is
/// pure, so one context can be shared freely across threads.
///
/// The two roots of the minimal polynomial are zeta = (0,1) and its Frobenius
/// conjugate; the context designates zeta. generator_flag records whether
/// zeta generates the multiplicative group (verified against the
/// factorization of p^2 - 1, not by enumeration).
class FieldContext {
 public:
  /// Default minimal polynomial z^2 - n with n the least quadratic
  /// non-residue mod p.
  explicit FieldContext(Prime p);
  /// Monic z^2 + a1*z + a0 (coefficients reduced mod p); throws
  /// std::invalid_argument if it is reducible over F_p.
  FieldContext(Prime p, uint64_t a0, uint64_t a1);

  uint64_t p() const { return p_; }
  uint64_t minpoly_a0() const { return a0_; }
  uint64_t minpoly_a1() const { return a1_; }
  bool zeta_generates() const { return generator_flag_; }

  // --- F_p scalar arithmetic (values in [0, p)) ---
  uint64_t fp_add(uint64_t a, uint64_t b) const;
  uint64_t fp_sub(uint64_t a, uint64_t b) const;
  uint64_t fp_neg(uint64_t a) const;
  uint64_t fp_mul(uint64_t a, uint64_t b) const { return a * b % p_; }
  uint64_t fp_pow(uint64_t a, uint64_t e) const;
  uint64_t fp_inv(uint64_t a) const;
  /// Legendre symbol as an int in {-1, 0, 1}.
  int fp_legendre(uint64_t a) const;

  // --- F_{p^2} arithmetic ---
  Fp2 zero() const { return {}; }
  Fp2 one() const { return {1, 0}; }
  Fp2 zeta() const { return {0, 1}; }
  Fp2 from_fp(uint64_t a) const { return {a % p_, 0}; }
  Fp2 from_int(int64_t a) const;
  Fp2 make(uint64_t c0, uint64_t c1) const { return {c0 % p_, c1 % p_}; }

  bool is_fp(const Fp2& x) const { return x.c1 == 0; }
  Fp2 add(const Fp2& x, const Fp2& y) const;
  Fp2 sub(const Fp2& x, const Fp2& y) const;
  Fp2 neg(const Fp2& x) const;
  Fp2 mul(const Fp2& x, const Fp2& y) const;
  Fp2 sqr(const Fp2& x) const { return mul(x, x); }
  Fp2 mul_fp(const Fp2& x, uint64_t a) const;
  Fp2 pow(const Fp2& x, uint64_t e) const;
  /// Throws std::domain_error on inversion of zero.
  Fp2 inv(const Fp2& x) const;
  Fp2 div(const Fp2& x, const Fp2& y) const { return mul(x, inv(y)); }
  /// x -> x^p; an involution fixing exactly the F_p subfield.
  Fp2 frobenius(const Fp2& x) const;
  /// Norm x * x^p as an F_p scalar.
  uint64_t norm(const Fp2& x) const;

  bool is_square(const Fp2& x) const;
  /// Square root when one exists; the root with the smaller canonical
  /// encoding is returned, so the choice is deterministic.
  std::optional<Fp2> sqrt(const Fp2& x) const;

  uint64_t enc(const Fp2& x) const { return x.c0 + p_ * x.c1; }
  Fp2 dec(uint64_t e) const { return {e % p_, e / p_}; }

  /// Multiplicative order of x (x must be nonzero).
  uint64_t element_order(const Fp2& x) const;
  /// Prime factorization of p^2 - 1 with multiplicities.
  const std::vector<std::pair<uint64_t, int>>& group_order_factors() const {
    return order_factors_;
  }

 private:
  void init();

  uint64_t p_;
  uint64_t a0_, a1_;
  bool generator_flag_ = false;
  Fp2 nqr_;  // quadratic non-residue of F_{p^2}, for Tonelli-Shanks
  std::vector<std::pair<uint64_t, int>> order_factors_;
};

/// Least quadratic non-residue modulo p.
uint64_t least_nonresidue(uint64_t p);

}  // namespace sshowe
