#pragma once

#include <cstdint>
#include <vector>

#include "sshowe/ff.hpp"

namespace sshowe {

/// Dense univariate polynomial over F_{p^2}, coefficients ascending; trailing
/// zeros are stripped so the leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector, degree -1).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Fp2> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly constant(const Fp2& a) { return Poly({a}); }
  static Poly from_fp_coeffs(const std::vector<uint64_t>& coeffs);
  /// Monic product of (x - r) over the given roots.
  static Poly from_roots(const FieldContext& ctx, const std::vector<Fp2>& roots);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of x^k; zero beyond the degree.
  Fp2 coeff(size_t k) const { return k < c_.size() ? c_[k] : Fp2{}; }
  const std::vector<Fp2>& coeffs() const { return c_; }
  Fp2 lead() const { return c_.empty() ? Fp2{} : c_.back(); }
  /// True when every coefficient lies in the prime field.
  bool is_fp() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();
  std::vector<Fp2> c_;
};

Poly poly_add(const FieldContext& ctx, const Poly& f, const Poly& g);
Poly poly_sub(const FieldContext& ctx, const Poly& f, const Poly& g);
Poly poly_mul(const FieldContext& ctx, const Poly& f, const Poly& g);
/// Product truncated to degree <= max_deg.
Poly poly_mul_trunc(const FieldContext& ctx, const Poly& f, const Poly& g, int max_deg);
Poly poly_scalar_mul(const FieldContext& ctx, const Poly& f, const Fp2& a);
/// Quotient and remainder; throws std::domain_error when g is zero.
std::pair<Poly, Poly> poly_divmod(const FieldContext& ctx, const Poly& f, const Poly& g);
Poly poly_mod(const FieldContext& ctx, const Poly& f, const Poly& g);
/// Monic greatest common divisor.
Poly poly_gcd(const FieldContext& ctx, Poly f, Poly g);
Poly poly_derivative(const FieldContext& ctx, const Poly& f);
Fp2 poly_eval(const FieldContext& ctx, const Poly& f, const Fp2& x);
Poly poly_make_monic(const FieldContext& ctx, const Poly& f);

/// f^e by iterated multiplication (intended for small-degree bases).
Poly poly_pow(const FieldContext& ctx, const Poly& f, uint64_t e);
/// f^e with every intermediate product truncated to degree <= max_deg.
Poly poly_pow_trunc(const FieldContext& ctx, const Poly& f, uint64_t e, int max_deg);

Poly poly_mulmod(const FieldContext& ctx, const Poly& a, const Poly& b, const Poly& f);
Poly poly_powmod(const FieldContext& ctx, const Poly& base, uint64_t e, const Poly& f);
/// x^q mod f for q in {p, p^2}; requires deg f >= 1.
Poly powmod_frobenius(const FieldContext& ctx, const Poly& f, uint64_t q);

bool is_squarefree(const FieldContext& ctx, const Poly& f);
Poly squarefree_part(const FieldContext& ctx, const Poly& f);

/// f^((p-1)/2), fully expanded. Requires deg f in {5, 6} and f squarefree;
/// callers typically retain only the coefficients at p-1, p-2, 2p-1, 2p-2.
Poly half_power_coeffs(const FieldContext& ctx, const Poly& f, const Prime& p);

enum class RootField { Fp, Fp2 };

/// Distinct roots of f lying in the requested field, sorted by canonical
/// encoding. Multiplicities are discarded. Equal-degree splitting is
/// randomized but driven entirely by the seed, so results are reproducible.
std::vector<Fp2> roots_in_field(const FieldContext& ctx, const Poly& f, RootField which,
                                uint64_t seed);

}  // namespace sshowe
