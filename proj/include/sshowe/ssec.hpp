#pragma once

#include <cstdint>
#include <vector>

#include "sshowe/ff.hpp"
#include "sshowe/poly.hpp"

namespace sshowe {

/// Point of the projective line over F_{p^2}.
struct ProjPoint {
  Fp2 v{};
  bool at_infinity = false;

  static ProjPoint infinity() { return {Fp2{}, true}; }
  static ProjPoint finite(const Fp2& x) { return {x, false}; }
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Coefficients (in F_p, ascending) of the Deuring polynomial
/// H_p(t) = sum_i binom((p-1)/2, i)^2 t^i of degree (p-1)/2; the Legendre
/// curve y^2 = x(x-1)(x-lambda) is supersingular iff H_p(lambda) = 0.
std::vector<uint64_t> deuring_polynomial(const Prime& p);

/// Horner evaluation of a prime-field coefficient vector at an F_{p^2} point.
Fp2 eval_fp_coeffs(const FieldContext& ctx, const std::vector<uint64_t>& coeffs, const Fp2& x);

/// Supersingularity of y^2 = x(x-1)(x-lambda); requires lambda not in {0, 1}.
/// `deuring` must be deuring_polynomial(p) for the context's p.
bool is_supersingular_legendre(const FieldContext& ctx, const std::vector<uint64_t>& deuring,
                               const Fp2& lambda);

/// j-invariant of the Legendre curve: j = 256 (l^2-l+1)^3 / (l^2 (l-1)^2).
Fp2 j_from_lambda(const FieldContext& ctx, const Fp2& lambda);

/// Legendre parameter of y^2 = prod (x - r_i): the cross-ratio sending
/// (r1, r2, r4) to (0, 1, infinity), evaluated at r3. One point may be at
/// infinity; the points must be pairwise distinct.
Fp2 cross_ratio_lambda(const FieldContext& ctx, const ProjPoint& r1, const ProjPoint& r2,
                       const ProjPoint& r3, const ProjPoint& r4);

bool is_supersingular_quartic(const FieldContext& ctx, const std::vector<uint64_t>& deuring,
                              const ProjPoint& r1, const ProjPoint& r2, const ProjPoint& r3,
                              const ProjPoint& r4);

/// Per-prime supersingularity tables: T is the full set of supersingular
/// Legendre parameters (the Deuring roots), S the set of supersingular
/// j-invariants, and T_restricted the subset of T whose j-invariant lies in
/// F_p. All three are sorted by canonical encoding and immutable once built.
struct SupersingularTables {
  uint64_t p = 0;
  std::vector<uint64_t> deuring;
  std::vector<Fp2> T;
  std::vector<Fp2> S;
  std::vector<Fp2> T_restricted;

  bool in_T(const Fp2& lambda) const;
  bool in_S(const Fp2& j) const;
};

SupersingularTables build_tables(const FieldContext& ctx, uint64_t seed);

/// Membership test of j in S; throws if the tables were built for another p.
bool is_supersingular_j(const FieldContext& ctx, const Fp2& j, const SupersingularTables& tables);

/// Supersingularity of the j-invariant decided without tables: find a
/// Legendre parameter with that j over F_{p^2} and test it against the
/// Deuring polynomial. Equivalent to membership in S.
bool is_supersingular_j_deuring(const FieldContext& ctx, const std::vector<uint64_t>& deuring,
                                const Fp2& j, uint64_t seed);

}  // namespace sshowe
