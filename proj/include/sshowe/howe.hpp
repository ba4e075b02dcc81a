#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sshowe/certify.hpp"
#include "sshowe/ff.hpp"
#include "sshowe/ssec.hpp"

namespace sshowe {

struct SearchConfig {
  uint64_t seed = 0;
  /// Genus-4 two-pass policy: scan the lambdas with prime-field j-invariant
  /// first, then the full table.
  bool restricted_first = true;
  /// Keep scanning after the first hit and count every one; the reported
  /// certificate is still the first in canonical order.
  bool exhaustive = false;
  /// Abort with Interrupted once this many pairs were examined (0 = no cap).
  uint64_t work_limit = 0;
  /// Exhaustive Rosenhain pair searches refuse to run beyond these primes.
  uint64_t pair_search_max_p_genus5 = 19;
  uint64_t pair_search_max_p_genus6 = 13;
};

struct SearchStats {
  std::string strategy;
  uint64_t pairs_tested = 0;
  uint64_t hits = 0;
  uint64_t supersingular_checks = 0;
  int passes = 0;
};

enum class SearchStatus { Found, Exhausted, Interrupted };

/// Exhausted is reported only after the complete deterministic enumeration
/// finished without a hit; a capped scan reports Interrupted instead.
struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Certificate> certificate;
  SearchStats stats;
};

struct Genus4Lambdas {
  Fp2 lambda1, lambda3, lambda4;
};

/// The four compatibility conditions on (lambda1, lambda3):
/// l1 != l3, l1^2 != l3, l1^2 - 2 l1 + l3 != 0, 2 l1 l3 - l1^2 - l3 != 0.
bool genus4_conditions(const FieldContext& ctx, const Fp2& l1, const Fp2& l3);

/// (s, t) = ((l1^2 - l3) / d, (2 l1 l3 - l1^2 - l3) / d) with
/// d = l1^2 - 2 l1 + l3. Requires l1, l3 outside {0,1} and the conditions
/// above; the output satisfies s, t outside {0, +-1} and s^2 != t^2.
std::pair<Fp2, Fp2> genus4_st_from_lambdas(const FieldContext& ctx, const Fp2& l1, const Fp2& l3);

/// Legendre parameters of the three elliptic factors:
/// lambda1 = (t-s)/(1-s), lambda3 = (t^2-s^2)/(1-s^2),
/// lambda4 = (t^2-s^2)/(t^2 (1-s^2)).
Genus4Lambdas genus4_lambdas(const FieldContext& ctx, const Fp2& s, const Fp2& t);

/// Roots s in F_{p^2} of 64 (3s-1)^3 (s-3)^3 - j (s-1)^2 (s+1)^4,
/// filtered to s outside {0, +-1}; sorted by canonical encoding.
std::vector<Fp2> solve_case3_j_equation(const FieldContext& ctx, const Fp2& j, uint64_t seed);

/// Roots u = s^3 in F_{p^2} of 6912 u (2u-1)^3 (u-2)^3 - j (u-1)^2 (u+1)^6,
/// filtered to u outside {0, +-1}; sorted by canonical encoding.
std::vector<Fp2> solve_case2_j_equation(const FieldContext& ctx, const Fp2& j, uint64_t seed);

/// j-invariant of the third elliptic factor for genus 6, from the cubes:
/// 6912 u v (2u-v)^3 (u-2v)^3 / ((u-v)^2 (u+v)^6). Requires u != +-v, uv != 0.
Fp2 genus6_e3_j(const FieldContext& ctx, const Fp2& u, const Fp2& v);

/// Scan of supersingular Legendre pairs (lambda1, lambda3): each admissible
/// pair determines (s, t), and the hit condition is that the third parameter
/// lambda4 is supersingular as well.
SearchOutcome search_genus4(const FieldContext& ctx, const SearchConfig& cfg);

/// Closed-form certificate (s, t) = (omega, omega^2) for p = 5 (mod 6): all
/// three elliptic factors then have j-invariant 0, which is supersingular.
/// Throws std::invalid_argument when p = 1 (mod 6).
SearchOutcome search_genus4_cor(const FieldContext& ctx);

/// Scan of ordered root pairs (b1, b2) of the h-polynomial; the hit condition
/// is supersingularity of y^2 = (x^2-b1)(x^2-b2).
SearchOutcome search_genus5_naive(const FieldContext& ctx, const SearchConfig& cfg);

/// Scan of supersingular j-invariant pairs (j1, j2), solving for s and t;
/// the hit condition is supersingularity of y^2 = (x^2-s^2)(x^2-t^2).
SearchOutcome search_genus5(const FieldContext& ctx, const SearchConfig& cfg);

/// Scan of ordered root pairs (a1, a2) of the g-polynomial; the hit condition
/// is a1/a2 being a root as well.
SearchOutcome search_genus6_naive(const FieldContext& ctx, const SearchConfig& cfg);

/// Scan of supersingular j-invariant pairs (j1, j2), solving for the cubes
/// u = s^3 and v = t^3; the hit condition is that the derived third
/// j-invariant is supersingular.
SearchOutcome search_genus6(const FieldContext& ctx, const SearchConfig& cfg);

/// Exhaustive small-p search for two superspecial Rosenhain curves sharing
/// the Weierstrass points {0, 1, infinity, lambda1}, with the quartic through
/// the four unshared points supersingular. Throws when p exceeds the bound.
SearchOutcome search_genus5_pairs(const FieldContext& ctx, const SearchConfig& cfg);

/// Exhaustive small-p search for two superspecial Rosenhain curves sharing
/// exactly {0, 1, infinity}, with the sextic through the six unshared points
/// superspecial. Throws when p exceeds the bound.
SearchOutcome search_genus6_pairs(const FieldContext& ctx, const SearchConfig& cfg);

}  // namespace sshowe
