#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sshowe/ff.hpp"
#include "sshowe/poly.hpp"

namespace sshowe {

/// Hyperelliptic genus-2 model y^2 = f(x) with f squarefree of degree 5 or 6
/// over F_{p^2}. The root list is optional and purely informational.
struct HyperellipticModel {
  Poly f;
  std::optional<std::vector<Fp2>> roots;
};

/// Hasse-Witt (Cartier-Manin) matrix of a genus-2 model: the coefficients of
/// f^((p-1)/2) at exponents (p-1, p-2; 2p-1, 2p-2). The zero matrix is the
/// operational definition of superspeciality here.
struct HasseWittMatrix {
  std::array<std::array<Fp2, 2>, 2> m{};
  bool is_zero() const {
    return m[0][0] == Fp2{} && m[0][1] == Fp2{} && m[1][0] == Fp2{} && m[1][1] == Fp2{};
  }
};

/// Throws std::invalid_argument for wrong degree or a non-squarefree model.
HasseWittMatrix hasse_witt(const FieldContext& ctx, const HyperellipticModel& model);
bool is_superspecial_g2(const FieldContext& ctx, const HyperellipticModel& model);

/// Coefficients (F_p, ascending) of
/// h(b) = sum_{i<=floor(p/4)} binom((p-1)/2, floor((p+1)/4)+i) binom((p-1)/2, i) b^i;
/// y^2 = x(x^2-1)(x^2-b) is superspecial iff h(b) = 0.
std::vector<uint64_t> h_polynomial(const Prime& p);

/// Coefficients of
/// g(a) = sum_{i<=floor(p/3)} binom((p-1)/2, floor((p+1)/6)+i) binom((p-1)/2, i) a^i;
/// y^2 = (x^3-1)(x^3-a) is superspecial iff g(a) = 0.
std::vector<uint64_t> g_polynomial(const Prime& p);

/// Legendre parameters of the two elliptic quotients of
/// y^2 = (x^2-1)(x^2-A)(x^2-B): (B-A)/(1-A) and (B-A)/(B(1-A)).
/// Requires A, B outside {0, 1} and A != B.
std::pair<Fp2, Fp2> case1_split(const FieldContext& ctx, const Fp2& A, const Fp2& B);

/// j-invariant of the elliptic factor of y^2 = x(x^2-1)(x^2-s^2):
/// 64 (3s-1)^3 (s-3)^3 / ((s-1)^2 (s+1)^4). Requires s outside {0, +-1}.
Fp2 case3_j(const FieldContext& ctx, const Fp2& s);

/// j-invariant of the elliptic factor of y^2 = (x^3-1)(x^3-u^2) for u = s^3:
/// 6912 u (2u-1)^3 (u-2)^3 / ((u-1)^2 (u+1)^6). Requires u outside {0, +-1}.
Fp2 case2_j(const FieldContext& ctx, const Fp2& u);

/// Model builders for the recurring curve shapes.
HyperellipticModel model_from_roots(const FieldContext& ctx, const std::vector<Fp2>& roots);
/// y^2 = x(x^2-1)(x^2-b)
HyperellipticModel model_case3(const FieldContext& ctx, const Fp2& b);
/// y^2 = (x^3-1)(x^3-a)
HyperellipticModel model_case2(const FieldContext& ctx, const Fp2& a);
/// y^2 = (x^2-1)(x^2-A)(x^2-B)
HyperellipticModel model_case1(const FieldContext& ctx, const Fp2& A, const Fp2& B);

}  // namespace sshowe
