#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sshowe/ff.hpp"

namespace sshowe {

enum class CertKind { Genus4, Genus5, Genus6, Genus5Pair, Genus6Pair };

std::string cert_kind_name(CertKind kind);

/// Genus-4 curve from elliptic curves y^2 = (x-1)(x-s)(x-t) and its mirror;
/// the witnesses are the Legendre parameters of the three elliptic factors.
struct Genus4Data {
  Fp2 s, t;
  Fp2 lambda1, lambda3, lambda4;
};

/// Genus-5 curve glued from y^2 = x(x^2-1)(x^2-s^2) and y^2 = x(x^2-1)(x^2-t^2);
/// e3_lambda is the Legendre parameter of y^2 = (x^2-s^2)(x^2-t^2).
struct Genus5Data {
  Fp2 s, t, j1, j2;
  Fp2 e3_lambda;
};

/// Genus-6 curve glued from y^2 = (x^3-1)(x^3-s3^2) and y^2 = (x^3-1)(x^3-t3^2),
/// carried by the cubes s3 = s^3, t3 = t^3; j3 is the j-invariant of the third
/// elliptic factor.
struct Genus6Data {
  Fp2 s3, t3, j1, j2;
  Fp2 j3;
};

/// Pair of superspecial Rosenhain curves sharing the Weierstrass points
/// {0, 1, infinity, lambda1}; the quartic through the four unshared points
/// must be supersingular.
struct Genus5PairData {
  Fp2 lambda1, lambda2, lambda3;
  Fp2 mu2, mu3;
  Fp2 e3_lambda;
};

/// Pair of superspecial Rosenhain curves sharing exactly {0, 1, infinity};
/// the sextic through the six unshared points must be superspecial.
struct Genus6PairData {
  std::array<Fp2, 3> lambda;
  std::array<Fp2, 3> mu;
};

/// Self-contained, independently re-verifiable witness of a superspecial
/// curve: the prime, the quadratic defining F_{p^2}, and kind-specific
/// parameters plus the values the verifier must reproduce.
struct Certificate {
  uint64_t p = 0;
  uint64_t minpoly_a0 = 0, minpoly_a1 = 0;  // z^2 + a1 z + a0
  std::variant<Genus4Data, Genus5Data, Genus6Data, Genus5PairData, Genus6PairData> data;

  CertKind kind() const { return static_cast<CertKind>(data.index()); }
  FieldContext context() const { return FieldContext(Prime(p), minpoly_a0, minpoly_a1); }
};

class CertError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON document, byte-stable for a given certificate (fixed key order).
std::string serialize(const Certificate& cert);
/// Throws CertError (with position information for malformed documents).
Certificate deserialize(const std::string& text);

struct VerificationCheck {
  std::string name;
  bool ok;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  std::string note;

  bool ok() const;
  void add(std::string name, bool value, std::string detail = "");
  std::string summary() const;
};

/// Re-derives every claim of the certificate from scratch: Hasse-Witt
/// matrices for the genus-2 components and Deuring evaluations for the
/// elliptic ones. Never consults any search state.
VerificationReport verify(const Certificate& cert);

/// One transcribed example construction: genus 5 records share four
/// Weierstrass points, genus 6 records share three. Entries are either
/// exponents of zeta or prime-field literals.
struct AppendixValue {
  bool is_exponent;
  uint64_t v;
};

struct AppendixRecord {
  int genus;  // 5 or 6
  uint64_t p;
  bool has_minpoly;
  uint64_t minpoly_a0, minpoly_a1;
  std::array<AppendixValue, 3> c1;
  std::array<AppendixValue, 3> c2;
};

/// The embedded dataset: 10 genus-5 records and 20 genus-6 records.
const std::vector<AppendixRecord>& appendix_records();

/// FNV-1a fingerprint of the embedded dataset, for drift detection.
uint64_t appendix_checksum();

/// Resolves zeta (trying the designated root and its conjugate), rebuilds the
/// record's curves and verifies every component. The report's note names the
/// designation that verified.
VerificationReport verify_appendix(const AppendixRecord& record);

/// The record rebuilt as a pair certificate under the given designation.
Certificate appendix_to_certificate(const AppendixRecord& record, bool conjugate_root);

}  // namespace sshowe
