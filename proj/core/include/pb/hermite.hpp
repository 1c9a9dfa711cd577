#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pb/field.hpp"

namespace pb {

/// Proof that x^m + a x^n permutes F_p for NO a in F_p^*. Prime fields
/// only: the degree bookkeeping relies on binomial coefficients C(l, i)
/// staying nonzero mod p for l < p, which fails in extension fields.
struct WitnessCertificate {
  enum class Kind {
    UniqueHermiteTerm,      // f^exponent has a unique term of degree divisible by p-1
    DegreeDividesQMinus1,   // m | p-1, so f^((p-1)/m) reduces to degree p-1
    MultipleRoots,          // gcd(m-n, p-1) = 1 forces a second root
    SmallCase,              // dispatched by an inequality; checked empirically
  };

  Kind kind;
  std::int64_t p = 0;
  std::int64_t m = 0;        // certificate applies to x^m + a x^n
  std::int64_t n = 0;
  std::int64_t k = 0;        // m - n when the canonical shape x^n(x^k + a) is meant, else 0
  std::int64_t exponent = 0; // Hermite exponent for the powering kinds
  std::string reason;        // SmallCase branch description
};

std::string to_string(WitnessCertificate::Kind kind);

/// Number of i in [0, l] with n*l + k*i = 0 (mod p-1): the count of
/// degree-(p-1)-divisible terms of (x^n (x^k + a))^l. Valid for 0 < l < p
/// since every C(l, i) is then nonzero mod p.
std::int64_t divisible_term_count(std::int64_t p, std::int64_t n, std::int64_t k, std::int64_t ell);

/// For k | p-1, gcd(n, k) = 1 and k below sqrt(p - 3/4) - 1/2: produces a
/// UniqueHermiteTerm certificate with exponent k(r-1) or kr, where r is
/// the least integer >= (p-1-k)/k^2. Smaller exponent preferred.
WitnessCertificate intro1_certificate(std::int64_t p, std::int64_t n, std::int64_t k);

/// Smallest l = k*t with 0 < l < p-1 and a unique divisible term, if any.
/// Only multiples of k can carry divisible terms when gcd(n, k) = 1.
/// Returns nullopt in particular whenever k >= sqrt(2p - 7/4) - 1/2.
std::optional<std::int64_t> search_unique_divisible(std::int64_t p, std::int64_t n, std::int64_t k);

/// For gcd(m, n) = 1, 0 < n < m < p and p-1 > (m-1)*max(n, gcd(m-n, p-1)):
/// certificate that no a makes x^m + a x^n permute, following the case
/// order MultipleRoots, SmallCase, DegreeDividesQMinus1, UniqueHermiteTerm
/// (exponent k+u with k = floor(p/m) and nu - (m-n)v = (p mod m) - 1).
WitnessCertificate wt_certificate(std::int64_t p, std::int64_t m, std::int64_t n);

/// Confirms the certificate against the field: every sampled a != 0 fails
/// the naive permutation test, and the powering kinds reduce f^exponent
/// mod x^p - x to degree exactly p-1. Throws InvalidCertificate on any
/// failure.
bool certificate_validate(const FiniteField& field, const WitnessCertificate& cert,
                          const std::vector<FieldElement>& sample_as);

/// deg(f^ell mod x^p - x) for f = x^m + a x^n; repeated squaring on dense
/// coefficient vectors.
std::int64_t powered_degree(const FiniteField& field, std::int64_t m, std::int64_t n,
                            const FieldElement& a, std::int64_t ell);

}  // namespace pb
