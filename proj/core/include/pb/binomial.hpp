#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "pb/field.hpp"

namespace pb {

/// x^m + a*x^n over F_q, with m > n > 0.
struct Binomial {
  std::int64_t m = 0;
  std::int64_t n = 0;
  FieldElement a;
};

/// Reduced form x^n (x^k + a) with k | q-1 and gcd(n, k) = 1, together
/// with r = (q-1)/k and the substitution exponent j used to get here.
struct CanonicalBinomial {
  std::int64_t q = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::int64_t j = 0;
};

enum class Obstruction {
  GcdFails,                  // gcd(m, n, q-1) > 1: no a gives a permutation
  NoCoprimeRepresentative,   // no exponent class representative coprime to k
};

using CanonicalizeResult = std::variant<CanonicalBinomial, Obstruction>;

/// Reduces x^m + a x^n to the canonical shape. k = gcd(m-n, q-1); j is
/// the smallest positive unit mod q-1 with j(m-n) = k (mod q-1); n is the
/// smallest positive integer in the class n*j mod r that is coprime to k.
CanonicalizeResult canonicalize(std::int64_t q, std::int64_t m, std::int64_t n);

/// Direct evaluation over all of F_q: true iff f takes q distinct values.
/// Stays off the discrete-log tables; this is the independent oracle the
/// reduced test is checked against.
bool is_permutation_naive(const FiniteField& field, const Binomial& b);

/// Decides whether x^n (x^k + a) permutes F_q by checking that
/// g(z) = z^(n mod r) (z + a)^k permutes the r-th roots of unity.
/// Short-circuits false when (-a)^r = 1. Requires a != 0.
bool is_permutation_reduced(const FiniteField& field, const CanonicalBinomial& c, const FieldElement& a);

/// Exact number of a in F_q (a = 0 included; it counts iff
/// gcd(m, q-1) = 1) for which x^m + a x^n permutes F_q. Counts nonzero a
/// as r times the number of permuting coset representatives.
std::int64_t count_T(const FiniteField& field, std::int64_t m, std::int64_t n);

/// Cross-check variant: iterates every a with the naive test.
std::int64_t count_T_naive(const FiniteField& field, std::int64_t m, std::int64_t n);

/// True iff a is NOT a (p^i - 1)-th power in F_q, the hypothesis under
/// which x^(p^i) - a x is guaranteed to permute F_q.
bool mathieu_check(const FiniteField& field, int i, const FieldElement& a);

/// Log-domain class tester over a field's exp/log tables. One instance
/// per thread; reusable across (k, n, a) triples of the same field.
class ClassScanner {
 public:
  explicit ClassScanner(const FiniteField& field);

  /// Verdict for x^n (x^k + a) with k | q-1 and a = g^a_exp. The verdict
  /// depends on n only through n mod r, so any representative of a class
  /// containing integers coprime to k is acceptable.
  bool permutes(std::int64_t k, std::int64_t n, std::int64_t a_exp);

  /// Same, for arbitrary nonzero a by encoding.
  bool permutes_enc(std::int64_t k, std::int64_t n, std::int64_t a_enc);

  const FiniteField& field() const { return field_; }

 private:
  const FiniteField& field_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t current_ = 0;
};

/// Representatives of the exponent classes mod r that contain integers
/// coprime to k: for each admissible class, the smallest positive member
/// coprime to k. Sorted ascending.
std::vector<std::int64_t> n_class_reps(std::int64_t k, std::int64_t r);

}  // namespace pb
