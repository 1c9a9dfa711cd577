#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "pb/error.hpp"

namespace pb {

class FiniteField;

/// Element of a FiniteField, stored as the integer encoding
/// sum(c_i * p^i) of its coefficient vector. Cheap to copy; arithmetic
/// checks that both operands come from the same field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FiniteField& field, std::int64_t encoding);

  std::int64_t encoding() const { return enc_; }
  const FiniteField& field() const;
  std::vector<std::int64_t> coeffs() const;

  bool is_zero() const { return enc_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement inverse() const;
  FieldElement pow(std::int64_t exponent) const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  /// Prime fields print the residue; extension fields print "c0,c1,...".
  std::string to_string() const;

 private:
  const FiniteField* field_ = nullptr;
  std::int64_t enc_ = 0;
};

/// F_{p^e} with a deterministic modulus (first irreducible monic degree-e
/// polynomial in increasing integer encoding of its non-leading
/// coefficients) and deterministic generator (smallest encoding of
/// multiplicative order q-1). Immutable after construction; safe to share
/// across threads. Guards q <= 2^31 so exponent arithmetic fits in 64-bit
/// intermediates.
class FiniteField {
 public:
  FiniteField(std::int64_t p, int e);

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

  std::int64_t p() const { return p_; }
  int e() const { return e_; }
  std::int64_t q() const { return q_; }

  /// Monic modulus as little-endian coefficients, length e+1.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  const std::vector<std::int64_t>& q1_prime_factors() const { return q1_factors_; }

  FieldElement zero() const { return FieldElement(*this, 0); }
  FieldElement one() const { return FieldElement(*this, 1); }
  FieldElement generator() const { return FieldElement(*this, generator_); }
  std::int64_t generator_encoding() const { return generator_; }

  FieldElement element(std::int64_t encoding) const { return FieldElement(*this, encoding); }
  FieldElement element_from_coeffs(const std::vector<std::int64_t>& coeffs) const;
  FieldElement parse_element(const std::string& text) const;

  // encoding-level arithmetic kernels
  std::int64_t add_enc(std::int64_t a, std::int64_t b) const;
  std::int64_t sub_enc(std::int64_t a, std::int64_t b) const;
  std::int64_t neg_enc(std::int64_t a) const;
  std::int64_t mul_enc(std::int64_t a, std::int64_t b) const;
  std::int64_t inv_enc(std::int64_t a) const;
  /// x^exponent; for x != 0 the exponent is reduced mod q-1, negative
  /// exponents invert. 0^0 = 1, 0^positive = 0, 0^negative throws.
  std::int64_t pow_enc(std::int64_t a, std::int64_t exponent) const;

  /// The r-th roots of unity as powers of generator^((q-1)/r), in
  /// exponent order. Requires r | q-1.
  std::vector<FieldElement> roots_of_unity(std::int64_t r) const;

  /// g^0, ..., g^(k-1): one representative per coset of the subgroup of
  /// k-th powers in F_q^*. Requires k | q-1.
  std::vector<FieldElement> coset_reps(std::int64_t k) const;

  /// Discrete exp/log tables over the generator, built on first use
  /// (thread-safe). Only kept for desk-scale fields; callers go through
  /// ensure_tables() before exp_of/log_of.
  void ensure_tables() const;
  std::int64_t exp_of(std::int64_t index) const { return exp_table_[static_cast<std::size_t>(index)]; }
  std::int64_t log_of(std::int64_t enc) const { return log_table_[static_cast<std::size_t>(enc)]; }

  bool same_field(const FiniteField& other) const { return p_ == other.p_ && e_ == other.e_; }

 private:
  std::vector<std::int64_t> decode(std::int64_t enc) const;
  std::int64_t encode(const std::vector<std::int64_t>& coeffs) const;
  void find_modulus();
  void find_generator();

  std::int64_t p_ = 0;
  int e_ = 0;
  std::int64_t q_ = 0;
  std::vector<std::int64_t> modulus_;
  std::int64_t generator_ = 0;
  std::vector<std::int64_t> q1_factors_;

  mutable std::once_flag table_once_;
  mutable std::vector<std::uint32_t> exp_table_;
  mutable std::vector<std::uint32_t> log_table_;
};

}  // namespace pb
