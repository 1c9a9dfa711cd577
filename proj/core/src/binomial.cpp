#include "pb/binomial.hpp"

#include <numeric>

#include "pb/error.hpp"

namespace pb {

CanonicalizeResult canonicalize(std::int64_t q, std::int64_t m, std::int64_t n) {
  if (n <= 0 || m <= n) fail(Errc::BadExponents, "need m > n > 0");
  const std::int64_t q1 = q - 1;
  if (std::gcd(std::gcd(m, n), q1) > 1) return Obstruction::GcdFails;

  const std::int64_t diff = (m - n) % q1;
  const std::int64_t k = std::gcd(diff, q1);  // gcd(0, q1) = q1
  const std::int64_t r = q1 / k;

  // smallest positive j with j*(m-n) = k (mod q-1) and gcd(j, q-1) = 1
  std::int64_t j = 0;
  for (std::int64_t cand = 1; cand <= q1; ++cand) {
    if (cand * diff % q1 == k % q1 && std::gcd(cand, q1) == 1) {
      j = cand;
      break;
    }
  }
  if (j == 0) return Obstruction::NoCoprimeRepresentative;  // cannot happen for k | q-1

  // smallest positive representative of the class n*j mod r coprime to k
  std::int64_t cls = n % q1 * (j % q1) % r;
  std::int64_t rep = cls == 0 ? r : cls;
  for (std::int64_t t = 0; t <= k; ++t, rep += r) {
    if (std::gcd(rep, k) == 1) return CanonicalBinomial{q, rep, k, r, j};
  }
  return Obstruction::NoCoprimeRepresentative;
}

bool is_permutation_naive(const FiniteField& field, const Binomial& b) {
  if (!b.a.field().same_field(field)) fail(Errc::FieldMismatch, "binomial coefficient from a different field");
  if (b.n <= 0 || b.m <= b.n) fail(Errc::BadExponents, "need m > n > 0");
  const std::int64_t q = field.q();
  const std::int64_t a = b.a.encoding();
  std::vector<std::uint64_t> seen((q + 63) / 64, 0);
  for (std::int64_t x = 0; x < q; ++x) {
    std::int64_t v = field.add_enc(field.pow_enc(x, b.m), field.mul_enc(a, field.pow_enc(x, b.n)));
    std::uint64_t& word = seen[static_cast<std::size_t>(v >> 6)];
    const std::uint64_t bit = std::uint64_t(1) << (v & 63);
    if (word & bit) return false;
    word |= bit;
  }
  return true;
}

bool is_permutation_reduced(const FiniteField& field, const CanonicalBinomial& c, const FieldElement& a) {
  if (a.is_zero()) fail(Errc::ZeroCoefficient, "reduced test requires a != 0");
  if (!a.field().same_field(field) || c.q != field.q()) fail(Errc::FieldMismatch, "canonical form/field mismatch");
  ClassScanner scanner(field);
  return scanner.permutes_enc(c.k, c.n, a.encoding());
}

ClassScanner::ClassScanner(const FiniteField& field) : field_(field) {
  field_.ensure_tables();
  stamp_.assign(static_cast<std::size_t>(field_.q()), 0);
}

bool ClassScanner::permutes(std::int64_t k, std::int64_t n, std::int64_t a_exp) {
  return permutes_enc(k, n, field_.exp_of(a_exp));
}

bool ClassScanner::permutes_enc(std::int64_t k, std::int64_t n, std::int64_t a_enc) {
  const std::int64_t q1 = field_.q() - 1;
  const std::int64_t r = q1 / k;
  // g maps mu_r into mu_r iff (-a)^r != 1, i.e. iff k does not divide
  // log(-a); otherwise some z + a vanishes and f has a repeated root.
  const std::int64_t log_neg_a = field_.log_of(field_.neg_enc(a_enc));
  if (log_neg_a % k == 0) return false;
  const std::int64_t n_r = n % r;
  ++current_;
  for (std::int64_t t = 0; t < r; ++t) {
    const std::int64_t zeta = field_.exp_of(k * t);
    const std::int64_t lu = field_.log_of(field_.add_enc(zeta, a_enc));
    // log g(zeta) = n*k*t + k*lu = k*((n*t + lu) mod r): always in mu_r
    const std::int64_t slot = (n_r * t + lu) % r;
    auto& cell = stamp_[static_cast<std::size_t>(slot)];
    if (cell == current_) return false;
    cell = current_;
  }
  return true;
}

std::vector<std::int64_t> n_class_reps(std::int64_t k, std::int64_t r) {
  const std::int64_t d = std::gcd(k, r);
  std::vector<std::int64_t> reps;
  for (std::int64_t cls = 0; cls < r; ++cls) {
    if (std::gcd(cls, d) != 1) continue;  // gcd(0, d) = d, so class 0 needs d = 1
    std::int64_t rep = cls == 0 ? r : cls;
    for (std::int64_t t = 0; t <= k; ++t, rep += r) {
      if (std::gcd(rep, k) == 1) {
        reps.push_back(rep);
        break;
      }
    }
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::int64_t count_T(const FiniteField& field, std::int64_t m, std::int64_t n) {
  if (n <= 0 || m <= n) fail(Errc::BadExponents, "need m > n > 0");
  const std::int64_t q1 = field.q() - 1;
  std::int64_t total = std::gcd(m, q1) == 1 ? 1 : 0;  // a = 0: x^m
  auto reduced = canonicalize(field.q(), m, n);
  if (std::holds_alternative<Obstruction>(reduced)) return total;
  const auto& c = std::get<CanonicalBinomial>(reduced);
  ClassScanner scanner(field);
  std::int64_t permuting_reps = 0;
  for (std::int64_t a_exp = 0; a_exp < c.k; ++a_exp)
    if (scanner.permutes(c.k, c.n, a_exp)) ++permuting_reps;
  return total + c.r * permuting_reps;
}

std::int64_t count_T_naive(const FiniteField& field, std::int64_t m, std::int64_t n) {
  if (n <= 0 || m <= n) fail(Errc::BadExponents, "need m > n > 0");
  std::int64_t total = std::gcd(m, field.q() - 1) == 1 ? 1 : 0;
  for (std::int64_t a = 1; a < field.q(); ++a)
    if (is_permutation_naive(field, Binomial{m, n, field.element(a)})) ++total;
  return total;
}

bool mathieu_check(const FiniteField& field, int i, const FieldElement& a) {
  if (!a.field().same_field(field)) fail(Errc::FieldMismatch, "element from a different field");
  if (i < 1) fail(Errc::DomainError, "need i >= 1");
  std::int64_t s = 1;
  for (int t = 0; t < i; ++t) {
    s *= field.p();
    if (s > field.q()) fail(Errc::DomainError, "p^i exceeds q");
  }
  s -= 1;  // a must not be a (p^i - 1)-th power
  if (a.is_zero()) return false;  // 0 = 0^s is always a power
  const std::int64_t q1 = field.q() - 1;
  const std::int64_t d = std::gcd(s, q1);
  return field.pow_enc(a.encoding(), q1 / d) != 1;
}

}  // namespace pb
