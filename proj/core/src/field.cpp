#include "pb/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pb/primes.hpp"

namespace pb {

namespace {

constexpr std::int64_t kMaxQ = std::int64_t(1) << 31;
constexpr std::int64_t kMaxTableQ = std::int64_t(1) << 26;

using Poly = std::vector<std::int64_t>;  // little-endian, mod p

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  const int dm = degree(m);
  for (int i = degree(a); i >= dm; --i) {
    std::int64_t c = a[i];
    if (c == 0) continue;
    // m is monic
    for (int j = 0; j <= dm; ++j) {
      std::int64_t& t = a[i - dm + j];
      t = (t - c * m[j]) % p;
      if (t < 0) t += p;
    }
  }
  a.resize(dm);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(prod), m, p);
}

Poly poly_powmod(Poly base, std::int64_t exp, const Poly& m, std::int64_t p) {
  Poly result(degree(m), 0);
  result[0] = 1;
  base = poly_mod(std::move(base), m, p);
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    exp >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  auto inv_mod_p = [p](std::int64_t x) {
    std::int64_t r = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  while (degree(b) >= 0) {
    int db = degree(b);
    Poly bm(b.begin(), b.begin() + db + 1);
    std::int64_t lead_inv = inv_mod_p(bm[db]);
    for (auto& c : bm) c = c * lead_inv % p;
    Poly r = poly_mod(std::move(a), bm, p);
    a = std::move(bm);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::int64_t p, int e) {
  // Rabin's test: x^(p^e) == x mod f, and gcd(x^(p^(e/l)) - x, f) = 1
  // for every prime l | e.
  Poly x = {0, 1};
  Poly frob = x;  // x^(p^i) after i steps
  std::vector<Poly> frob_at(e + 1);
  for (int i = 1; i <= e; ++i) {
    frob = poly_powmod(frob, p, f, p);
    frob_at[i] = frob;
  }
  Poly diff = frob_at[e];
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] - 1 + p) % p;
  if (degree(diff) >= 0) return false;  // x^(p^e) != x
  for (std::int64_t ell : prime_factors(e)) {
    Poly d = frob_at[e / ell];
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] - 1 + p) % p;
    if (degree(d) < 0) return false;  // f splits over the subfield
    Poly g = poly_gcd(f, d, p);
    if (degree(g) > 0) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, int e) : p_(p), e_(e) {
  if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (e < 1) fail(Errc::DomainError, "extension degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > kMaxQ / p) fail(Errc::Overflow, "p^e exceeds the 2^31 field-order budget");
    q *= p;
  }
  if (q > kMaxQ) fail(Errc::Overflow, "p^e exceeds the 2^31 field-order budget");
  q_ = q;
  q1_factors_ = prime_factors(q_ - 1);
  find_modulus();
  find_generator();
}

void FiniteField::find_modulus() {
  if (e_ == 1) {
    modulus_ = {0, 1};  // x; F_p[x]/(x) = F_p
    return;
  }
  // smallest non-leading-coefficient encoding sum(c_i p^i) that is
  // irreducible
  for (std::int64_t enc = 0; enc < q_; ++enc) {
    Poly f(e_ + 1, 0);
    std::int64_t v = enc;
    for (int i = 0; i < e_; ++i) {
      f[i] = v % p_;
      v /= p_;
    }
    f[e_] = 1;
    if (is_irreducible(f, p_, e_)) {
      modulus_ = f;
      return;
    }
  }
  fail(Errc::DomainError, "no irreducible modulus found");  // unreachable
}

void FiniteField::find_generator() {
  const std::int64_t order = q_ - 1;
  for (std::int64_t enc = 1; enc < q_; ++enc) {
    bool ok = pow_enc(enc, order) == 1;
    for (std::int64_t ell : q1_factors_) {
      if (!ok) break;
      if (pow_enc(enc, order / ell) == 1) ok = false;
    }
    if (ok) {
      generator_ = enc;
      return;
    }
  }
  fail(Errc::DomainError, "no generator found");  // unreachable
}

std::vector<std::int64_t> FiniteField::decode(std::int64_t enc) const {
  std::vector<std::int64_t> c(e_);
  for (int i = 0; i < e_; ++i) {
    c[i] = enc % p_;
    enc /= p_;
  }
  return c;
}

std::int64_t FiniteField::encode(const std::vector<std::int64_t>& coeffs) const {
  std::int64_t enc = 0;
  for (int i = e_ - 1; i >= 0; --i) enc = enc * p_ + coeffs[i];
  return enc;
}

FieldElement FiniteField::element_from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != e_)
    fail(Errc::DomainError, "coefficient list must have length e");
  std::vector<std::int64_t> c(coeffs);
  for (auto& v : c) {
    v %= p_;
    if (v < 0) v += p_;
  }
  return FieldElement(*this, encode(c));
}

FieldElement FiniteField::parse_element(const std::string& text) const {
  std::vector<std::int64_t> coeffs;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) coeffs.push_back(std::stoll(part));
  if (coeffs.empty()) fail(Errc::DomainError, "empty element text");
  if (coeffs.size() == 1) {
    // single integer: residue for prime fields, encoding otherwise
    std::int64_t v = coeffs[0];
    if (e_ == 1) {
      v %= p_;
      if (v < 0) v += p_;
      return FieldElement(*this, v);
    }
    if (v < 0 || v >= q_) fail(Errc::DomainError, "encoding out of range");
    return FieldElement(*this, v);
  }
  coeffs.resize(e_, 0);
  return element_from_coeffs(coeffs);
}

std::int64_t FiniteField::add_enc(std::int64_t a, std::int64_t b) const {
  if (e_ == 1) {
    std::int64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  std::int64_t res = 0, place = 1;
  for (int i = 0; i < e_; ++i) {
    std::int64_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    res += s * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return res;
}

std::int64_t FiniteField::neg_enc(std::int64_t a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  std::int64_t res = 0, place = 1;
  for (int i = 0; i < e_; ++i) {
    std::int64_t d = a % p_;
    res += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a /= p_;
  }
  return res;
}

std::int64_t FiniteField::sub_enc(std::int64_t a, std::int64_t b) const { return add_enc(a, neg_enc(b)); }

std::int64_t FiniteField::mul_enc(std::int64_t a, std::int64_t b) const {
  if (e_ == 1) return a * b % p_;
  if (a == 0 || b == 0) return 0;
  Poly pa = decode(a), pb = decode(b);
  Poly prod = poly_mulmod(pa, pb, modulus_, p_);
  return encode(prod);
}

std::int64_t FiniteField::pow_enc(std::int64_t a, std::int64_t exponent) const {
  if (a == 0) {
    if (exponent > 0) return 0;
    if (exponent == 0) return 1;
    fail(Errc::DivisionByZero, "0 has no negative powers");
  }
  std::int64_t e = exponent % (q_ - 1);
  if (e < 0) e += q_ - 1;
  std::int64_t result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul_enc(result, base);
    base = mul_enc(base, base);
    e >>= 1;
  }
  return result;
}

std::int64_t FiniteField::inv_enc(std::int64_t a) const {
  if (a == 0) fail(Errc::DivisionByZero, "division by zero");
  return pow_enc(a, q_ - 2);
}

std::vector<FieldElement> FiniteField::roots_of_unity(std::int64_t r) const {
  if (r < 1 || (q_ - 1) % r != 0)
    fail(Errc::NotADivisor, std::to_string(r) + " does not divide q-1 = " + std::to_string(q_ - 1));
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(r));
  const std::int64_t zeta = pow_enc(generator_, (q_ - 1) / r);
  std::int64_t cur = 1;
  for (std::int64_t i = 0; i < r; ++i) {
    out.push_back(FieldElement(*this, cur));
    cur = mul_enc(cur, zeta);
  }
  return out;
}

std::vector<FieldElement> FiniteField::coset_reps(std::int64_t k) const {
  if (k < 1 || (q_ - 1) % k != 0)
    fail(Errc::NotADivisor, std::to_string(k) + " does not divide q-1 = " + std::to_string(q_ - 1));
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(k));
  std::int64_t cur = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    out.push_back(FieldElement(*this, cur));
    cur = mul_enc(cur, generator_);
  }
  return out;
}

void FiniteField::ensure_tables() const {
  std::call_once(table_once_, [this]() {
    if (q_ > kMaxTableQ) fail(Errc::Overflow, "field too large for discrete-log tables");
    exp_table_.resize(static_cast<std::size_t>(q_ - 1));
    log_table_.assign(static_cast<std::size_t>(q_), 0xFFFFFFFFu);
    std::int64_t cur = 1;
    for (std::int64_t i = 0; i < q_ - 1; ++i) {
      exp_table_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(cur);
      log_table_[static_cast<std::size_t>(cur)] = static_cast<std::uint32_t>(i);
      cur = mul_enc(cur, generator_);
    }
    if (cur != 1) fail(Errc::DomainError, "generator order check failed");
  });
}

// ---- FieldElement ----

FieldElement::FieldElement(const FiniteField& field, std::int64_t encoding) : field_(&field), enc_(encoding) {
  if (encoding < 0 || encoding >= field.q()) fail(Errc::DomainError, "element encoding out of range");
}

const FiniteField& FieldElement::field() const {
  if (!field_) fail(Errc::DomainError, "default-constructed element has no field");
  return *field_;
}

std::vector<std::int64_t> FieldElement::coeffs() const {
  const FiniteField& f = field();
  std::vector<std::int64_t> c(f.e());
  std::int64_t v = enc_;
  for (int i = 0; i < f.e(); ++i) {
    c[i] = v % f.p();
    v /= f.p();
  }
  return c;
}

namespace {
const FiniteField& common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_field(b.field())) fail(Errc::FieldMismatch, "elements belong to different fields");
  return a.field();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  const FiniteField& f = common_field(*this, rhs);
  return FieldElement(f, f.add_enc(enc_, rhs.enc_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  const FiniteField& f = common_field(*this, rhs);
  return FieldElement(f, f.sub_enc(enc_, rhs.enc_));
}

FieldElement FieldElement::operator-() const {
  const FiniteField& f = field();
  return FieldElement(f, f.neg_enc(enc_));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  const FiniteField& f = common_field(*this, rhs);
  return FieldElement(f, f.mul_enc(enc_, rhs.enc_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  const FiniteField& f = common_field(*this, rhs);
  return FieldElement(f, f.mul_enc(enc_, f.inv_enc(rhs.enc_)));
}

FieldElement FieldElement::inverse() const {
  const FiniteField& f = field();
  return FieldElement(f, f.inv_enc(enc_));
}

FieldElement FieldElement::pow(std::int64_t exponent) const {
  const FiniteField& f = field();
  return FieldElement(f, f.pow_enc(enc_, exponent));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  common_field(*this, rhs);
  return enc_ == rhs.enc_;
}

std::string FieldElement::to_string() const {
  const FiniteField& f = field();
  if (f.e() == 1) return std::to_string(enc_);
  auto c = coeffs();
  std::string out;
  for (int i = 0; i < f.e(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace pb
