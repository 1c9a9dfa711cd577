#include "pb/field.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "pb/error.hpp"
#include "pb/primes.hpp"

using pb::Errc;
using pb::Error;
using pb::FiniteField;

namespace {

bool throws_code(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code() == code;
  }
  return false;
}

std::vector<std::int64_t> small_prime_powers(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (const auto& pp : pb::prime_powers_in(2, limit)) out.push_back(pp.q);
  return out;
}

}  // namespace

TEST_CASE("construction picks the deterministic generator") {
  FiniteField f7(7, 1);
  CHECK(f7.q() == 7);
  CHECK(f7.generator_encoding() == 3);  // 2 has order 3, 3 has order 6

  FiniteField f2(2, 1);
  CHECK(f2.generator_encoding() == 1);

  FiniteField f343(7, 3);
  CHECK(f343.q() == 343);
  CHECK(f343.generator().pow(342) == f343.one());
  for (std::int64_t ell : f343.q1_prime_factors())
    CHECK(f343.generator().pow(342 / ell) != f343.one());
}

TEST_CASE("construction rejects bad input") {
  CHECK(throws_code(Errc::NotPrime, [] { FiniteField f(6, 1); }));
  CHECK(throws_code(Errc::NotPrime, [] { FiniteField f(1, 1); }));
  CHECK(throws_code(Errc::Overflow, [] { FiniteField f(2, 40); }));
  CHECK(throws_code(Errc::Overflow, [] { FiniteField f(65537, 2); }));
}

TEST_CASE("construction is reproducible") {
  for (auto [p, e] : {std::pair<std::int64_t, int>{5, 2}, {2, 6}, {3, 4}, {101, 1}}) {
    FiniteField a(p, e), b(p, e);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.generator_encoding() == b.generator_encoding());
  }

  // first-irreducible-by-encoding anchors
  CHECK(FiniteField(2, 2).modulus() == std::vector<std::int64_t>{1, 1, 1});     // x^2+x+1
  CHECK(FiniteField(2, 3).modulus() == std::vector<std::int64_t>{1, 1, 0, 1});  // x^3+x+1
  CHECK(FiniteField(3, 2).modulus() == std::vector<std::int64_t>{1, 0, 1});     // x^2+1
  CHECK(FiniteField(5, 2).modulus() == std::vector<std::int64_t>{2, 0, 1});     // x^2+2
  CHECK(FiniteField(7, 3).modulus() == std::vector<std::int64_t>{2, 0, 0, 1});  // x^3+2
}

TEST_CASE("element arithmetic basics") {
  FiniteField f7(7, 1);
  CHECK((f7.element(3) * f7.element(5)) == f7.element(1));
  CHECK(f7.element(3).pow(6) == f7.one());
  CHECK(f7.element(3).pow(-1) == f7.element(5));
  CHECK((f7.element(2) / f7.element(2)) == f7.one());
  CHECK(throws_code(Errc::DivisionByZero, [&] { f7.zero().inverse(); }));
  CHECK(throws_code(Errc::DivisionByZero, [&] { f7.zero().pow(-2); }));

  FiniteField f5(5, 1);
  CHECK(throws_code(Errc::FieldMismatch, [&] { auto x = f7.element(1) + f5.element(1); }));
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (std::int64_t q : small_prime_powers(64)) {
    std::int64_t p = 0;
    int e = 0;
    REQUIRE(pb::is_prime_power(q, &p, &e));
    FiniteField F(p, e);
    bool ok = true;
    for (std::int64_t x = 0; x < q && ok; ++x) {
      ok &= F.add_enc(x, F.neg_enc(x)) == 0;
      if (x != 0) ok &= F.mul_enc(x, F.inv_enc(x)) == 1;
      for (std::int64_t y = 0; y < q && ok; ++y) {
        ok &= F.add_enc(x, y) == F.add_enc(y, x);
        ok &= F.mul_enc(x, y) == F.mul_enc(y, x);
        for (std::int64_t z = 0; z < q; ++z) {
          ok &= F.add_enc(F.add_enc(x, y), z) == F.add_enc(x, F.add_enc(y, z));
          ok &= F.mul_enc(F.mul_enc(x, y), z) == F.mul_enc(x, F.mul_enc(y, z));
          ok &= F.mul_enc(F.add_enc(x, y), z) == F.add_enc(F.mul_enc(x, z), F.mul_enc(y, z));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("roots of unity enumerate the subgroup in exponent order") {
  FiniteField f7(7, 1);
  auto all = f7.roots_of_unity(6);
  std::vector<std::int64_t> encs;
  for (const auto& z : all) encs.push_back(z.encoding());
  CHECK(encs == std::vector<std::int64_t>{1, 3, 2, 6, 4, 5});

  auto mu2 = f7.roots_of_unity(2);
  CHECK(mu2.size() == 2);
  CHECK(mu2[0].encoding() == 1);
  CHECK(mu2[1].encoding() == 6);

  CHECK(f7.roots_of_unity(1).size() == 1);
  CHECK(throws_code(Errc::NotADivisor, [&] { f7.roots_of_unity(4); }));
}

TEST_CASE("roots of unity satisfy zeta^r = 1 with r distinct values") {
  for (std::int64_t q : small_prime_powers(81)) {
    std::int64_t p = 0;
    int e = 0;
    pb::is_prime_power(q, &p, &e);
    FiniteField F(p, e);
    for (std::int64_t r : pb::divisors(q - 1)) {
      auto mu = F.roots_of_unity(r);
      CHECK(static_cast<std::int64_t>(mu.size()) == r);
      std::set<std::int64_t> distinct;
      for (const auto& z : mu) {
        CHECK(z.pow(r) == F.one());
        distinct.insert(z.encoding());
      }
      CHECK(static_cast<std::int64_t>(distinct.size()) == r);
    }
  }
}

TEST_CASE("coset representatives are pairwise in distinct cosets") {
  FiniteField f7(7, 1);
  auto reps3 = f7.coset_reps(3);
  std::vector<std::int64_t> encs;
  for (const auto& x : reps3) encs.push_back(x.encoding());
  CHECK(encs == std::vector<std::int64_t>{1, 3, 2});
  CHECK(f7.coset_reps(1).size() == 1);
  encs.clear();
  for (const auto& x : f7.coset_reps(6)) encs.push_back(x.encoding());
  CHECK(encs == std::vector<std::int64_t>{1, 3, 2, 6, 4, 5});  // all of F_7* in generator order
  CHECK(throws_code(Errc::NotADivisor, [&] { f7.coset_reps(5); }));

  for (std::int64_t q : small_prime_powers(49)) {
    std::int64_t p = 0;
    int e = 0;
    pb::is_prime_power(q, &p, &e);
    FiniteField F(p, e);
    for (std::int64_t k : pb::divisors(q - 1)) {
      auto reps = F.coset_reps(k);
      // x/y is a k-th power iff (x/y)^((q-1)/k) = 1
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
          bool same_coset = (reps[i] / reps[j]).pow((q - 1) / std::gcd(k, q - 1)) == F.one();
          CHECK(same_coset == (i == j));
        }
    }
  }
}

TEST_CASE("element text round-trips") {
  FiniteField f343(7, 3);
  auto a = f343.element(3);
  CHECK(a.to_string() == "3,0,0");
  CHECK(f343.parse_element("3,0,0") == a);
  CHECK(f343.parse_element("3") == a);

  FiniteField f139(139, 1);
  CHECK(f139.element(17).to_string() == "17");
  CHECK(f139.parse_element("-1") == f139.element(138));
}

TEST_CASE("discrete log tables agree with slow arithmetic") {
  for (std::int64_t q : {std::int64_t(64), std::int64_t(81), std::int64_t(101)}) {
    std::int64_t p = 0;
    int e = 0;
    pb::is_prime_power(q, &p, &e);
    FiniteField F(p, e);
    F.ensure_tables();
    std::int64_t cur = 1;
    for (std::int64_t i = 0; i < q - 1; ++i) {
      CHECK(F.exp_of(i) == cur);
      CHECK(F.log_of(cur) == i);
      cur = F.mul_enc(cur, F.generator_encoding());
    }
  }
}
