#include "pb/heuristic.hpp"

#include <cmath>
#include <functional>

#include "doctest.h"
#include "pb/error.hpp"
#include "pb/primes.hpp"

using pb::Errc;
using pb::Error;

namespace {

bool throws_code(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code() == code;
  }
  return false;
}

// naive double-loop oracle: sum of prime powers q < e^(r/2) with q = 1 mod r
std::uint64_t f_oracle(int r) {
  const double limit = std::exp(static_cast<double>(r) / 2.0);
  std::uint64_t sum = 0;
  for (std::int64_t q = 2; static_cast<double>(q) < limit; ++q)
    if (pb::is_prime_power(q, nullptr, nullptr) && q % r == 1) sum += static_cast<std::uint64_t>(q);
  return sum;
}

double weight(int r) {
  double w = 1;
  for (int i = 1; i <= r; ++i) w *= static_cast<double>(i) / static_cast<double>(r);
  return w;
}

}  // namespace

TEST_CASE("prime machinery behind the sieve") {
  std::int64_t count = 0;
  pb::for_each_prime(1000000, [&](std::int64_t) { ++count; });
  CHECK(count == 78498);  // pi(10^6)
  CHECK(pb::primes_up_to(10000).size() == 1229);

  std::int64_t p = 0;
  int e = 0;
  CHECK(pb::is_prime_power(343, &p, &e));
  CHECK(p == 7);
  CHECK(e == 3);
  CHECK_FALSE(pb::is_prime_power(1, nullptr, nullptr));
  CHECK_FALSE(pb::is_prime_power(6, nullptr, nullptr));
  CHECK_FALSE(pb::is_prime_power(100, nullptr, nullptr));
  CHECK(pb::is_prime_power(1 << 30, &p, &e));
  CHECK(e == 30);

  auto pps = pb::prime_powers_in(8, 32);
  std::vector<std::int64_t> qs;
  for (const auto& pp : pps) qs.push_back(pp.q);
  CHECK(qs == std::vector<std::int64_t>{8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32});

  CHECK(pb::divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(pb::prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
}

TEST_CASE("F_exact on the first ranks") {
  CHECK(pb::F_exact(3) == 4);    // only q = 4 below e^1.5
  CHECK(pb::F_exact(4) == 5);    // only q = 5 below e^2
  CHECK(pb::F_exact(5) == 11);   // only q = 11 below e^2.5
  CHECK(throws_code(Errc::SieveBudgetExceeded, [] { pb::F_exact(41); }));
  CHECK(throws_code(Errc::SieveBudgetExceeded, [] { pb::F_exact(2); }));
}

TEST_CASE("F_exact matches the naive oracle up to r = 12") {
  auto table = pb::F_table(12);
  for (int r = 3; r <= 12; ++r) CHECK(table[r] == f_oracle(r));
}

TEST_CASE("tail majorant dominates the exact summand") {
  auto table = pb::F_table(25);
  for (int r = 3; r <= 25; ++r)
    CHECK(weight(r) * static_cast<double>(table[r]) <= pb::tail_summand_bound(r));
  CHECK(throws_code(Errc::DomainError, [] { pb::tail_summand_bound(2); }));
}

TEST_CASE("tail majorant decreases beyond r = 10") {
  CHECK(pb::tail_summand_bound(38) == doctest::Approx(0.37).epsilon(0.02));
  for (int r = 10; r < 80; ++r)
    CHECK(pb::tail_summand_bound(r + 1) < pb::tail_summand_bound(r));
}

TEST_CASE("partial sums and report shape") {
  auto rep = pb::E_bound(5);
  const double expected = 6.0 / 27.0 * 4 + 24.0 / 256.0 * 5 + 120.0 / 3125.0 * 11;
  CHECK(rep.partial_sum == doctest::Approx(expected).epsilon(1e-12));
  CHECK(rep.partial_sum == doctest::Approx(1.78004).epsilon(1e-4));
  CHECK(rep.total_bound == rep.partial_sum + rep.tail_bound);
  CHECK(rep.tail_bound > 0);
  CHECK(std::isfinite(rep.total_bound));

  auto rep12 = pb::E_bound(12);
  // moving mass from the bound to exact values only tightens
  CHECK(rep12.total_bound <= rep.total_bound + 1e-6);

  auto json = pb::to_json(rep);
  CHECK(json.find("[3,4]") != std::string::npos);
  CHECK(json.find("\"total_bound\"") != std::string::npos);
  auto csv = pb::to_csv(rep);
  CHECK(csv.rfind("r,F,summand\n", 0) == 0);
  CHECK(csv.find("\n3,4,") != std::string::npos);
}
