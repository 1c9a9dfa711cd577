#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace pb {

bool is_prime(std::int64_t n);

/// Distinct prime factors in increasing order (trial division; desk scale).
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// True iff q = p^e with p prime, e >= 1; outputs the decomposition.
bool is_prime_power(std::int64_t q, std::int64_t* p_out, int* e_out);

/// Calls fn(p) for every prime p <= limit, in increasing order.
/// Segmented sieve; limit up to ~5e8 stays within a few hundred MB-free.
void for_each_prime(std::int64_t limit, const std::function<void(std::int64_t)>& fn);

std::vector<std::int64_t> primes_up_to(std::int64_t limit);

struct PrimePower {
  std::int64_t q;
  std::int64_t p;
  int e;
};

/// All prime powers q with lo <= q <= hi, ordered by q.
std::vector<PrimePower> prime_powers_in(std::int64_t lo, std::int64_t hi);

}  // namespace pb
