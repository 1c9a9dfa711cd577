#include "pb/primes.hpp"

#include <algorithm>
#include <cmath>

#include "pb/error.hpp"

namespace pb {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime_power(std::int64_t q, std::int64_t* p_out, int* e_out) {
  if (q < 2) return false;
  std::int64_t p = q;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::int64_t m = q;
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

void for_each_prime(std::int64_t limit, const std::function<void(std::int64_t)>& fn) {
  if (limit < 2) return;
  const std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit))) + 1;

  // small primes by plain sieve
  std::vector<char> small(root + 1, 1);
  small[0] = small[1] = 0;
  for (std::int64_t i = 2; i * i <= root; ++i)
    if (small[i])
      for (std::int64_t j = i * i; j <= root; j += i) small[j] = 0;
  std::vector<std::int64_t> base;
  for (std::int64_t i = 2; i <= root; ++i)
    if (small[i]) {
      base.push_back(i);
      if (i <= limit) fn(i);
    }

  const std::int64_t segment = 1 << 20;
  std::vector<char> sieve(segment);
  for (std::int64_t low = root + 1; low <= limit; low += segment) {
    const std::int64_t high = std::min(low + segment - 1, limit);
    std::fill(sieve.begin(), sieve.end(), 1);
    for (std::int64_t p : base) {
      std::int64_t start = ((low + p - 1) / p) * p;
      for (std::int64_t j = start; j <= high; j += p) sieve[j - low] = 0;
    }
    for (std::int64_t v = low; v <= high; ++v)
      if (sieve[v - low]) fn(v);
  }
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for_each_prime(limit, [&](std::int64_t p) { out.push_back(p); });
  return out;
}

std::vector<PrimePower> prime_powers_in(std::int64_t lo, std::int64_t hi) {
  std::vector<PrimePower> out;
  if (hi < 2) return out;
  lo = std::max<std::int64_t>(lo, 2);
  for_each_prime(hi, [&](std::int64_t p) {
    if (p >= lo) out.push_back({p, p, 1});
  });
  // proper powers p^e, e >= 2
  for (std::int64_t p = 2; p * p <= hi; ++p) {
    if (!is_prime(p)) continue;
    std::int64_t q = p * p;
    int e = 2;
    while (q <= hi) {
      if (q >= lo) out.push_back({q, p, e});
      if (q > hi / p) break;
      q *= p;
      ++e;
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
  return out;
}

}  // namespace pb
