#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pb {

/// Upper-bound computation for the expected number of permutation
/// binomials with small gcd class, E = sum over q of sum over divisors
/// r | q-1 with r > 2 log q of q * r!/r^r. Reversing the summation order
/// gives E = sum_r (r!/r^r) F(r) with F(r) the sum of prime powers
/// q < e^(r/2), q = 1 (mod r).
struct HeuristicReport {
  int R = 0;                               // truncation rank
  std::vector<std::uint64_t> f_values;     // f_values[r] = F(r) for 3 <= r <= R
  double partial_sum = 0;                  // sum_{r=3}^{R} (r!/r^r) F(r), exact F
  double tail_bound = 0;                   // rigorous bound on the rest of the series
  double total_bound = 0;                  // partial_sum + tail_bound
};

/// Exact F(r): segmented sieve over primes plus direct enumeration of
/// proper prime powers. Budget: r <= 40 keeps the sieve below ~5e8.
std::uint64_t F_exact(int r);

/// One shared sieve for all of F(3..R); column r of the result is F(r).
std::vector<std::uint64_t> F_table(int R);

/// The displayed majorant of (r!/r^r) F(r):
///   sqrt(2 pi r) e^(1/12r) [ (3 e^gamma loglog r + 9/loglog r)
///                            / (r (r/2 - log r))
///                            + e^(-r/4) + r e^(-r/3)/(2 log 2) ]
/// assembled from Brun-Titchmarsh, the nonprime prime-power count, the
/// Rosser-Schoenfeld totient bound and Stirling. Valid for r >= 3.
double tail_summand_bound(int r);

/// Exact partial sum to R plus a rigorous tail: the majorant summed
/// numerically to r = 1e6, then an integral comparison against the
/// monotone c loglog r / r^(3/2) envelope beyond.
HeuristicReport E_bound(int R);

std::string to_json(const HeuristicReport& report);

/// CSV table "r,F,summand" with summand = (r!/r^r) F(r).
std::string to_csv(const HeuristicReport& report);

}  // namespace pb
