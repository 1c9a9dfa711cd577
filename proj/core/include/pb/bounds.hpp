#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace pb {

/// Weil-derived interval bounds for the exact permutation count T at a
/// given (q, r). All values carry a 1e-9 outward slack so double rounding
/// never produces a false violation.
struct TBounds {
  double cw_lo = 0;        // (r!/r^r)(q+1 - sqrt(q)W - (r+1)r^(r-1)), W = r^(r+1)-2r^r-r^(r-1)+2
  double cw_hi = 0;        // (r!/r^r)(q+1 + sqrt(q)W)
  double intro2_lo = 0;    // (r-1)! * ((q-2sqrt(q)+1)/r^(r-1) - (r-3)sqrt(q) - 2)
  double intro2_hi = 0;    // (r-1)! * ((q+2sqrt(q)+1)/r^(r-1) + (r-3)sqrt(q))
  double hatT_lower = 0;   // lower bound for the universal-a count
};

struct Thresholds {
  double cw_gcd_threshold = 0;  // 2q log log q / log q
  double conj_threshold = 0;    // q / (2 log q)
  double r_threshold = 0;       // log q / (2 log log q)
};

struct BoundReport {
  std::int64_t q = 0, p = 0;
  int e = 0;
  std::int64_t m = 0, n = 0;
  std::int64_t g = 0, r = 0;          // g = gcd(m-n, q-1), r = (q-1)/g
  bool intro1 = false;                // prime fields only
  bool wt = false;                    // prime fields only
  bool nr = false;
  std::optional<std::int64_t> genus;  // present when r <= 12
  std::optional<TBounds> t_bounds;    // present when r <= 12
  Thresholds thresholds;
};

/// gcd(m-n, p-1) >= sqrt(p - 3/4) - 1/2, decided exactly via the integer
/// form (2g+1)^2 >= 4p - 3. Every permutation binomial over F_p obeys it.
bool intro1_inequality(std::int64_t p, std::int64_t m, std::int64_t n);

/// p - 1 <= (m-1) * max(n, gcd(m-n, p-1)); exact integers.
bool wt_inequality(std::int64_t p, std::int64_t m, std::int64_t n);

/// q <= (m-2)^4 + 4m - 4, or m = n*p^i for some i >= 0.
bool nr_inequality(std::int64_t q, std::int64_t m, std::int64_t n, std::int64_t p);

/// Exact genus (r^(r+1) - 2r^r - r^(r-1) + 2)/2 of the auxiliary function
/// field; rejects r > 12 where the power leaves the float-exact range.
std::int64_t genus(std::int64_t r);

TBounds t_bounds(std::int64_t q, std::int64_t r);

Thresholds thresholds(std::int64_t q);

BoundReport bound_report(std::int64_t q, std::int64_t m, std::int64_t n);

std::string to_json(const BoundReport& report);

}  // namespace pb
