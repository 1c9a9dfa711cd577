#include "pb/heuristic.hpp"

#include <cmath>
#include <cstdio>

#include "pb/error.hpp"
#include "pb/primes.hpp"

namespace pb {

namespace {

constexpr int kMinRank = 3;
constexpr int kMaxRank = 40;  // e^20 ~ 4.85e8 sieve budget
constexpr double kEulerGamma = 0.57721566490153286;
constexpr double kPerTermSlack = 1e-12;

double weight(int r) {  // r!/r^r, evaluated stably as a product of i/r
  double w = 1;
  for (int i = 1; i <= r; ++i) w *= static_cast<double>(i) / static_cast<double>(r);
  return w;
}

}  // namespace

std::vector<std::uint64_t> F_table(int R) {
  if (R < kMinRank || R > kMaxRank)
    fail(Errc::SieveBudgetExceeded, "rank must lie in [3, 40]");
  std::vector<double> threshold(R + 1, 0.0);
  for (int r = kMinRank; r <= R; ++r) threshold[r] = std::exp(static_cast<double>(r) / 2.0);
  const std::int64_t limit = static_cast<std::int64_t>(threshold[R]);  // q < e^(R/2)

  std::vector<std::uint64_t> F(R + 1, 0);
  int r_lo = kMinRank;
  for_each_prime(limit, [&](std::int64_t p) {
    while (r_lo <= R && static_cast<double>(p) >= threshold[r_lo]) ++r_lo;
    for (int r = r_lo; r <= R; ++r)
      if (p % r == 1) F[r] += static_cast<std::uint64_t>(p);
  });
  // proper prime powers q = p^e, e >= 2
  for (std::int64_t p = 2; p * p <= limit; ++p) {
    if (!is_prime(p)) continue;
    for (std::int64_t q = p * p; ; q *= p) {
      if (static_cast<double>(q) >= threshold[R]) break;
      for (int r = kMinRank; r <= R; ++r)
        if (static_cast<double>(q) < threshold[r] && q % r == 1) F[r] += static_cast<std::uint64_t>(q);
      if (q > limit / p) break;
    }
  }
  return F;
}

std::uint64_t F_exact(int r) { return F_table(r)[r]; }

double tail_summand_bound(int r) {
  if (r < kMinRank) fail(Errc::DomainError, "majorant requires r >= 3");
  const double rd = static_cast<double>(r);
  const double loglog = std::log(std::log(rd));
  const double stirling = std::sqrt(2.0 * M_PI * rd) * std::exp(1.0 / (12.0 * rd));
  const double prime_part =
      (3.0 * std::exp(kEulerGamma) * loglog + 9.0 / loglog) / (rd * (rd / 2.0 - std::log(rd)));
  const double nonprime_part = std::exp(-rd / 4.0) + rd * std::exp(-rd / 3.0) / (2.0 * std::log(2.0));
  return stirling * (prime_part + nonprime_part);
}

HeuristicReport E_bound(int R) {
  HeuristicReport rep;
  rep.R = R;
  rep.f_values = F_table(R);  // validates R

  double partial = 0;
  for (int r = kMinRank; r <= R; ++r)
    partial += weight(r) * static_cast<double>(rep.f_values[r]);
  rep.partial_sum = partial;

  // numeric stretch of the tail
  const std::int64_t numeric_to = 1000000;
  double tail = 0;
  for (std::int64_t r = R + 1; r <= numeric_to; ++r)
    tail += tail_summand_bound(static_cast<int>(r)) + kPerTermSlack;

  // beyond numeric_to: every summand is at most c * loglog r / r^(3/2)
  // plus exponentially small terms, all monotone decreasing, so the sum
  // is bounded by the integral from numeric_to. The loglog integral uses
  //   int_X loglog r / r^(3/2) dr <= 2 loglog X / sqrt(X) + 4/(log X sqrt(X)).
  const double X = static_cast<double>(numeric_to);
  const double llX = std::log(std::log(X));
  const double beta = 0.5 - std::log(X) / X;                    // r/2 - log r >= beta * r
  const double c1 = 3.0 * std::exp(kEulerGamma) + 9.0 / (llX * llX);  // 9/loglog r <= (9/llX^2) loglog r
  const double cD = std::exp(1.0 / (12.0 * X));
  const double c_poly = std::sqrt(2.0 * M_PI) * cD * c1 / beta;
  const double poly_tail = c_poly * (2.0 * llX / std::sqrt(X) + 4.0 / (std::log(X) * std::sqrt(X)));
  // sqrt(r) e^(-r/4) and r^(3/2) e^(-r/3) tails: integral comparison gives
  // (4 sqrt(X) + 8/sqrt(X)) e^(-X/4) style terms; at X = 1e6 these
  // underflow to zero but are kept for smaller budgets.
  const double cC = std::sqrt(X) * std::exp(-X / 12.0);  // r e^(-r/3) <= C sqrt(r) e^(-r/4) for r >= X
  const double exp_tail = std::sqrt(2.0 * M_PI) * cD * (1.0 + cC / (2.0 * std::log(2.0))) *
                          (4.0 * std::sqrt(X) + 8.0 / std::sqrt(X)) * std::exp(-X / 4.0);
  tail += poly_tail + exp_tail;

  rep.tail_bound = tail;
  rep.total_bound = rep.partial_sum + rep.tail_bound;
  return rep;
}

std::string to_json(const HeuristicReport& rep) {
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  std::string out = "{\"R\":" + std::to_string(rep.R) + ",\"f_values\":[";
  for (int r = kMinRank; r <= rep.R; ++r) {
    if (r > kMinRank) out += ",";
    out += "[" + std::to_string(r) + "," + std::to_string(rep.f_values[r]) + "]";
  }
  out += "],\"partial_sum\":" + fmt(rep.partial_sum);
  out += ",\"tail_bound\":" + fmt(rep.tail_bound);
  out += ",\"total_bound\":" + fmt(rep.total_bound);
  out += "}";
  return out;
}

std::string to_csv(const HeuristicReport& rep) {
  std::string out = "r,F,summand\n";
  char buf[64];
  for (int r = kMinRank; r <= rep.R; ++r) {
    std::snprintf(buf, sizeof(buf), "%.17g", weight(r) * static_cast<double>(rep.f_values[r]));
    out += std::to_string(r) + "," + std::to_string(rep.f_values[r]) + "," + buf + "\n";
  }
  return out;
}

}  // namespace pb
