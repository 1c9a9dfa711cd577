#include "pb/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "pb/error.hpp"
#include "pb/primes.hpp"

namespace pb {

namespace {

double slack_lo(double x) { return x - 1e-9 * (1.0 + std::fabs(x)); }
double slack_hi(double x) { return x + 1e-9 * (1.0 + std::fabs(x)); }

double factorial(std::int64_t n) {
  double f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

bool intro1_inequality(std::int64_t p, std::int64_t m, std::int64_t n) {
  if (n <= 0 || m <= n) fail(Errc::BadExponents, "need m > n > 0");
  const std::int64_t g = std::gcd(m - n, p - 1);
  // g >= sqrt(p - 3/4) - 1/2  <=>  (2g+1)^2 >= 4p - 3
  return (2 * g + 1) * (2 * g + 1) >= 4 * p - 3;
}

bool wt_inequality(std::int64_t p, std::int64_t m, std::int64_t n) {
  if (n <= 0 || m <= n) fail(Errc::BadExponents, "need m > n > 0");
  const std::int64_t g = std::gcd(m - n, p - 1);
  return p - 1 <= (m - 1) * std::max(n, g);
}

bool nr_inequality(std::int64_t q, std::int64_t m, std::int64_t n, std::int64_t p) {
  if (n <= 0 || m <= n) fail(Errc::BadExponents, "need m > n > 0");
  const unsigned __int128 t = static_cast<unsigned __int128>(m - 2);  // m >= 2 here
  if (t * t * t * t + 4 * static_cast<unsigned __int128>(m) >= static_cast<unsigned __int128>(q) + 4)
    return true;  // q <= (m-2)^4 + 4m - 4
  std::int64_t cur = n;
  while (cur < m) cur *= p;  // cur < 2^31 before each multiply
  return cur == m;           // m = n p^i
}

std::int64_t genus(std::int64_t r) {
  if (r < 1) fail(Errc::DomainError, "need r >= 1");
  if (r > 12) fail(Errc::Overflow, "r > 12: r^(r+1) leaves the exact range");
  std::int64_t rr1 = 1;  // r^(r-1)
  for (std::int64_t i = 0; i < r - 1; ++i) rr1 *= r;
  const std::int64_t rr = rr1 * r;        // r^r
  const std::int64_t rr2 = rr * r;        // r^(r+1)
  return (rr2 - 2 * rr - rr1 + 2) / 2;
}

TBounds t_bounds(std::int64_t q, std::int64_t r) {
  if (r < 1 || (q - 1) % r != 0) fail(Errc::NotADivisor, "need r | q-1");
  if (r > 12) fail(Errc::Overflow, "r > 12: r^(r+1) leaves the exact range");
  const double sq = std::sqrt(static_cast<double>(q));
  double rr1 = 1;  // r^(r-1)
  for (std::int64_t i = 0; i < r - 1; ++i) rr1 *= static_cast<double>(r);
  const double rr = rr1 * static_cast<double>(r);
  const double weil = 2.0 * static_cast<double>(genus(r));  // r^(r+1)-2r^r-r^(r-1)+2
  const double rfac = factorial(r);
  const double rfac1 = factorial(r - 1);
  const double qd = static_cast<double>(q);

  TBounds b;
  b.cw_lo = slack_lo(rfac / rr * (qd + 1 - sq * weil - (r + 1) * rr1));
  b.cw_hi = slack_hi(rfac / rr * (qd + 1 + sq * weil));
  const double lo_core = (qd - 2 * sq + 1) / rr1 - (r - 3) * sq - 2;
  const double hi_core = (qd + 2 * sq + 1) / rr1 + (r - 3) * sq;
  b.intro2_lo = slack_lo(rfac1 * lo_core);
  b.intro2_hi = slack_hi(rfac1 * hi_core);
  b.hatT_lower = slack_lo(lo_core);
  return b;
}

Thresholds thresholds(std::int64_t q) {
  if (q <= 2) fail(Errc::DomainError, "log log q undefined at q <= e");
  const double lq = std::log(static_cast<double>(q));
  const double llq = std::log(lq);
  Thresholds t;
  t.cw_gcd_threshold = 2.0 * static_cast<double>(q) * llq / lq;
  t.conj_threshold = static_cast<double>(q) / (2.0 * lq);
  t.r_threshold = lq / (2.0 * llq);
  return t;
}

BoundReport bound_report(std::int64_t q, std::int64_t m, std::int64_t n) {
  if (n <= 0 || m <= n) fail(Errc::BadExponents, "need m > n > 0");
  std::int64_t p = 0;
  int e = 0;
  if (!is_prime_power(q, &p, &e)) fail(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  BoundReport rep;
  rep.q = q;
  rep.p = p;
  rep.e = e;
  rep.m = m;
  rep.n = n;
  rep.g = std::gcd(m - n, q - 1);
  rep.r = (q - 1) / rep.g;
  if (e == 1) {
    rep.intro1 = intro1_inequality(p, m, n);
    rep.wt = wt_inequality(p, m, n);
  }
  rep.nr = nr_inequality(q, m, n, p);
  if (rep.r <= 12) {
    rep.genus = genus(rep.r);
    rep.t_bounds = t_bounds(q, rep.r);
  }
  if (q > 2) rep.thresholds = thresholds(q);
  return rep;
}

std::string to_json(const BoundReport& rep) {
  std::string out = "{";
  out += "\"q\":" + std::to_string(rep.q);
  out += ",\"p\":" + std::to_string(rep.p);
  out += ",\"e\":" + std::to_string(rep.e);
  out += ",\"m\":" + std::to_string(rep.m);
  out += ",\"n\":" + std::to_string(rep.n);
  out += ",\"g\":" + std::to_string(rep.g);
  out += ",\"r\":" + std::to_string(rep.r);
  if (rep.e == 1) {
    out += std::string(",\"intro1\":") + (rep.intro1 ? "true" : "false");
    out += std::string(",\"wt\":") + (rep.wt ? "true" : "false");
  }
  out += std::string(",\"nr\":") + (rep.nr ? "true" : "false");
  if (rep.genus) out += ",\"genus\":" + std::to_string(*rep.genus);
  if (rep.t_bounds) {
    out += ",\"cw\":[" + fmt_double(rep.t_bounds->cw_lo) + "," + fmt_double(rep.t_bounds->cw_hi) + "]";
    out += ",\"intro2\":[" + fmt_double(rep.t_bounds->intro2_lo) + "," + fmt_double(rep.t_bounds->intro2_hi) + "]";
    out += ",\"hatT_lower\":" + fmt_double(rep.t_bounds->hatT_lower);
  }
  out += ",\"cw_gcd_threshold\":" + fmt_double(rep.thresholds.cw_gcd_threshold);
  out += ",\"conj_threshold\":" + fmt_double(rep.thresholds.conj_threshold);
  out += ",\"r_threshold\":" + fmt_double(rep.thresholds.r_threshold);
  out += "}";
  return out;
}

}  // namespace pb
