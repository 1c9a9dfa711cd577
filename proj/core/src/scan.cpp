#include "pb/scan.hpp"

#include <cmath>
#include <fstream>
#include <numeric>

#include "pb/binomial.hpp"
#include "pb/error.hpp"
#include "pb/parallel.hpp"
#include "pb/primes.hpp"

namespace pb {

namespace {

ScanRecord make_record(const FiniteField& F, std::int64_t k, std::int64_t n, std::int64_t a_exp,
                       bool permutes) {
  ScanRecord rec;
  rec.q = F.q();
  rec.p = F.p();
  rec.e = F.e();
  rec.k = k;
  rec.n = n;
  rec.a_exp = a_exp;
  rec.a = F.element(F.exp_of(a_exp)).to_string();
  rec.permutes = permutes;
  rec.g = k;
  rec.r = (F.q() - 1) / k;
  return rec;
}

}  // namespace

std::vector<ScanRecord> scan_field(const FiniteField& F) {
  ClassScanner scanner(F);
  std::vector<ScanRecord> out;
  for (std::int64_t k : divisors(F.q() - 1)) {
    const std::int64_t r = (F.q() - 1) / k;
    for (std::int64_t n : n_class_reps(k, r))
      for (std::int64_t a_exp = 0; a_exp < k; ++a_exp)
        out.push_back(make_record(F, k, n, a_exp, scanner.permutes(k, n, a_exp)));
  }
  return out;
}

std::vector<ScanRecord> scan_field(std::int64_t q) {
  std::int64_t p = 0;
  int e = 0;
  if (!is_prime_power(q, &p, &e)) fail(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  FiniteField F(p, e);
  return scan_field(F);
}

std::vector<ScanRecord> scan_range(std::int64_t q_min, std::int64_t q_max, unsigned jobs) {
  const auto qs = prime_powers_in(q_min, q_max);
  std::vector<std::vector<ScanRecord>> slots(qs.size());
  parallel_for(qs.size(), jobs, [&](std::size_t i) {
    FiniteField F(qs[i].p, qs[i].e);
    slots[i] = scan_field(F);
  });
  std::vector<ScanRecord> out;
  for (auto& slot : slots) out.insert(out.end(), slot.begin(), slot.end());
  return out;
}

namespace {

/// Shared engine for the verify campaigns: collects permuting classes
/// with k <= k_limit(p) over all primes p <= p_max.
std::vector<ScanRecord> collect_small_gcd_classes(std::int64_t p_max,
                                                  const std::function<std::int64_t(std::int64_t)>& k_limit,
                                                  unsigned jobs) {
  const auto primes = primes_up_to(p_max);
  std::vector<std::vector<ScanRecord>> slots(primes.size());
  parallel_for(primes.size(), jobs, [&](std::size_t i) {
    const std::int64_t p = primes[i];
    const std::int64_t limit = k_limit(p);
    if (limit < 1) return;
    FiniteField F(p, 1);
    ClassScanner scanner(F);
    for (std::int64_t k : divisors(p - 1)) {
      if (k > limit) continue;
      const std::int64_t r = (p - 1) / k;
      for (std::int64_t n : n_class_reps(k, r))
        for (std::int64_t a_exp = 0; a_exp < k; ++a_exp)
          if (scanner.permutes(k, n, a_exp))
            slots[i].push_back(make_record(F, k, n, a_exp, true));
    }
  });
  std::vector<ScanRecord> out;
  for (auto& slot : slots) out.insert(out.end(), slot.begin(), slot.end());
  return out;
}

}  // namespace

std::vector<ScanRecord> verify_intro1(std::int64_t p_max, unsigned jobs) {
  return collect_small_gcd_classes(
      p_max,
      [](std::int64_t p) {
        // largest g with (2g+1)^2 < 4p-3
        std::int64_t g = 0;
        while ((2 * (g + 1) + 1) * (2 * (g + 1) + 1) < 4 * p - 3) ++g;
        return g;
      },
      jobs);
}

std::vector<ScanRecord> verify_conjecture(std::int64_t p_max, double c, unsigned jobs) {
  return collect_small_gcd_classes(
      p_max,
      [c](std::int64_t p) {
        if (p <= 2) return std::int64_t(0);
        return static_cast<std::int64_t>(std::floor(static_cast<double>(p) / (c * std::log(static_cast<double>(p)))));
      },
      jobs);
}

std::vector<ExistenceMiss> verify_existence(std::int64_t q_max, ExistenceThreshold threshold, unsigned jobs) {
  const auto qs = prime_powers_in(4, q_max);
  std::vector<std::vector<ExistenceMiss>> slots(qs.size());
  parallel_for(qs.size(), jobs, [&](std::size_t i) {
    const std::int64_t q = qs[i].q;
    const double lq = std::log(static_cast<double>(q));
    const double bound =
        threshold == ExistenceThreshold::LogLog ? 2.0 * static_cast<double>(q) * std::log(lq) / lq
                                                : 2.0 * static_cast<double>(q) / lq;
    FiniteField F(qs[i].p, qs[i].e);
    ClassScanner scanner(F);
    for (std::int64_t k : divisors(q - 1)) {
      if (static_cast<double>(k) <= bound) continue;
      const std::int64_t r = (q - 1) / k;
      for (std::int64_t n : n_class_reps(k, r)) {
        bool found = false;
        for (std::int64_t a_exp = 0; a_exp < k && !found; ++a_exp)
          found = scanner.permutes(k, n, a_exp);
        if (!found) slots[i].push_back({q, k, n});
      }
    }
  });
  std::vector<ExistenceMiss> out;
  for (auto& slot : slots) out.insert(out.end(), slot.begin(), slot.end());
  return out;
}

std::map<std::int64_t, std::set<std::int64_t>> corollary_table(const std::vector<std::int64_t>& g_values,
                                                               std::int64_t p_max) {
  std::map<std::int64_t, std::set<std::int64_t>> table;
  for (std::int64_t g : g_values) table[g] = {};
  for (std::int64_t p : primes_up_to(p_max)) {
    FiniteField F(p, 1);
    ClassScanner scanner(F);
    for (std::int64_t g : g_values) {
      if (g < 1 || (p - 1) % g != 0) continue;
      const std::int64_t r = (p - 1) / g;
      bool found = false;
      for (std::int64_t n : n_class_reps(g, r)) {
        for (std::int64_t a_exp = 0; a_exp < g && !found; ++a_exp)
          found = scanner.permutes(g, n, a_exp);
        if (found) break;
      }
      if (found) table[g].insert(p);
    }
  }
  return table;
}

std::vector<FieldElement> universal_a_search(const FiniteField& F, std::int64_t r) {
  const std::int64_t q1 = F.q() - 1;
  if (r < 1 || q1 % r != 0) fail(Errc::NotADivisor, std::to_string(r) + " does not divide q-1");
  const std::int64_t k0 = q1 / r;

  // n-class units mod r: every class of an n coprime to q-1 is a unit
  // class mod r, and conversely every unit class contains such n.
  // gcd(0, 1) = 1, so r = 1 contributes the single class 0.
  std::vector<std::int64_t> unit_classes;
  for (std::int64_t c = 0; c < r; ++c)
    if (std::gcd(c, r) == 1) unit_classes.push_back(c);
  // the k with gcd(k, q-1) = (q-1)/r, reduced mod q-1: k0*t, gcd(t, r) = 1
  std::vector<std::int64_t> ks;
  for (std::int64_t t = 1; t <= r; ++t)
    if (std::gcd(t, r) == 1) ks.push_back(k0 * t);
  // n mod q-1 coprime to q-1, for the a = 0 monomial check
  std::vector<std::int64_t> unit_ns;
  for (std::int64_t n = 1; n <= q1; ++n)
    if (std::gcd(n, q1) == 1) unit_ns.push_back(n);

  std::vector<FieldElement> out;

  bool zero_ok = true;
  for (std::size_t i = 0; i < unit_ns.size() && zero_ok; ++i)
    for (std::int64_t k : ks)
      if (std::gcd(unit_ns[i] + k, q1) != 1) {
        zero_ok = false;
        break;
      }
  if (zero_ok) out.push_back(F.zero());

  // For a != 0 the verdict for (n, k = k0 t) equals the canonical verdict
  // with exponent class n * t^(-1) mod r; as t runs over the units the
  // set of classes to test is just the units mod r again.
  ClassScanner scanner(F);
  std::vector<char> coset_ok(static_cast<std::size_t>(k0), 1);
  for (std::int64_t a_exp = 0; a_exp < k0; ++a_exp)
    for (std::int64_t c : unit_classes)
      if (!scanner.permutes(k0, c, a_exp)) { coset_ok[static_cast<std::size_t>(a_exp)] = 0; break; }

  std::vector<std::int64_t> encs;
  for (std::int64_t a_exp = 0; a_exp < k0; ++a_exp) {
    if (!coset_ok[static_cast<std::size_t>(a_exp)]) continue;
    // whole coset a_exp + k0*Z qualifies
    for (std::int64_t idx = a_exp; idx < q1; idx += k0) encs.push_back(F.exp_of(idx));
  }
  std::sort(encs.begin(), encs.end());
  for (std::int64_t enc : encs) out.push_back(F.element(enc));
  return out;
}

// ---- serialization ----

namespace {

std::string field_meta_jsonl(std::int64_t p, int e) {
  FiniteField F(p, e);
  std::string out = "{\"meta\":{\"q\":" + std::to_string(F.q()) + ",\"p\":" + std::to_string(p) +
                    ",\"e\":" + std::to_string(e) + ",\"modulus\":[";
  for (int i = 0; i <= e; ++i) {
    if (i) out += ",";
    out += std::to_string(F.modulus()[static_cast<std::size_t>(i)]);
  }
  out += "],\"generator\":\"" + F.generator().to_string() + "\"}}";
  return out;
}

std::string field_meta_csv(std::int64_t p, int e) {
  FiniteField F(p, e);
  std::string out = "# q=" + std::to_string(F.q()) + " p=" + std::to_string(p) + " e=" + std::to_string(e) +
                    " modulus=";
  for (int i = 0; i <= e; ++i) {
    if (i) out += ",";
    out += std::to_string(F.modulus()[static_cast<std::size_t>(i)]);
  }
  out += " generator=" + F.generator().to_string();
  return out;
}

}  // namespace

std::string render_records(const std::vector<ScanRecord>& records, RecordFormat format) {
  std::string out;
  if (format == RecordFormat::Csv) out += "q,p,e,k,n,a,permutes,g,r\n";
  std::int64_t current_q = -1;
  for (const ScanRecord& rec : records) {
    if (rec.q != current_q) {
      current_q = rec.q;
      out += (format == RecordFormat::Jsonl ? field_meta_jsonl(rec.p, rec.e) : field_meta_csv(rec.p, rec.e));
      out += "\n";
    }
    if (format == RecordFormat::Jsonl) {
      out += "{\"q\":" + std::to_string(rec.q) + ",\"p\":" + std::to_string(rec.p) +
             ",\"e\":" + std::to_string(rec.e) + ",\"k\":" + std::to_string(rec.k) +
             ",\"n\":" + std::to_string(rec.n) + ",\"a\":\"" + rec.a + "\"" +
             ",\"permutes\":" + (rec.permutes ? "true" : "false") + ",\"g\":" + std::to_string(rec.g) +
             ",\"r\":" + std::to_string(rec.r) + "}\n";
    } else {
      out += std::to_string(rec.q) + "," + std::to_string(rec.p) + "," + std::to_string(rec.e) + "," +
             std::to_string(rec.k) + "," + std::to_string(rec.n) + ",\"" + rec.a + "\"," +
             (rec.permutes ? "true" : "false") + "," + std::to_string(rec.g) + "," + std::to_string(rec.r) +
             "\n";
    }
  }
  return out;
}

void emit_records(const std::vector<ScanRecord>& records, RecordFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoError, "cannot open " + path);
  out << render_records(records, format);
  if (!out) fail(Errc::IoError, "write failed for " + path);
}

}  // namespace pb
