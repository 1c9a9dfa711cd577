#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pb/field.hpp"

namespace pb {

/// One (q, k, n-class, a-coset) search outcome. Records for one q cover
/// every admissible triple exactly once, ordered k asc, n asc, a_exp asc.
struct ScanRecord {
  std::int64_t q = 0;
  std::int64_t p = 0;
  int e = 0;
  std::int64_t k = 0;      // divisor of q-1
  std::int64_t n = 0;      // canonical class representative, gcd(n, k) = 1
  std::int64_t a_exp = 0;  // coset representative g^a_exp
  std::string a;           // element text form
  bool permutes = false;
  std::int64_t g = 0;      // gcd(k, q-1) = k for canonical records
  std::int64_t r = 0;      // (q-1)/k
};

std::vector<ScanRecord> scan_field(const FiniteField& field);
std::vector<ScanRecord> scan_field(std::int64_t q);

/// All prime powers q in [q_min, q_max], fanned out over a worker pool;
/// output is sorted by q and schedule-independent.
std::vector<ScanRecord> scan_range(std::int64_t q_min, std::int64_t q_max, unsigned jobs = 0);

/// Permuting classes over primes p <= p_max whose gcd class violates the
/// square-root bound (2g+1)^2 >= 4p-3. Proven empty; returned for audit.
std::vector<ScanRecord> verify_intro1(std::int64_t p_max, unsigned jobs = 0);

/// Permuting prime-field classes with g <= p/(c log p). Empty at c = 2
/// for every range checked so far; c is exposed to let callers push the
/// threshold around (and to fault-inject for exit-code tests).
std::vector<ScanRecord> verify_conjecture(std::int64_t p_max, double c = 2.0, unsigned jobs = 0);

enum class ExistenceThreshold {
  LogLog,  // 2q loglog(q)/log(q)
  Log,     // 2q/log(q)
};

struct ExistenceMiss {
  std::int64_t q = 0;
  std::int64_t k = 0;
  std::int64_t n = 0;
};

/// For every prime power q in [4, q_max] and every class (k, n) with
/// k | q-1 above the threshold: asserts some a exists with x^n(x^k + a)
/// a permutation; returns the classes where none was found.
std::vector<ExistenceMiss> verify_existence(std::int64_t q_max,
                                            ExistenceThreshold threshold = ExistenceThreshold::LogLog,
                                            unsigned jobs = 0);

/// For each g in g_values: the primes p <= p_max admitting a permuting
/// class with gcd(k, p-1) = g.
std::map<std::int64_t, std::set<std::int64_t>> corollary_table(const std::vector<std::int64_t>& g_values,
                                                               std::int64_t p_max);

/// The a in F_q (ordered by encoding) such that x^n(x^k + a) permutes F_q
/// for every n with gcd(n, q-1) = 1 and every k with gcd(k, q-1) = (q-1)/r.
std::vector<FieldElement> universal_a_search(const FiniteField& field, std::int64_t r);

enum class RecordFormat { Jsonl, Csv };

/// Deterministic, byte-identical serialization. Each q block is prefixed
/// by a metadata line carrying (p, e, modulus, generator); CSV carries a
/// header row first.
void emit_records(const std::vector<ScanRecord>& records, RecordFormat format, const std::string& path);

std::string render_records(const std::vector<ScanRecord>& records, RecordFormat format);

}  // namespace pb
