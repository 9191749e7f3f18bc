#pragma once

// Exhaustive search for nontrivial rational solutions of a^k - b^k = a - b
// with bounded common denominator.
//
// Write a = p/q, b = r/q with gcd(p, r, q) = 1 and p > r. Cancelling a - b
// leaves the integer condition
//
//     sum_{i=0}^{k-1} p^i r^(k-1-i) = q^(k-1).
//
// For positive solutions a > b > 0 we have a^(k-1) < sum a^i b^(k-1-i) = 1,
// so 0 <= r < p < q covers every one of them. Swapping a and b preserves the
// equation, so only a > b is reported.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "dioph/rational.hpp"
#include "dioph/solvers.hpp"

namespace dioph {

struct SearchOptions {
  // Also enumerate sign-mixed and negative pairs with |p|, |r| <= height * q.
  bool include_negative = false;
  std::uint64_t height = 2;
  unsigned jobs = 1;
};

struct SearchReport {
  int k = 2;
  std::uint64_t min_den = 1;
  std::uint64_t max_den = 1;
  std::vector<Solution> solutions;
  std::uint64_t pairs_examined = 0;
  std::chrono::duration<double, std::milli> elapsed{0};
};

/// Common denominator q of (a, b) and the numerators p = a q, r = b q.
inline std::tuple<Integer, Integer, Integer> denominator_key(const Solution& s) {
  Integer q;
  mpz_lcm(q.get_mpz_t(), s.a.denominator().get_mpz_t(), s.b.denominator().get_mpz_t());
  Integer p = s.a.numerator() * (q / s.a.denominator());
  Integer r = s.b.numerator() * (q / s.b.denominator());
  return {q, p, r};
}

inline void sort_solutions(std::vector<Solution>& sols) {
  std::sort(sols.begin(), sols.end(), [](const Solution& x, const Solution& y) {
    return denominator_key(x) < denominator_key(y);
  });
}

/// Concatenate reports over disjoint ranges into one, sorted by (q, p, r).
inline SearchReport merge(const std::vector<SearchReport>& parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to merge");
  SearchReport out;
  out.k = parts.front().k;
  out.min_den = parts.front().min_den;
  out.max_den = parts.front().max_den;
  for (const auto& part : parts) {
    if (part.k != out.k) throw std::invalid_argument("cannot merge reports for different k");
    out.min_den = std::min(out.min_den, part.min_den);
    out.max_den = std::max(out.max_den, part.max_den);
    out.solutions.insert(out.solutions.end(), part.solutions.begin(), part.solutions.end());
    out.pairs_examined += part.pairs_examined;
    out.elapsed += part.elapsed;
  }
  sort_solutions(out.solutions);
  return out;
}

namespace detail {

// True iff k * q_hi^(k-1) < 2^64, so every partial Horner sum fits a word.
inline bool fits_word(int k, std::uint64_t q_hi) {
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), q_hi, static_cast<unsigned long>(k - 1));
  bound *= k;
  return mpz_sizeinbase(bound.get_mpz_t(), 2) <= 63;
}

// sum_{i} p^i r^(k-1-i) by Horner in p: S_0 = 1, S_j = S_{j-1} p + r^j.
inline std::uint64_t homogeneous_sum(int k, std::uint64_t p, std::uint64_t r) {
  std::uint64_t s = 1;
  std::uint64_t rj = 1;
  for (int j = 1; j < k; ++j) {
    rj *= r;
    s = s * p + rj;
  }
  return s;
}

inline Integer homogeneous_sum(int k, const Integer& p, const Integer& r) {
  Integer s = 1;
  Integer rj = 1;
  for (int j = 1; j < k; ++j) {
    rj *= r;
    s = s * p + rj;
  }
  return s;
}

inline std::uint64_t word_pow(std::uint64_t base, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

inline void record_hit(SearchReport& rep, std::int64_t p, std::int64_t r, std::uint64_t q) {
  Rational a = Rational::normalize(Integer(static_cast<long>(p)), Integer(static_cast<unsigned long>(q)));
  Rational b = Rational::normalize(Integer(static_cast<long>(r)), Integer(static_cast<unsigned long>(q)));
  SolutionKind kind = classify(a, b);
  if (kind != SolutionKind::nontrivial) return;
  rep.solutions.push_back(Solution{std::move(a), std::move(b), rep.k, kind});
}

// Positive pairs 0 <= r < p < q for a single denominator q.
inline void scan_positive(SearchReport& rep, std::uint64_t q, bool word) {
  const int k = rep.k;
  if (word) {
    const std::uint64_t target = word_pow(q, k - 1);
    for (std::uint64_t p = 1; p < q; ++p) {
      const std::uint64_t gpq = std::gcd(p, q);
      for (std::uint64_t r = 0; r < p; ++r) {
        if (gpq != 1 && std::gcd(gpq, r) != 1) continue;
        ++rep.pairs_examined;
        const std::uint64_t s = homogeneous_sum(k, p, r);
        if (s == target) record_hit(rep, static_cast<std::int64_t>(p), static_cast<std::int64_t>(r), q);
        // s increases with r for fixed p.
        if (s >= target) break;
      }
    }
    return;
  }
  Integer target;
  mpz_ui_pow_ui(target.get_mpz_t(), q, static_cast<unsigned long>(k - 1));
  for (std::uint64_t p = 1; p < q; ++p) {
    const std::uint64_t gpq = std::gcd(p, q);
    const Integer pz(static_cast<unsigned long>(p));
    for (std::uint64_t r = 0; r < p; ++r) {
      if (gpq != 1 && std::gcd(gpq, r) != 1) continue;
      ++rep.pairs_examined;
      const Integer s = homogeneous_sum(k, pz, Integer(static_cast<unsigned long>(r)));
      const int c = cmp(s, target);
      if (c == 0) record_hit(rep, static_cast<std::int64_t>(p), static_cast<std::int64_t>(r), q);
      if (c >= 0) break;
    }
  }
}

// Every pair -H q <= r < p <= H q; always on big integers.
inline void scan_signed(SearchReport& rep, std::uint64_t q, std::uint64_t height) {
  const auto bound = static_cast<std::int64_t>(height * q);
  const auto qs = static_cast<std::int64_t>(q);
  Integer target;
  mpz_ui_pow_ui(target.get_mpz_t(), q, static_cast<unsigned long>(rep.k - 1));
  for (std::int64_t p = -bound; p <= bound; ++p) {
    const std::int64_t gpq = std::gcd(p, qs);
    const Integer pz(static_cast<long>(p));
    for (std::int64_t r = -bound; r < p; ++r) {
      if (gpq != 1 && std::gcd(gpq, r) != 1) continue;
      ++rep.pairs_examined;
      if (homogeneous_sum(rep.k, pz, Integer(static_cast<long>(r))) == target) record_hit(rep, p, r, q);
    }
  }
}

inline void scan_denominator(SearchReport& rep, std::uint64_t q, const SearchOptions& opt, bool word) {
  if (opt.include_negative) {
    scan_signed(rep, q, opt.height);
  } else {
    scan_positive(rep, q, word);
  }
}

inline void check_search_args(int k, std::uint64_t q_lo, std::uint64_t q_hi) {
  if (k < 2) throw std::out_of_range("exponent out of range");
  if (q_lo < 1 || q_lo > q_hi) throw std::invalid_argument("need 1 <= q_lo <= q_hi");
}

}  // namespace detail

/// All nontrivial solutions with common denominator q in [q_lo, q_hi], sequentially.
inline SearchReport search_range(int k, std::uint64_t q_lo, std::uint64_t q_hi,
                                 const SearchOptions& opt = {}) {
  detail::check_search_args(k, q_lo, q_hi);
  const auto start = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.k = k;
  rep.min_den = q_lo;
  rep.max_den = q_hi;
  const bool word = detail::fits_word(k, q_hi);
  for (std::uint64_t q = q_lo; q <= q_hi; ++q) detail::scan_denominator(rep, q, opt, word);
  sort_solutions(rep.solutions);
  rep.elapsed = std::chrono::steady_clock::now() - start;
  return rep;
}

/// All nontrivial solutions with common denominator <= max_den. With opt.jobs > 1
/// denominators are handed out to worker threads; the merged result is identical
/// to the sequential one apart from `elapsed`.
inline SearchReport search_k(int k, std::uint64_t max_den, const SearchOptions& opt = {}) {
  detail::check_search_args(k, 1, max_den);
  if (opt.jobs <= 1) return search_range(k, 1, max_den, opt);

  const auto start = std::chrono::steady_clock::now();
  const bool word = detail::fits_word(k, max_den);
  const unsigned jobs = std::min<unsigned>(opt.jobs, static_cast<unsigned>(max_den));
  std::vector<SearchReport> parts(jobs);
  // Work per denominator grows like q^2, so hand out the largest first.
  std::atomic<std::uint64_t> next{max_den};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    parts[j].k = k;
    parts[j].min_den = 1;
    parts[j].max_den = max_den;
    workers.emplace_back([&, j] {
      for (;;) {
        const std::uint64_t q = next.fetch_sub(1);
        if (q == 0 || q > max_den) break;
        detail::scan_denominator(parts[j], q, opt, word);
      }
    });
  }
  for (auto& w : workers) w.join();

  SearchReport out = merge(parts);
  out.min_den = 1;
  out.max_den = max_den;
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

inline nlohmann::json to_json(const SearchReport& rep) {
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& s : rep.solutions) sols.push_back({{"a", s.a.to_string()}, {"b", s.b.to_string()}});
  return {{"k", rep.k},
          {"max_den", rep.max_den},
          {"pairs_examined", std::to_string(rep.pairs_examined)},
          {"solutions", sols},
          {"elapsed_ms", rep.elapsed.count()}};
}

}  // namespace dioph
