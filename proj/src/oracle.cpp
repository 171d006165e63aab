#include "georec/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace georec {

namespace {

std::vector<Rational> letter_probabilities(const ModelParams& params, long M) {
  std::vector<Rational> lp(static_cast<size_t>(M) + 1, Rational(0));
  Rational mass(params.p);
  for (long k = 1; k <= M; ++k) {
    lp[k] = mass;
    mass *= params.q;
  }
  return lp;
}

void finalize(const ModelParams& params, const RecordQuery& query, long M,
              RecordStatistics& stats) {
  for (const auto& [h, mass] : stats.value_dist) stats.value_partial += h * mass;
  for (const auto& [j, mass] : stats.position_dist) stats.position_partial += j * mass;
  if (stats.prob_at_least_r > 0) {
    stats.value_conditional = Rational(stats.value_partial / stats.prob_at_least_r);
    stats.position_conditional = Rational(stats.position_partial / stats.prob_at_least_r);
  }
  const Rational qM = pow_rational(params.q, static_cast<unsigned long>(M));
  stats.tail_bound = Rational(query.n * qM);
  // A word escaping the cutoff has max letter L > M; E[L 1{L > M}] is at most
  // n q^M (M + 1/p), and any record value or statistic value is <= L.
  stats.value_tail_bound = Rational(stats.tail_bound * (M + Rational(1) / params.p));
  stats.position_tail_bound = Rational(stats.tail_bound * query.n);
}

}  // namespace

RecordStatistics enumerate_oracle(const ModelParams& params, const RecordQuery& query,
                                  long M, std::uint64_t budget) {
  if (M < 1) throw std::invalid_argument("enumerate_oracle: M must be >= 1");
  Integer words;
  mpz_ui_pow_ui(words.get_mpz_t(), static_cast<unsigned long>(M),
                static_cast<unsigned long>(query.n));
  if (words > Integer(static_cast<unsigned long>(budget))) {
    throw std::invalid_argument("enumerate_oracle: M^n exceeds the word budget");
  }

  const long n = query.n;
  const std::vector<Rational> lp = letter_probabilities(params, M);
  std::vector<long> word(static_cast<size_t>(n), 1);
  // prefix[i] = probability of letters 0..i-1; only suffixes change as the
  // odometer advances, so most updates touch a couple of entries.
  std::vector<Rational> prefix(static_cast<size_t>(n) + 1, Rational(1));
  for (long i = 0; i < n; ++i) prefix[i + 1] = Rational(prefix[i] * lp[word[i]]);

  RecordStatistics stats;
  long refresh_from = 0;
  while (true) {
    for (long i = refresh_from; i < n; ++i) prefix[i + 1] = Rational(prefix[i] * lp[word[i]]);

    long best = 0;
    long count = 0;
    for (long i = 0; i < n; ++i) {
      const long a = word[i];
      const bool is_record = query.mode == Mode::kStrict ? a > best : a >= best;
      if (is_record) {
        best = a;
        if (++count == query.r) {
          const Rational& mass = prefix[n];
          stats.prob_at_least_r += mass;
          stats.value_dist[a] += mass;
          stats.position_dist[i + 1] += mass;
          break;
        }
      }
    }

    long d = n - 1;
    while (d >= 0 && word[d] == M) word[d--] = 1;
    if (d < 0) break;
    ++word[d];
    refresh_from = d;
  }

  finalize(params, query, M, stats);
  return stats;
}

RecordStatistics dp_oracle(const ModelParams& params, const RecordQuery& query, long M) {
  if (M < 1) throw std::invalid_argument("dp_oracle: M must be >= 1");
  const long n = query.n;
  const long r = query.r;
  const bool strict = query.mode == Mode::kStrict;
  const std::vector<Rational> lp = letter_probabilities(params, M);

  // q^m and the in-range non-record probability per current maximum m:
  // strict keeps letters <= m, weak keeps letters <= m - 1.
  std::vector<Rational> q_pow(static_cast<size_t>(M) + 1);
  q_pow[0] = 1;
  for (long m = 1; m <= M; ++m) q_pow[m] = Rational(q_pow[m - 1] * params.q);
  std::vector<Rational> stay(static_cast<size_t>(M) + 1, Rational(0));
  for (long m = 1; m <= M; ++m) {
    stay[m] = Rational(1 - q_pow[strict ? m : m - 1]);
  }

  // All letters of the word are restricted to [1, M], so mass absorbed at
  // step t carries the factor (1 - q^M)^{n - t} for the remaining letters.
  std::vector<Rational> suffix_inside(static_cast<size_t>(n) + 1);
  suffix_inside[0] = 1;
  const Rational inside(1 - q_pow[M]);
  for (long t = 1; t <= n; ++t) suffix_inside[t] = Rational(suffix_inside[t - 1] * inside);

  // mass[s][m]: prefix weight with s records so far (s < r) and maximum m.
  std::vector<std::vector<Rational>> mass(
      static_cast<size_t>(r), std::vector<Rational>(static_cast<size_t>(M) + 1, Rational(0)));
  mass[0][0] = 1;

  RecordStatistics stats;
  std::vector<Rational> prefix(static_cast<size_t>(M) + 1);
  for (long t = 1; t <= n; ++t) {
    std::vector<std::vector<Rational>> next(
        static_cast<size_t>(r), std::vector<Rational>(static_cast<size_t>(M) + 1, Rational(0)));
    for (long s = 0; s < r; ++s) {
      prefix[0] = mass[s][0];
      for (long m = 1; m <= M; ++m) prefix[m] = Rational(prefix[m - 1] + mass[s][m]);
      for (long k = 1; k <= M; ++k) {
        const Rational& sources = strict ? prefix[k - 1] : prefix[k];
        if (sources == 0) continue;
        const Rational moved(sources * lp[k]);
        if (s + 1 == r) {
          const Rational absorbed(moved * suffix_inside[n - t]);
          stats.prob_at_least_r += absorbed;
          stats.value_dist[k] += absorbed;
          stats.position_dist[t] += absorbed;
        } else {
          next[s + 1][k] += moved;
        }
      }
      for (long m = 1; m <= M; ++m) {
        if (mass[s][m] != 0) next[s][m] += mass[s][m] * stay[m];
      }
    }
    mass.swap(next);
  }

  finalize(params, query, M, stats);
  return stats;
}

std::vector<Rational> dp_expected_records_prefix(const ModelParams& params, long n_max,
                                                 long M, Mode mode) {
  if (n_max < 1) throw std::invalid_argument("dp_expected_records: n must be >= 1");
  if (M < 1) throw std::invalid_argument("dp_expected_records: M must be >= 1");
  const bool strict = mode == Mode::kStrict;
  const std::vector<Rational> lp = letter_probabilities(params, M);

  std::vector<Rational> q_pow(static_cast<size_t>(M) + 1);
  q_pow[0] = 1;
  for (long m = 1; m <= M; ++m) q_pow[m] = Rational(q_pow[m - 1] * params.q);
  const Rational inside(1 - q_pow[M]);

  // Forward pass over letters constrained to [1, M]: record_mass[t] is the
  // probability that letter t is a record with the prefix in range. A word
  // of length n then contributes via E_n = inside * E_{n-1} + record_mass[n],
  // which accounts for the n - t unconstrained suffix letters.
  std::vector<Rational> mass(static_cast<size_t>(M) + 1, Rational(0));
  mass[0] = 1;
  std::vector<Rational> expected(static_cast<size_t>(n_max) + 1, Rational(0));
  std::vector<Rational> prefix(static_cast<size_t>(M) + 1);
  for (long t = 1; t <= n_max; ++t) {
    prefix[0] = mass[0];
    for (long m = 1; m <= M; ++m) prefix[m] = Rational(prefix[m - 1] + mass[m]);
    Rational record_mass(0);
    // P(record | max m) restricted to letters <= M.
    for (long m = 0; m <= M; ++m) {
      if (mass[m] == 0) continue;
      const long e = strict ? m : (m > 0 ? m - 1 : 0);
      record_mass += mass[m] * (q_pow[e] - q_pow[M]);
    }
    expected[t] = Rational(expected[t - 1] * inside + record_mass);
    std::vector<Rational> next(static_cast<size_t>(M) + 1, Rational(0));
    for (long k = 1; k <= M; ++k) {
      const Rational& sources = strict ? prefix[k - 1] : prefix[k];
      if (sources != 0) next[k] = Rational(sources * lp[k]);
    }
    for (long m = 1; m <= M; ++m) {
      if (mass[m] == 0) continue;
      next[m] += mass[m] * (1 - q_pow[strict ? m : m - 1]);
    }
    mass.swap(next);
  }
  return expected;
}

Rational dp_expected_records(const ModelParams& params, long n, long M, Mode mode) {
  return dp_expected_records_prefix(params, n, M, mode)[static_cast<size_t>(n)];
}

}  // namespace georec
