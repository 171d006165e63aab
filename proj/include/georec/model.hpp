#pragma once

#include <map>

#include "georec/rational.hpp"

namespace georec {

// A record may beat the running maximum strictly or weakly (ties count).
enum class Mode { kStrict, kWeak };

const char* mode_name(Mode mode);

// Geometric letter model P{X = k} = p q^{k-1}, k >= 1, with q = 1 - p and
// Q = 1/q. All three are kept as exact rationals.
struct ModelParams {
  Rational p;
  Rational q;
  Rational Q;

  static ModelParams from_p(const Rational& p);

  Rational letter_probability(long k) const;  // p q^{k-1}, k >= 1
};

struct RecordQuery {
  long n;  // word length, >= 1
  long r;  // record index, 1 <= r <= n
  Mode mode;

  RecordQuery(long n, long r, Mode mode);
};

// Least M >= 1 with n q^M <= epsilon: truncating the letter alphabet at M
// then misses at most epsilon of probability mass.
long choose_cutoff(const ModelParams& params, long n, const Rational& epsilon);

// Alphabet/record-value truncation certificate for one query: n q^M and
// n q^H are both at most epsilon.
struct TailBound {
  Rational epsilon;
  long cutoff_M = 0;
  long cutoff_H = 0;
};

TailBound plan_cutoffs(const ModelParams& params, long n, const Rational& epsilon);

// Exact statistics of the r-th record under the alphabet-truncated measure
// (all letters restricted to [1, M]), with certified distances to the full
// model. "Partial" expectations are taken against the unnormalized measure
// restricted to words with at least r records; conditional = partial / pi.
struct RecordStatistics {
  Rational prob_at_least_r;      // pi, truncated
  Rational value_partial;        // sum_h h * value_dist[h]
  Rational position_partial;     // sum_j j * position_dist[j]
  Rational value_conditional;    // value_partial / pi (0 if pi = 0)
  Rational position_conditional; // position_partial / pi (0 if pi = 0)
  std::map<long, Rational> value_dist;     // h -> mass, 1 <= h <= M
  std::map<long, Rational> position_dist;  // j -> mass, r <= j <= n
  Rational tail_bound;           // n q^M, bounds |pi_true - pi|
  Rational value_tail_bound;     // n q^M (M + 1/p), bounds the value partial
  Rational position_tail_bound;  // n^2 q^M, bounds the position partial
};

}  // namespace georec
