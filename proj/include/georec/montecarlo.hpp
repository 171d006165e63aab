#pragma once

#include <cstdint>
#include <vector>

#include "georec/model.hpp"

namespace georec {

extern const char* const kRngName;  // pinned in report metadata

// Counter-based uniform stream: draw k of trial t is a pure function of
// (seed, t, k). Shards over disjoint trial ranges therefore reproduce the
// same per-trial values no matter how work is split across threads.
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64();

  // Uniform on (0, 1); an exact zero draw is remapped to the smallest
  // positive representable double.
  double next_unit();

 private:
  std::uint64_t state_;
};

// Inverse-transform geometric letter: 1 + floor(ln U / ln q).
long sample_letter(double unit, double log_q);

std::vector<long> sample_word(const ModelParams& params, long n, TrialStream& stream);

struct McEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  long trials = 0;
  long conditioning_count = 0;
  bool available = false;  // false when conditioning on an empty event
};

struct McResult {
  McEstimate pi_hat;        // P(at least r records)
  McEstimate value_hat;     // conditional on >= r records
  McEstimate position_hat;  // conditional on >= r records
};

// threads <= 0 reads GEOREC_THREADS, falling back to the hardware count.
// Per-shard sums are integers, so the merged estimates are bit-identical
// for every thread count.
McResult mc_estimate(const ModelParams& params, const RecordQuery& query, long trials,
                     std::uint64_t seed, int threads = 0);

int resolve_thread_count(int requested);

}  // namespace georec
