#include "georec/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace georec {

const char* const kRngName = "splitmix64-counter";

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial)
    : state_(mix64(seed + kGolden * (trial + 1))) {}

std::uint64_t TrialStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double TrialStream::next_unit() {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  if (u == 0.0) return std::numeric_limits<double>::denorm_min();
  return u;
}

long sample_letter(double unit, double log_q) {
  return 1 + static_cast<long>(std::floor(std::log(unit) / log_q));
}

std::vector<long> sample_word(const ModelParams& params, long n, TrialStream& stream) {
  if (n < 1) throw std::invalid_argument("sample_word: n must be >= 1");
  const double log_q = std::log(mpq_get_d(params.q.get_mpq_t()));
  std::vector<long> word(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) word[i] = sample_letter(stream.next_unit(), log_q);
  return word;
}

int resolve_thread_count(int requested) {
  if (requested > 0) return std::min(requested, 256);
  if (const char* env = std::getenv("GEOREC_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return std::min(parsed, 256);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(std::min(hw, 256u)) : 1;
}

namespace {

struct ShardSums {
  std::uint64_t conditioned = 0;
  unsigned __int128 value_sum = 0;
  unsigned __int128 value_sq = 0;
  unsigned __int128 position_sum = 0;
  unsigned __int128 position_sq = 0;

  void merge(const ShardSums& other) {
    conditioned += other.conditioned;
    value_sum += other.value_sum;
    value_sq += other.value_sq;
    position_sum += other.position_sum;
    position_sq += other.position_sq;
  }
};

ShardSums run_shard(const ModelParams& params, const RecordQuery& query,
                    std::uint64_t seed, long first_trial, long last_trial) {
  ShardSums sums;
  const double log_q = std::log(mpq_get_d(params.q.get_mpq_t()));
  for (long t = first_trial; t < last_trial; ++t) {
    TrialStream stream(seed, static_cast<std::uint64_t>(t));
    long best = 0;
    long count = 0;
    for (long i = 0; i < query.n; ++i) {
      const long a = sample_letter(stream.next_unit(), log_q);
      const bool is_record = query.mode == Mode::kStrict ? a > best : a >= best;
      if (!is_record) continue;
      best = a;
      if (++count == query.r) {
        sums.conditioned += 1;
        const auto v = static_cast<unsigned __int128>(a);
        const auto j = static_cast<unsigned __int128>(i + 1);
        sums.value_sum += v;
        sums.value_sq += v * v;
        sums.position_sum += j;
        sums.position_sq += j * j;
        break;  // later letters cannot change the tracked statistics
      }
    }
  }
  return sums;
}

McEstimate conditional_estimate(unsigned __int128 sum, unsigned __int128 sq, long n_cond,
                                long trials) {
  McEstimate e;
  e.trials = trials;
  e.conditioning_count = n_cond;
  if (n_cond == 0) return e;  // flagged unavailable, never fabricated
  e.available = true;
  const long double s1 = static_cast<long double>(sum);
  const long double nc = static_cast<long double>(n_cond);
  e.mean = static_cast<double>(s1 / nc);
  if (n_cond > 1) {
    // n*s2 - s1^2 is an exact integer, so a constant sample yields stderr 0.
    const long double var_num =
        static_cast<long double>(static_cast<unsigned __int128>(n_cond) * sq - sum * sum);
    const long double variance = var_num / (nc * (nc - 1));
    e.stderr_ = static_cast<double>(std::sqrt(static_cast<double>(variance / nc)));
  }
  e.ci95_low = e.mean - 1.96 * e.stderr_;
  e.ci95_high = e.mean + 1.96 * e.stderr_;
  return e;
}

}  // namespace

McResult mc_estimate(const ModelParams& params, const RecordQuery& query, long trials,
                     std::uint64_t seed, int threads) {
  if (trials < 1) throw std::invalid_argument("mc_estimate: trials must be >= 1");
  const int workers = static_cast<int>(
      std::max<long>(1, std::min<long>(resolve_thread_count(threads), trials)));

  std::vector<ShardSums> partial(static_cast<size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  const long chunk = (trials + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long first = static_cast<long>(w) * chunk;
    const long last = std::min(trials, first + chunk);
    if (first >= last) break;
    pool.emplace_back([&, w, first, last] {
      partial[static_cast<size_t>(w)] = run_shard(params, query, seed, first, last);
    });
  }
  for (auto& th : pool) th.join();

  ShardSums total;
  for (const auto& s : partial) total.merge(s);  // integer sums: order-free

  McResult result;
  const long double n_trials = static_cast<long double>(trials);
  const long double hits = static_cast<long double>(total.conditioned);
  McEstimate& pi = result.pi_hat;
  pi.trials = trials;
  pi.conditioning_count = static_cast<long>(total.conditioned);
  pi.available = true;
  pi.mean = static_cast<double>(hits / n_trials);
  if (trials > 1) {
    const long double var =
        pi.mean * (1.0L - pi.mean) * n_trials / (n_trials - 1.0L);
    pi.stderr_ = static_cast<double>(std::sqrt(static_cast<double>(var / n_trials)));
  }
  pi.ci95_low = pi.mean - 1.96 * pi.stderr_;
  pi.ci95_high = pi.mean + 1.96 * pi.stderr_;

  result.value_hat = conditional_estimate(total.value_sum, total.value_sq,
                                          static_cast<long>(total.conditioned), trials);
  result.position_hat = conditional_estimate(
      total.position_sum, total.position_sq, static_cast<long>(total.conditioned), trials);
  return result;
}

}  // namespace georec
