#pragma once

#include <vector>

#include "georec/model.hpp"
#include "georec/qsum.hpp"

namespace georec {

// The two pieces of the position summand f(k) = f1(k) + f2(k).
struct PositionF {
  Rational f1;
  Rational f2;
};

// Exact finite-n record statistics through alternating binomial sums over
// nested chain sums:
//
//   pi(n)        = (-1)^{r-1} c^r sum_k C(n-1,k) (-1)^k S_r(k+1)
//   value(n)     = (-1)^{r-1} c^r sum_k C(n-1,k) (-1)^k [t] S~_r(k+1)
//   position(n)  = (-1)^{r-1} c^r sum_k C(n-1,k) (-1)^k (f1(k) + f2(k))
//
// with c = p/q and the Q^l - 1 denominator family in strict mode, c = p and
// the 1 - q^l family in weak mode, k running over r-1 .. n-1, and S~ the
// jet-valued chain sum. Individual terms grow like C(n-1, k) while the sums
// stay O(1); exact rational arithmetic absorbs the cancellation.
//
// Weak caveat: value(n) is the partial expectation of (value - 1), not of
// the value itself; callers add pi(n) back when reporting. Likewise
// position(n) is the partial expectation of (position - r) in both modes.
//
// One evaluator fixes (params, r, mode) and serves any n <= n_max, sharing
// the chain-sum tables across queries. All state is immutable after
// construction.
class AnalyticEvaluator {
 public:
  AnalyticEvaluator(const ModelParams& params, long r, Mode mode, long n_max,
                    bool corrected_f2 = true);

  long r() const { return r_; }
  Mode mode() const { return mode_; }
  long n_max() const { return n_max_; }

  Rational pi(long n) const;
  Rational value_partial(long n) const;
  Rational position_shifted_partial(long n) const;

 private:
  template <typename TermFn>
  Rational alternating_sum(long n, long k_hi, TermFn&& term) const;

  ModelParams params_;
  long r_;
  Mode mode_;
  long n_max_;
  bool corrected_f2_;
  Rational prefactor_;              // (-1)^{r-1} c^r
  std::vector<Rational> chain_;     // S_r(m), m = 0..n_max
  std::vector<TLinear> chain_jet_;  // jet-valued S_r(m)
  long chain_last_;                 // largest m with chain_[m] != 0
  long jet_last_;
};

// f1(k) = -(k-1) S_r(k) and f2(k) = (k-r+1) S_r(k+1); the uncorrected
// variant uses the coefficient (k-r) instead, for diagnostic comparisons.
PositionF position_f(const ModelParams& params, long r, long k, Mode mode,
                     bool corrected_f2 = true);

// Single-query wrappers around AnalyticEvaluator.
Rational pi_strict(const ModelParams& params, long n, long r);
Rational pi_weak(const ModelParams& params, long n, long r);
Rational pi_analytic(const ModelParams& params, long n, long r, Mode mode);
Rational value_partial_analytic(const ModelParams& params, long n, long r, Mode mode);
Rational position_shifted_partial_analytic(const ModelParams& params, long n, long r,
                                           Mode mode, bool corrected_f2 = true);

}  // namespace georec
