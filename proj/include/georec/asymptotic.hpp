#pragma once

#include <variant>

#include "georec/model.hpp"
#include "georec/real.hpp"

namespace georec {

enum class ErrorOrder { kInverseN, kLogPower };  // O(1/n) vs O(log^{r-2} n)
enum class Statistic { kPi, kValue, kPosition };

// Leading-order prediction. Rational limits (pi, value) stay exact; the
// position leading term involves log_Q n and is carried as a Real.
struct AsymptoticPrediction {
  std::variant<Rational, Real> leading;
  ErrorOrder error_order;
  Mode mode;
  Statistic statistic;

  bool is_exact() const { return std::holds_alternative<Rational>(leading); }
  const Rational& exact() const { return std::get<Rational>(leading); }
  Real real() const {
    return is_exact() ? Real(std::get<Rational>(leading)) : std::get<Real>(leading);
  }
};

// log_Q n = ln n / ln Q, at Real precision. Requires n >= 1.
Real log_base_Q(const ModelParams& params, long n);

// Limit of the conditional value of the r-th record: r/p in strict mode;
// in weak mode the uncorrected constant r q / p tracks the conditional mean
// of (value - 1), and corrected = true adds the unit back (1 + r q / p).
AsymptoticPrediction value_limit(const ModelParams& params, long r, Mode mode,
                                 bool corrected);

// Leading term of the conditional position: ((p/q) log_Q n)^{r-1} / (r-1)!
// in strict mode, (p log_Q n)^{r-1} / (r-1)! in weak mode. Requires n >= 2.
AsymptoticPrediction position_leading(const ModelParams& params, long n, long r,
                                      Mode mode);

// pi -> 1 with an O(1/n) error, independent of the mode.
AsymptoticPrediction pi_limit(long r);

}  // namespace georec
