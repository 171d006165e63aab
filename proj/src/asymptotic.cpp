#include "georec/asymptotic.hpp"

#include <stdexcept>

namespace georec {

Real log_base_Q(const ModelParams& params, long n) {
  if (n < 1) throw std::invalid_argument("log_base_Q: n must be >= 1");
  return log(Real(Integer(n))) / log(Real(params.Q));
}

AsymptoticPrediction value_limit(const ModelParams& params, long r, Mode mode,
                                 bool corrected) {
  if (r < 1) throw std::invalid_argument("value_limit: r must be >= 1");
  Rational leading;
  if (mode == Mode::kStrict) {
    leading = Rational(r / params.p);
  } else {
    leading = Rational(r * params.q / params.p);
    if (corrected) leading += 1;
  }
  return {leading, ErrorOrder::kInverseN, mode, Statistic::kValue};
}

AsymptoticPrediction position_leading(const ModelParams& params, long n, long r,
                                      Mode mode) {
  if (r < 1) throw std::invalid_argument("position_leading: r must be >= 1");
  if (n < 2) throw std::invalid_argument("position_leading: n must be >= 2");
  const Rational base =
      mode == Mode::kStrict ? Rational(params.p / params.q) : params.p;
  const Real x = Real(base) * log_base_Q(params, n);
  Integer factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(r - 1));
  const Real leading = pow_ui(x, static_cast<unsigned long>(r - 1)) / Real(factorial);
  return {leading, ErrorOrder::kLogPower, mode, Statistic::kPosition};
}

AsymptoticPrediction pi_limit(long r) {
  if (r < 1) throw std::invalid_argument("pi_limit: r must be >= 1");
  // The limit is 1 for both modes; the tag is informational only.
  return {Rational(1), ErrorOrder::kInverseN, Mode::kStrict, Statistic::kPi};
}

}  // namespace georec
