#include "georec/model.hpp"

#include <stdexcept>

namespace georec {

const char* mode_name(Mode mode) {
  return mode == Mode::kStrict ? "strict" : "weak";
}

ModelParams ModelParams::from_p(const Rational& p) {
  if (p <= 0 || p >= 1) {
    throw std::invalid_argument("p must lie strictly between 0 and 1");
  }
  ModelParams m;
  m.p = p;
  m.q = Rational(1 - p);
  m.Q = Rational(1 / m.q);
  return m;
}

Rational ModelParams::letter_probability(long k) const {
  if (k < 1) throw std::invalid_argument("letters are positive integers");
  return Rational(p * pow_rational(q, static_cast<unsigned long>(k - 1)));
}

RecordQuery::RecordQuery(long n_, long r_, Mode mode_) : n(n_), r(r_), mode(mode_) {
  if (n < 1) throw std::invalid_argument("word length must be >= 1");
  if (r < 1 || r > n) {
    throw std::invalid_argument("record index must satisfy 1 <= r <= n");
  }
}

long choose_cutoff(const ModelParams& params, long n, const Rational& epsilon) {
  if (n < 1) throw std::invalid_argument("choose_cutoff: n must be >= 1");
  if (epsilon <= 0) throw std::invalid_argument("choose_cutoff: epsilon must be > 0");
  constexpr long kMaxCutoff = 4'000'000;
  Rational mass(params.q * n);  // n q^M at M = 1
  for (long M = 1; M <= kMaxCutoff; ++M) {
    if (mass <= epsilon) return M;
    mass *= params.q;
  }
  throw std::invalid_argument("choose_cutoff: epsilon unreachable within cutoff budget");
}

TailBound plan_cutoffs(const ModelParams& params, long n, const Rational& epsilon) {
  TailBound plan;
  plan.epsilon = epsilon;
  plan.cutoff_M = choose_cutoff(params, n, epsilon);
  plan.cutoff_H = plan.cutoff_M;  // record values are letters; same geometry
  return plan;
}

}  // namespace georec
