#include "georec/analytic.hpp"

#include <algorithm>
#include <stdexcept>

namespace georec {

namespace {

DenomKind kind_of(Mode mode) {
  return mode == Mode::kStrict ? DenomKind::kStrictQ : DenomKind::kWeakQ;
}

long last_nonzero(const std::vector<Rational>& v) {
  for (long m = static_cast<long>(v.size()) - 1; m >= 0; --m) {
    if (v[static_cast<size_t>(m)] != 0) return m;
  }
  return -1;
}

long last_nonzero(const std::vector<TLinear>& v) {
  for (long m = static_cast<long>(v.size()) - 1; m >= 0; --m) {
    if (v[static_cast<size_t>(m)].a != 0 || v[static_cast<size_t>(m)].b != 0) return m;
  }
  return -1;
}

}  // namespace

AnalyticEvaluator::AnalyticEvaluator(const ModelParams& params, long r, Mode mode,
                                     long n_max, bool corrected_f2)
    : params_(params), r_(r), mode_(mode), n_max_(n_max), corrected_f2_(corrected_f2) {
  if (r < 1) throw std::invalid_argument("AnalyticEvaluator: r must be >= 1");
  if (n_max < 1) throw std::invalid_argument("AnalyticEvaluator: n_max must be >= 1");
  const Rational ratio =
      mode == Mode::kStrict ? Rational(params.p / params.q) : params.p;
  prefactor_ = pow_rational(ratio, static_cast<unsigned long>(r));
  if (r % 2 == 0) prefactor_ = -prefactor_;
  chain_ = chain_sum_table(params, r, n_max, kind_of(mode));
  chain_jet_ = chain_sum_table_jet(params, r, n_max, kind_of(mode));
  chain_last_ = last_nonzero(chain_);
  jet_last_ = last_nonzero(chain_jet_);
}

template <typename TermFn>
Rational AnalyticEvaluator::alternating_sum(long n, long k_hi, TermFn&& term) const {
  if (n < 1) throw std::invalid_argument("AnalyticEvaluator: n must be >= 1");
  if (n > n_max_) throw std::invalid_argument("AnalyticEvaluator: n exceeds n_max");
  const long k_lo = r_ - 1;
  if (k_lo > k_hi) return Rational(0);
  Integer binom = binomial(n - 1, k_lo);  // C(n-1, k), advanced incrementally
  Rational sum(0);
  for (long k = k_lo; k <= k_hi; ++k) {
    const Rational f = term(k);
    if (f != 0) {
      Rational piece(f * binom);
      if (k % 2 != 0) piece = -piece;
      sum += piece;
    }
    if (k < k_hi) {
      binom *= (n - 1 - k);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      static_cast<unsigned long>(k + 1));
    }
  }
  return Rational(prefactor_ * sum);
}

Rational AnalyticEvaluator::pi(long n) const {
  if (n < r_) return Rational(0);  // fewer letters than records
  const long k_hi = std::min(n - 1, chain_last_ - 1);
  return alternating_sum(n, k_hi,
                         [&](long k) { return chain_[static_cast<size_t>(k + 1)]; });
}

Rational AnalyticEvaluator::value_partial(long n) const {
  if (n < r_) return Rational(0);
  const long k_hi = std::min(n - 1, jet_last_ - 1);
  return alternating_sum(
      n, k_hi, [&](long k) { return chain_jet_[static_cast<size_t>(k + 1)].b; });
}

Rational AnalyticEvaluator::position_shifted_partial(long n) const {
  if (n < r_) return Rational(0);
  const long k_hi = std::min(n - 1, chain_last_);
  return alternating_sum(n, k_hi, [&](long k) {
    Rational f(0);
    if (k >= 2) {
      const Rational& s_k = chain_[static_cast<size_t>(k)];
      if (s_k != 0) f -= (k - 1) * s_k;
    }
    const long c2 = corrected_f2_ ? k - r_ + 1 : k - r_;
    if (c2 != 0 && k + 1 <= chain_last_) {
      const Rational& s_k1 = chain_[static_cast<size_t>(k + 1)];
      if (s_k1 != 0) f += c2 * s_k1;
    }
    return f;
  });
}

PositionF position_f(const ModelParams& params, long r, long k, Mode mode,
                     bool corrected_f2) {
  if (r < 1) throw std::invalid_argument("position_f: r must be >= 1");
  if (k < 0) throw std::invalid_argument("position_f: k must be >= 0");
  const DenomKind kind = kind_of(mode);
  const std::vector<Rational> chain = chain_sum_table(params, r, k + 1, kind);
  PositionF f{Rational(0), Rational(0)};
  if (k >= 1) f.f1 = Rational(-(k - 1) * chain[static_cast<size_t>(k)]);
  const long c2 = corrected_f2 ? k - r + 1 : k - r;
  f.f2 = Rational(c2 * chain[static_cast<size_t>(k + 1)]);
  return f;
}

Rational pi_strict(const ModelParams& params, long n, long r) {
  return pi_analytic(params, n, r, Mode::kStrict);
}

Rational pi_weak(const ModelParams& params, long n, long r) {
  return pi_analytic(params, n, r, Mode::kWeak);
}

Rational pi_analytic(const ModelParams& params, long n, long r, Mode mode) {
  if (n < 1) throw std::invalid_argument("pi_analytic: n must be >= 1");
  if (r > n) return Rational(0);
  return AnalyticEvaluator(params, r, mode, n).pi(n);
}

Rational value_partial_analytic(const ModelParams& params, long n, long r, Mode mode) {
  if (n < 1) throw std::invalid_argument("value_partial_analytic: n must be >= 1");
  if (r > n) return Rational(0);
  return AnalyticEvaluator(params, r, mode, n).value_partial(n);
}

Rational position_shifted_partial_analytic(const ModelParams& params, long n, long r,
                                           Mode mode, bool corrected_f2) {
  if (n < 1) {
    throw std::invalid_argument("position_shifted_partial_analytic: n must be >= 1");
  }
  if (r > n) return Rational(0);
  return AnalyticEvaluator(params, r, mode, n, corrected_f2).position_shifted_partial(n);
}

}  // namespace georec
