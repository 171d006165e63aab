#pragma once

// Test-only evaluators for the coefficient-transfer identities between
// multi-index sums of dilated series and nested chain sums.
//
// Left-hand sides  [w^n] sum over i-chains of prod_j A^{(j)}(w q^{i_j})
// are computed exactly by composition resummation: for fixed inner degrees
// m_1 + ... + m_s = n the i-chain sum telescopes into closed geometric
// forms over the suffix sums M_j = m_j + ... + m_s. Right-hand sides are
// evaluated directly over chains 0 = l_0 < l_1 < ... < l_s = n. Both sides
// are exact rationals, so the identity checks are equalities.

#include <functional>
#include <vector>

#include "georec/qsum.hpp"
#include "georec/series.hpp"

namespace georec::testsupport {

enum class ChainWeight { kNone, kLastIndex, kLastIndexPlusOne };

using SeriesR = TruncatedSeries<Rational>;

inline void compositions(long n, long parts, std::vector<long>& current,
                         const std::function<void(const std::vector<long>&)>& visit) {
  if (parts == 1) {
    if (n >= 1) {
      current.push_back(n);
      visit(current);
      current.pop_back();
    }
    return;
  }
  for (long first = 1; first + parts - 1 <= n; ++first) {
    current.push_back(first);
    compositions(n - first, parts - 1, current, visit);
    current.pop_back();
  }
}

// Strict index chains 1 <= i_1 < ... < i_s (weak = false) or weak chains
// 0 <= i_1 <= ... <= i_s (weak = true).
inline Rational transfer_lhs(const ModelParams& params, const std::vector<SeriesR>& factors,
                          long n, ChainWeight weight, bool weak) {
  const long s = static_cast<long>(factors.size());
  Rational total(0);
  std::vector<long> scratch;
  compositions(n, s, scratch, [&](const std::vector<long>& m) {
    Rational coeff(1);
    for (long j = 0; j < s; ++j) {
      if (m[j] > factors[j].order()) return;
      coeff *= factors[j][m[j]];
      if (coeff == 0) return;
    }
    // Suffix sums of the degrees; each chain gap contributes q^{M_j} with
    // gap >= 1 (strict) or gap >= 0 (weak).
    Rational base(1);
    Rational weight_sum(weak && weight == ChainWeight::kLastIndexPlusOne ? 1 : 0);
    long suffix = 0;
    for (long j = s - 1; j >= 0; --j) {
      suffix += m[j];
      const Rational q_suffix = pow_rational(params.q, static_cast<unsigned long>(suffix));
      const Rational geom(q_suffix / (1 - q_suffix));
      base *= weak ? Rational(1 / (1 - q_suffix)) : geom;
      if (weight != ChainWeight::kNone) {
        // d [sum_d d x^d] / [sum_d x^d] is 1/(1-x) over d >= 1, x/(1-x) over d >= 0.
        weight_sum += weak ? geom : Rational(1 / (1 - q_suffix));
      }
    }
    if (weight == ChainWeight::kNone) {
      total += coeff * base;
    } else {
      total += coeff * base * weight_sum;
    }
  });
  return total;
}

inline void chains(long n, long s, long next, std::vector<long>& current,
                   const std::function<void(const std::vector<long>&)>& visit) {
  if (static_cast<long>(current.size()) == s - 1) {
    current.push_back(n);
    visit(current);
    current.pop_back();
    return;
  }
  for (long l = next; l < n; ++l) {
    current.push_back(l);
    chains(n, s, l + 1, current, visit);
    current.pop_back();
  }
}

// Plain chain-sum right-hand side: the series coefficients pair with chain
// gaps in reverse factor order.
inline Rational chain_rhs_plain(const ModelParams& params,
                                const std::vector<SeriesR>& factors, long n,
                                DenomKind kind) {
  const long s = static_cast<long>(factors.size());
  Rational total(0);
  std::vector<long> scratch;
  chains(n, s, 1, scratch, [&](const std::vector<long>& chain) {
    Rational term(1);
    long prev = 0;
    for (long j = 0; j < s; ++j) {
      const long gap = chain[j] - prev;
      prev = chain[j];
      const SeriesR& factor = factors[s - 1 - j];
      if (gap > factor.order()) return;
      term *= factor[gap];
      if (term == 0) return;
      term /= chain_denominator(params, kind, chain[j]);
    }
    total += term;
  });
  return total;
}

// t-linear chain-sum right-hand side: [t] prod over chain elements of
// (1/D(l) + t N(l)/D(l)^2).
inline Rational chain_rhs_tlinear(const ModelParams& params,
                                  const std::vector<SeriesR>& factors, long n,
                                  DenomKind kind) {
  const long s = static_cast<long>(factors.size());
  Rational total(0);
  std::vector<long> scratch;
  chains(n, s, 1, scratch, [&](const std::vector<long>& chain) {
    Rational coeff(1);
    long prev = 0;
    for (long j = 0; j < s; ++j) {
      const long gap = chain[j] - prev;
      prev = chain[j];
      const SeriesR& factor = factors[s - 1 - j];
      if (gap > factor.order()) return;
      coeff *= factor[gap];
      if (coeff == 0) return;
    }
    std::vector<TLinear> jets;
    jets.reserve(static_cast<size_t>(s));
    for (long j = 0; j < s; ++j) {
      const long l = chain[j];
      const Rational d = chain_denominator(params, kind, l);
      const Rational numer = kind == DenomKind::kStrictQ
                                 ? pow_rational(params.Q, static_cast<unsigned long>(l))
                                 : pow_rational(params.q, static_cast<unsigned long>(l));
      jets.push_back({Rational(1 / d), Rational(numer / (d * d))});
    }
    total += coeff * t_linear_product(jets);
  });
  return total;
}

}  // namespace georec::testsupport
