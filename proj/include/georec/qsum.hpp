#pragma once

#include <vector>

#include "georec/model.hpp"

namespace georec {

// Denominator family of a nested chain sum: D(l) = Q^l - 1 for the strict
// record formulas, D(l) = 1 - q^l for the weak ones. Both are positive for
// l >= 1 when Q > 1.
enum class DenomKind { kStrictQ, kWeakQ };

Rational chain_denominator(const ModelParams& params, DenomKind kind, long l);

// Degree-one jet a + t b; multiplying jets and reading off b extracts the
// linear-in-t coefficient of a product without expanding the polynomial.
struct TLinear {
  Rational a;
  Rational b;
};

TLinear tl_mul(const TLinear& x, const TLinear& y);

// [t] prod_i (a_i + t b_i). Throws on an empty factor list.
Rational t_linear_product(const std::vector<TLinear>& factors);

// Chain sums S_r(m) = sum over 1 = l_1 < l_2 < ... < l_r = m of
// prod_i 1/D(l_i), for every m = 0..m_max, via prefix-sum dynamic
// programming in O(r m_max). Entries with no admissible chain are 0.
std::vector<Rational> chain_sum_table(const ModelParams& params, long r,
                                      long m_max, DenomKind kind);

// Single chain-sum value S_r(k).
Rational nested_sum_S(const ModelParams& params, long r, long k, DenomKind kind);

// Same chains with jet factors 1/D(l) + t N(l)/D(l)^2 per element, where
// N(l) = Q^l for the strict family and q^l for the weak one. Entry m holds
// the full jet of S_r(m).
std::vector<TLinear> chain_sum_table_jet(const ModelParams& params, long r,
                                         long m_max, DenomKind kind);

}  // namespace georec
