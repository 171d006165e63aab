#include "georec/qsum.hpp"

#include <stdexcept>

namespace georec {

Rational chain_denominator(const ModelParams& params, DenomKind kind, long l) {
  if (l < 1) throw std::invalid_argument("chain_denominator: l must be >= 1");
  const unsigned long e = static_cast<unsigned long>(l);
  if (kind == DenomKind::kStrictQ) return Rational(pow_rational(params.Q, e) - 1);
  return Rational(1 - pow_rational(params.q, e));
}

TLinear tl_mul(const TLinear& x, const TLinear& y) {
  return TLinear{Rational(x.a * y.a), Rational(x.a * y.b + x.b * y.a)};
}

Rational t_linear_product(const std::vector<TLinear>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("t_linear_product: empty factor list");
  }
  TLinear acc = factors.front();
  for (size_t i = 1; i < factors.size(); ++i) acc = tl_mul(acc, factors[i]);
  return acc.b;
}

namespace {

struct ChainFactors {
  std::vector<Rational> inv_d;    // 1/D(l), index l = 1..m_max
  std::vector<Rational> jet_lin;  // N(l)/D(l)^2
};

ChainFactors factor_tables(const ModelParams& params, long m_max, DenomKind kind) {
  ChainFactors f;
  if (m_max < 1) return f;
  f.inv_d.resize(static_cast<size_t>(m_max) + 1);
  f.jet_lin.resize(static_cast<size_t>(m_max) + 1);
  Rational q_pow(1);  // q^l as l advances
  for (long l = 1; l <= m_max; ++l) {
    q_pow *= params.q;
    // Strict: D = Q^l - 1 = (1 - q^l)/q^l and N = Q^l = 1/q^l.
    // Weak:   D = 1 - q^l and N = q^l.
    const Rational one_minus(1 - q_pow);
    if (kind == DenomKind::kStrictQ) {
      f.inv_d[l] = Rational(q_pow / one_minus);
      f.jet_lin[l] = Rational((q_pow / one_minus) / one_minus);
    } else {
      f.inv_d[l] = Rational(1 / one_minus);
      f.jet_lin[l] = Rational((q_pow / one_minus) / one_minus);
    }
  }
  return f;
}

}  // namespace

std::vector<Rational> chain_sum_table(const ModelParams& params, long r,
                                      long m_max, DenomKind kind) {
  if (r < 1) throw std::invalid_argument("chain_sum_table: r must be >= 1");
  if (m_max < 0) throw std::invalid_argument("chain_sum_table: m_max must be >= 0");
  const ChainFactors f = factor_tables(params, m_max, kind);
  std::vector<Rational> row(static_cast<size_t>(m_max) + 1, Rational(0));
  if (m_max >= 1) row[1] = f.inv_d[1];  // chains start at l_1 = 1
  for (long j = 2; j <= r; ++j) {
    std::vector<Rational> next(static_cast<size_t>(m_max) + 1, Rational(0));
    Rational prefix(0);  // sum of row[m'] for m' < m
    for (long m = 1; m <= m_max; ++m) {
      if (m >= 2) prefix += row[m - 1];
      if (prefix != 0) next[m] = Rational(prefix * f.inv_d[m]);
    }
    row.swap(next);
  }
  return row;
}

Rational nested_sum_S(const ModelParams& params, long r, long k, DenomKind kind) {
  if (k < 1) throw std::invalid_argument("nested_sum_S: k must be >= 1");
  return chain_sum_table(params, r, k, kind)[static_cast<size_t>(k)];
}

std::vector<TLinear> chain_sum_table_jet(const ModelParams& params, long r,
                                         long m_max, DenomKind kind) {
  if (r < 1) throw std::invalid_argument("chain_sum_table_jet: r must be >= 1");
  if (m_max < 0) throw std::invalid_argument("chain_sum_table_jet: m_max must be >= 0");
  const ChainFactors f = factor_tables(params, m_max, kind);
  std::vector<TLinear> row(static_cast<size_t>(m_max) + 1, TLinear{Rational(0), Rational(0)});
  if (m_max >= 1) row[1] = TLinear{f.inv_d[1], f.jet_lin[1]};
  for (long j = 2; j <= r; ++j) {
    std::vector<TLinear> next(static_cast<size_t>(m_max) + 1,
                              TLinear{Rational(0), Rational(0)});
    TLinear prefix{Rational(0), Rational(0)};
    for (long m = 1; m <= m_max; ++m) {
      if (m >= 2) {
        prefix.a += row[m - 1].a;
        prefix.b += row[m - 1].b;
      }
      if (prefix.a != 0 || prefix.b != 0) {
        next[m] = tl_mul(prefix, TLinear{f.inv_d[m], f.jet_lin[m]});
      }
    }
    row.swap(next);
  }
  return row;
}

}  // namespace georec
