#include "georec/genfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "georec/series.hpp"

namespace georec {

GfTable::GfTable(long n_max, long r_max, long H, Mode mode, const ModelParams& params)
    : n_max_(n_max),
      r_max_(r_max),
      H_(H),
      mode_(mode),
      q_pow_H_(pow_rational(params.q, static_cast<unsigned long>(H))),
      inv_p_(Rational(1) / params.p),
      value_(static_cast<size_t>(n_max + 1) * static_cast<size_t>(r_max + 1) *
                 static_cast<size_t>(H + 1),
             Rational(0)),
      position_(static_cast<size_t>(n_max + 1) * static_cast<size_t>(r_max + 1) *
                    static_cast<size_t>(n_max + 1),
                Rational(0)) {}

size_t GfTable::value_index(long n, long r, long h) const {
  return (static_cast<size_t>(n) * static_cast<size_t>(r_max_ + 1) +
          static_cast<size_t>(r)) *
             static_cast<size_t>(H_ + 1) +
         static_cast<size_t>(h);
}

size_t GfTable::position_index(long n, long r, long j) const {
  return (static_cast<size_t>(n) * static_cast<size_t>(r_max_ + 1) +
          static_cast<size_t>(r)) *
             static_cast<size_t>(n_max_ + 1) +
         static_cast<size_t>(j);
}

void GfTable::check_nr(long n, long r) const {
  if (n < 1 || n > n_max_ || r < 1 || r > r_max_) {
    throw std::out_of_range("GfTable: (n, r) outside the expanded range");
  }
}

Rational& GfTable::value_slot(long n, long r, long h) {
  return value_[value_index(n, r, h)];
}

Rational& GfTable::position_slot(long n, long r, long j) {
  return position_[position_index(n, r, j)];
}

Rational GfTable::value_coeff(long n, long r, long h) const {
  check_nr(n, r);
  if (h < 1 || h > H_) throw std::out_of_range("GfTable: h outside [1, H]");
  return value_[value_index(n, r, h)];
}

Rational GfTable::position_coeff(long n, long r, long j) const {
  check_nr(n, r);
  if (j < 1 || j > n_max_) throw std::out_of_range("GfTable: j outside [1, n_max]");
  return position_[position_index(n, r, j)];
}

Rational GfTable::pi(long n, long r) const {
  check_nr(n, r);
  Rational total(0);
  for (long h = 1; h <= H_; ++h) total += value_[value_index(n, r, h)];
  return total;
}

Rational GfTable::value_partial(long n, long r) const {
  check_nr(n, r);
  Rational total(0);
  for (long h = 1; h <= H_; ++h) total += h * value_[value_index(n, r, h)];
  return total;
}

Rational GfTable::position_partial(long n, long r) const {
  check_nr(n, r);
  Rational total(0);
  for (long j = 1; j <= n_max_; ++j) total += j * position_[position_index(n, r, j)];
  return total;
}

Rational GfTable::tail_bound(long n) const { return Rational(n * q_pow_H_); }

Rational GfTable::value_tail_bound(long n) const {
  return Rational(tail_bound(n) * (H_ + inv_p_));
}

Rational GfTable::position_tail_bound(long n) const {
  return Rational(tail_bound(n) * n);
}

namespace {

using SeriesV = TruncatedSeries<Rational>;    // marks position - r
using SeriesUV = TruncatedSeries<SeriesV>;    // marks records seen
using SeriesZUV = TruncatedSeries<SeriesUV>;  // marks word length

// Factor contributed by records of value i in the strict decomposition:
// 1 + p q^{i-1} z u / (1 - (1 - q^i) z v), with the record letter's z left
// unmarked by v and every run letter carrying one v.
SeriesZUV strict_factor(const ModelParams& params, long i, long z_ord, long u_ord,
                        long v_ord, const SeriesUV& zero_uv) {
  SeriesZUV f(z_ord, zero_uv);
  f[0][0][0] = 1;
  if (u_ord < 1) return f;
  const Rational weight(params.p * pow_rational(params.q, static_cast<unsigned long>(i - 1)));
  const Rational run(1 - pow_rational(params.q, static_cast<unsigned long>(i)));
  Rational run_pow(1);
  for (long m = 1; m <= z_ord; ++m) {
    const long v_deg = m - 1;
    if (v_deg <= v_ord) f[m][1][v_deg] = Rational(weight * run_pow);
    run_pow *= run;
  }
  return f;
}

// Weak records of value i may repeat, so the factor is the geometric series
// in x_i = p q^{i-1} z u / (1 - (1 - q^{i-1}) z v). Powers beyond the u or z
// truncation vanish, which caps the expansion.
SeriesZUV weak_factor(const ModelParams& params, long i, long z_ord, long u_ord,
                      long v_ord, const SeriesUV& zero_uv) {
  SeriesZUV one(z_ord, zero_uv);
  one[0][0][0] = 1;
  if (u_ord < 1) return one;
  SeriesZUV x(z_ord, zero_uv);
  const Rational weight(params.p * pow_rational(params.q, static_cast<unsigned long>(i - 1)));
  const Rational run(1 - pow_rational(params.q, static_cast<unsigned long>(i - 1)));
  Rational run_pow(1);
  for (long m = 1; m <= z_ord; ++m) {
    const long v_deg = m - 1;
    if (v_deg <= v_ord) x[m][1][v_deg] = Rational(weight * run_pow);
    run_pow *= run;
  }
  SeriesZUV acc = one;
  const long reps = std::min(z_ord, u_ord);
  for (long j = 0; j < reps; ++j) acc = one + x * acc;
  return acc;
}

}  // namespace

GfTable gf_expand(const ModelParams& params, long n_max, long r_max, Mode mode, long H) {
  if (n_max < 1) throw std::invalid_argument("gf_expand: n_max must be >= 1");
  if (r_max < 1) throw std::invalid_argument("gf_expand: r_max must be >= 1");
  if (H < r_max) {
    throw std::invalid_argument("gf_expand: record-value cutoff H must be >= r_max");
  }

  const long z_ord = n_max;
  const long u_ord = r_max - 1;
  const long v_ord = n_max;

  const SeriesV zero_v(v_ord, Rational(0));
  const SeriesUV zero_uv(u_ord, zero_v);

  SeriesZUV prod(z_ord, zero_uv);
  prod[0][0][0] = 1;

  GfTable table(n_max, r_max, H, mode, params);

  // prefix[m] accumulates sum_{m' <= m} prod[m']; together with the r-th
  // record's own z this realizes the trailing 1/(1-z) factor.
  Rational record_weight(params.p);  // p q^{h-1}
  for (long h = 1; h <= H; ++h) {
    if (mode == Mode::kWeak) {
      prod = prod * weak_factor(params, h, z_ord, u_ord, v_ord, zero_uv);
    }
    SeriesUV prefix = zero_uv;
    for (long n = 1; n <= n_max; ++n) {
      prefix += prod[n - 1];
      for (long r = 1; r <= r_max; ++r) {
        const SeriesV& by_v = prefix[r - 1];
        Rational total(0);
        for (long m = 0; m <= v_ord; ++m) {
          if (by_v[m] == 0) continue;
          total += by_v[m];
          const long j = m + r;
          if (j <= n_max) table.position_slot(n, r, j) += record_weight * by_v[m];
        }
        if (total != 0) table.value_slot(n, r, h) = Rational(record_weight * total);
      }
    }
    if (mode == Mode::kStrict && h < H) {
      prod = prod * strict_factor(params, h, z_ord, u_ord, v_ord, zero_uv);
    }
    record_weight *= params.q;
  }
  return table;
}

}  // namespace georec
