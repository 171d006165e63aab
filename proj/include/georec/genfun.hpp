#pragma once

#include <vector>

#include "georec/model.hpp"

namespace georec {

// Exact coefficient tables of the record generating functions, expanded as
// truncated series in z (word length) and u (records seen), with positions
// marked through a third variable counting "position - r". The outer sum
// over the r-th record's value h is truncated at H; the h > H remainder is
// certified by tail_bound(n) = n q^H.
//
// value_coeff(n, r, h): mass of length-n words whose r-th record has value
// h (letters otherwise unbounded). position_coeff(n, r, j): mass with the
// r-th record at position j, summed over record values h <= H.
class GfTable {
 public:
  GfTable(long n_max, long r_max, long H, Mode mode, const ModelParams& params);

  long n_max() const { return n_max_; }
  long r_max() const { return r_max_; }
  long H() const { return H_; }
  Mode mode() const { return mode_; }

  Rational value_coeff(long n, long r, long h) const;
  Rational position_coeff(long n, long r, long j) const;

  Rational pi(long n, long r) const;                // sum_h value_coeff
  Rational value_partial(long n, long r) const;     // sum_h h value_coeff
  Rational position_partial(long n, long r) const;  // sum_j j position_coeff

  Rational tail_bound(long n) const;           // n q^H
  Rational value_tail_bound(long n) const;     // n q^H (H + 1/p)
  Rational position_tail_bound(long n) const;  // n^2 q^H

  Rational& value_slot(long n, long r, long h);
  Rational& position_slot(long n, long r, long j);

 private:
  size_t value_index(long n, long r, long h) const;
  size_t position_index(long n, long r, long j) const;
  void check_nr(long n, long r) const;

  long n_max_, r_max_, H_;
  Mode mode_;
  Rational q_pow_H_;
  Rational inv_p_;
  std::vector<Rational> value_;
  std::vector<Rational> position_;
};

// Expands the strict or weak record generating function with exact rational
// arithmetic, one running product over record values h = 1..H. Requires
// H >= r_max (a cutoff below r_max cannot see an r-th record at all).
GfTable gf_expand(const ModelParams& params, long n_max, long r_max, Mode mode, long H);

}  // namespace georec
