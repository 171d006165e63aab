#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "georec/rational.hpp"

namespace georec {

// Formal power series truncated at a fixed order N: coefficients 0..N are
// exact, everything above is dropped. The coefficient ring is a template
// parameter so series can nest (a series whose coefficients are series),
// which is how the bivariate and trivariate expansions are represented.
//
// Binary operations require both operands to share the same order.
template <typename Coeff>
class TruncatedSeries {
 public:
  TruncatedSeries(long order, const Coeff& zero)
      : coeffs_(checked_size(order), zero) {}

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }

  const Coeff& operator[](long m) const { return coeffs_.at(static_cast<size_t>(m)); }
  Coeff& operator[](long m) { return coeffs_.at(static_cast<size_t>(m)); }

  TruncatedSeries& operator+=(const TruncatedSeries& other) {
    require_same_order(other);
    for (size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] += other.coeffs_[m];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& other) {
    require_same_order(other);
    for (size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] -= other.coeffs_[m];
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a += b;
    return a;
  }

  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    a -= b;
    return a;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    TruncatedSeries result(a);
    for (long m = a.order(); m >= 0; --m) {
      Coeff acc = a[0] * b[m];
      for (long i = 1; i <= m; ++i) acc += a[i] * b[m - i];
      result[m] = acc;
    }
    return result;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries result(a);
    for (auto& c : result.coeffs_) c = -c;
    return result;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

 private:
  static size_t checked_size(long order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    return static_cast<size_t>(order) + 1;
  }

  void require_same_order(const TruncatedSeries& other) const {
    if (coeffs_.size() != other.coeffs_.size()) {
      throw std::invalid_argument("series order mismatch");
    }
  }

  std::vector<Coeff> coeffs_;
};

template <typename Coeff>
TruncatedSeries<Coeff> series_mul(const TruncatedSeries<Coeff>& a,
                                  const TruncatedSeries<Coeff>& b) {
  return a * b;
}

// 1/(1 - a w) to the given order: coefficient m equals a^m.
inline TruncatedSeries<Rational> geometric_factor(const Rational& a, long order) {
  TruncatedSeries<Rational> s(order, Rational(0));
  s[0] = 1;
  for (long m = 1; m <= order; ++m) s[m] = Rational(s[m - 1] * a);
  return s;
}

// Multiplies every (possibly nested) coefficient by a rational scalar.
inline void scale_in_place(Rational& x, const Rational& c) { x *= c; }

template <typename Coeff>
void scale_in_place(TruncatedSeries<Coeff>& s, const Rational& c) {
  for (long m = 0; m <= s.order(); ++m) scale_in_place(s[m], c);
}

template <typename T>
T scaled(T value, const Rational& c) {
  scale_in_place(value, c);
  return value;
}

}  // namespace georec
