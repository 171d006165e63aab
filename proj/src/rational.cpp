#include "georec/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace georec {

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return Integer(0);
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow_rational(const Rational& a, unsigned long e) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), a.get_num_mpz_t(), e);
  mpz_pow_ui(result.get_den_mpz_t(), a.get_den_mpz_t(), e);
  return result;  // powers of a canonical fraction stay canonical
}

namespace {

Integer parse_integer(const std::string& text) {
  Integer z;
  if (text.empty() || mpz_set_str(z.get_mpz_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return z;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const auto dot = text.find('.');
  if (slash != std::string::npos && dot != std::string::npos) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (slash != std::string::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    return make_rational(num, den);
  }
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = false;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
      negative = head[0] == '-';
      head = head.substr(1);
    }
    if (head.empty()) head = "0";
    if (!all_digits(head) || !all_digits(frac)) {
      throw std::invalid_argument("not a decimal: '" + text + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer units = parse_integer(head) * scale + parse_integer(frac);
    Rational r = make_rational(units, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace georec
