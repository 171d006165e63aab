#include "georec/real.hpp"

#include <vector>

namespace georec {

std::string Real::str(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  std::vector<char> buf(static_cast<size_t>(significant_digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, v_);
  return std::string(buf.data());
}

}  // namespace georec
