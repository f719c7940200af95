#pragma once

#include <stdexcept>
#include <string>

#include "bbwu/weights.hpp"

namespace bbwu::detail {

// Division that must leave no remainder; a remainder means a formula was
// mis-evaluated, so it is a logic error rather than a user-facing one.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* where) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw std::logic_error(std::string(where) + ": inexact division " + num.str() + " / " +
                           den.str());
  }
  return q;
}

inline BigInt factorial(Entry m) {
  BigInt f = 1;
  for (Entry i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace bbwu::detail
