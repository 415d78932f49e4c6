#ifndef EKR_BIGINT_HPP
#define EKR_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ekr/error.hpp"

namespace ekr {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

inline BigInt power(const BigInt& base, long long exponent) {
  if (exponent < 0) throw DomainError("negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

/// a! / b! for b <= a; 1 when a == b.
inline BigInt falling_ratio(long long a, long long b) {
  BigInt result = 1;
  for (long long i = b + 1; i <= a; ++i) result *= i;
  return result;
}

/// Exact quotient; throws when the division leaves a remainder.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw DomainError(std::string(what) + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw DomainError(std::string(what) + ": non-integral quotient " + num.str() + "/" + den.str());
  }
  return q;
}

}  // namespace ekr

#endif  // EKR_BIGINT_HPP
