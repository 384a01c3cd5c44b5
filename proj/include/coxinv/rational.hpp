#ifndef COXINV_RATIONAL_HPP
#define COXINV_RATIONAL_HPP

#include <cstdint>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace coxinv {

using Rational = boost::rational<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace coxinv

#endif  // COXINV_RATIONAL_HPP
