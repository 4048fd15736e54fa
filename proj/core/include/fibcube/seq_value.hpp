#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibcube {

/// Exact nonnegative sequence value (Fibonacci numbers, binomials, q_k(n)).
using SeqValue = boost::multiprecision::cpp_int;

/// Exact rational used for density ratios.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const SeqValue& v) { return v.str(); }

}  // namespace fibcube
