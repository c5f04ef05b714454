#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace alexstrat {

// Exact scalars. Everything downstream (Smith form pivots, Bareiss minors,
// cyclotomic coordinates) assumes arbitrary precision; there are no float paths.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace alexstrat
