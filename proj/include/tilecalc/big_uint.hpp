#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tilecalc {

// Arbitrary precision; only non-negative values are used.
using BigUint = boost::multiprecision::cpp_int;

}  // namespace tilecalc
