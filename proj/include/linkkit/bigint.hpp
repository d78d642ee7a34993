#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace linkkit {
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
}  // namespace linkkit
