#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zpw {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace zpw
