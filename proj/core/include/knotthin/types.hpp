#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace knotthin {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::rational<BigInt>;

}  // namespace knotthin
