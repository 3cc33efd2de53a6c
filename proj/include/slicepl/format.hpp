#pragma once

#include <string>

#include "slicepl/quaternion.hpp"

namespace slicepl {

// Shortest decimal that reads back to the same double ("inf", "-inf", "nan"
// for non-finite values).
std::string shortest(double v);

// 17 significant digits; -0 is printed as 0.
std::string digits17(double v);

// "[w,x,y,z]" with 17 significant digits.
std::string format_quaternion17(const Quaternion& q);

}  // namespace slicepl
