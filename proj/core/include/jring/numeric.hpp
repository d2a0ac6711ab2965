#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace jring {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace jring
