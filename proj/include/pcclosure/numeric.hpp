#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pcc {

// Arbitrary-precision integers and rationals. All arithmetic in this
// library is exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }


std::string int_str(const Int& n);
std::string rat_str(const Rat& q);

}  // namespace pcc
