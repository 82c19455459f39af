#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace relweyl {

// Exact arithmetic everywhere; no floating point in any computational path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// Serialized form is "p" for integers and "p/q" otherwise, q > 0.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

bool is_prime(std::uint64_t n);

}  // namespace relweyl
