#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mislab {

// Exact natural numbers. MIS counts and maximal products grow like 3^(n/3),
// past 64 bits once n is around 122.
using BigNat = boost::multiprecision::cpp_int;

inline std::string to_string(const BigNat& x) { return x.str(); }

// Parses a non-empty run of decimal digits. Throws std::invalid_argument otherwise.
BigNat parse_bignat(std::string_view text);

}  // namespace mislab
