#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace arcdiag {

/// Arbitrary-precision nonnegative integer used for every sequence value.
using BigCount = boost::multiprecision::mpz_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

}  // namespace arcdiag
