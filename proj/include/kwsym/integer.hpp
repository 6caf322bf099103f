#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace kwsym {

/// Exact unbounded integer used for every factorial-scale count.
using BigInt = boost::multiprecision::cpp_int;

/// Default upper bound on enumerations and dense constructions.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

BigInt factorial(int n);

/// v * (v-1) * ... * (v-k+1); 1 when k == 0.
BigInt falling_factorial(int v, int k);

}  // namespace kwsym
