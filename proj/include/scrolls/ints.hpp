#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace scrolls {

/// Exact integer used for every degree, genus and intersection number.
using Int = boost::multiprecision::cpp_int;

Int factorial(long n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Int binomial(long n, long k);

/// Catalan number C(k) = (2k)! / (k! (k+1)!).
Int catalan(long k);

/// Partition function p(k), via the Euler pentagonal-number recurrence.
Int partition_count(long k);

std::string to_decimal(const Int& v);

}  // namespace scrolls
