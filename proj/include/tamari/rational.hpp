#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <utility>

namespace tamari {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

/// Binomial coefficient C(n, k), zero for k < 0 or k > n. Pascal recurrence
/// with memoization; n may be any nonnegative long.
inline const Int& binomial(long n, long k) {
    static const Int zero = 0;
    static std::map<std::pair<long, long>, Int> cache;
    if (k < 0 || k > n || n < 0) return zero;
    if (k == 0 || k == n) {
        static const Int one = 1;
        return one;
    }
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Int v = binomial(n - 1, k - 1) + binomial(n - 1, k);
    return cache.emplace(key, std::move(v)).first->second;
}

/// Asserts r is an integer and returns it.
inline Int require_integral(const Rat& r, const char* what) {
    if (denominator(r) != 1)
        throw std::logic_error(std::string("non-integral value in ") + what);
    return numerator(r);
}

} // namespace tamari
