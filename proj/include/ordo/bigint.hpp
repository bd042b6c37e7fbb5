#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ordo {

// Exact integer arithmetic everywhere: rook numbers grow factorially in the
// board size, so no fixed-width type is used for any count or coefficient.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is a binomial coefficient after each step
    }
    return r;
}

// m (m-1) ... (m-s+1); equals m!/(m-s)! for m >= s, zero when s > m.
inline BigInt falling_factorial(int m, int s) {
    if (s < 0) throw std::invalid_argument("falling_factorial: negative step count");
    if (s > m) return 0;
    BigInt r = 1;
    for (int i = 0; i < s; ++i) r *= m - i;
    return r;
}

}  // namespace ordo
