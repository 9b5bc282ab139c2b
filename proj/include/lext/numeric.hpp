#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lext {

// Exact arithmetic everywhere; no floating point in any computation path.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline Integer to_integer(const Rational& q) {
    if (!is_integral(q)) {
        throw std::invalid_argument("rational is not an integer: " + q.str());
    }
    return numerator(q);
}

inline long long to_long(const Integer& n) {
    if (n > (std::numeric_limits<long long>::max)() ||
        n < (std::numeric_limits<long long>::min)()) {
        throw std::overflow_error("integer does not fit in long long: " + n.str());
    }
    return static_cast<long long>(n);
}

/// Canonical representative of a mod n in [0, n).
inline long long mod_residue(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
    }
    return to_long(acc);
}

/// Divisors of n in increasing order.
inline std::vector<long long> divisors(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline long long totient(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline int mobius(long long n) {
    int sign = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;  // squareful
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

}  // namespace lext
