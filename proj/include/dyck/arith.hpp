#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dyck {

// All counts live in arbitrary-precision integers; all intermediate
// quantities that may be fractional live in exact rationals kept in
// lowest terms with positive denominator.
using BigNat = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigNat factorial(long long n) {
    BigNat r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// n-choose-k; out-of-range k (k < 0 or k > n) yields 0 so that
/// unrestricted summation indices work.
inline BigNat binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigNat r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

inline bool is_integral(const BigRat& x) {
    return boost::multiprecision::denominator(x) == 1;
}

/// Extracts the integer value of an exact-integer rational.
inline BigNat rat_to_nat(const BigRat& x) {
    if (!is_integral(x))
        throw std::logic_error("expected an integral rational, got " +
                               x.str());
    BigNat v = boost::multiprecision::numerator(x);
    if (v < 0) throw std::logic_error("expected a non-negative value");
    return v;
}

/// A_{(m,n)} = binom(m+n, n) / (m+n), exact and in lowest terms.
/// Integral whenever gcd(m,n) = 1.
inline BigRat a_value(long long m, long long n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("a_value: m and n must be >= 1");
    return BigRat(binomial(m + n, n), m + n);
}

}  // namespace dyck
