#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dyck/arith.hpp"
#include "dyck/partitions.hpp"
#include "dyck/paths.hpp"

namespace dyck {

enum class CountMethod { coprime, main, recurrence, fuss, duchon, oracle };

struct CountResult {
    BigNat value;
    CountMethod method = CountMethod::main;
    // per-partition term breakdown, in enumeration order; sums to value
    std::vector<std::pair<MultSeq, BigRat>> terms;
};

/// C(m,n) = binom(m+n, n) / (m+n), valid only for coprime (m,n).
inline BigNat count_coprime(long long m, long long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("count_coprime: m,n >= 1");
    if (std::gcd(m, n) != 1)
        throw std::invalid_argument("count_coprime: gcd(m,n) must be 1");
    return rat_to_nat(a_value(m, n));
}

/// Main formula: C(m,n) = sum over ||a|| = d of prod_i (1/a_i!) A_{(ip,iq)}^{a_i}
/// with d = gcd(m,n), p = m/d, q = n/d. The rational total must be an
/// integer; anything else means a broken implementation.
inline CountResult count_main(long long m, long long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("count_main: m,n >= 1");
    const long long d = std::gcd(m, n);
    const long long p = m / d, q = n / d;
    std::vector<BigRat> a_vals;  // A_1..A_d
    for (long long i = 1; i <= d; ++i) a_vals.push_back(a_value(i * p, i * q));

    CountResult res;
    BigRat total = 0;
    for (const MultSeq& a : sequences_with_norm(d)) {
        BigRat term = 1;
        for (std::size_t i = 0; i < a.entries().size(); ++i) {
            const long long ai = a.entries()[i];
            if (ai == 0) continue;
            BigRat pw = 1;
            for (long long e = 0; e < ai; ++e) pw *= a_vals[i];
            term *= pw / BigRat(factorial(ai));
        }
        total += term;
        res.terms.emplace_back(a, term);
    }
    res.value = rat_to_nat(total);
    return res;
}

/// Recurrence route: C~_k = sum_{i=1..k} (i/k) A_i C~_{k-i}, C~_0 = 1.
/// Every C~_k along the way must be integral.
inline BigNat count_recurrence(long long m, long long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("count_recurrence: m,n >= 1");
    const long long d = std::gcd(m, n);
    const long long p = m / d, q = n / d;
    std::vector<BigRat> a_vals;
    for (long long i = 1; i <= d; ++i) a_vals.push_back(a_value(i * p, i * q));
    std::vector<BigNat> c_tilde{1};
    for (long long k = 1; k <= d; ++k) {
        BigRat acc = 0;
        for (long long i = 1; i <= k; ++i)
            acc += BigRat(i, k) * a_vals[static_cast<std::size_t>(i - 1)] *
                   BigRat(c_tilde[static_cast<std::size_t>(k - i)]);
        c_tilde.push_back(rat_to_nat(acc));
    }
    return c_tilde[static_cast<std::size_t>(d)];
}

/// Fuss formula: C(kn, n) = binom((k+1)n, n) / (kn + 1).
inline BigNat count_fuss(long long k, long long n) {
    if (k < 1 || n < 1) throw std::invalid_argument("count_fuss: k,n >= 1");
    return rat_to_nat(BigRat(binomial((k + 1) * n, n), k * n + 1));
}

/// C(2l, 3l) = sum_{i=0..5} binom(5l+1, l-i) binom(5l+2i, i) / (5l+i+1).
/// Cross-checked against the main formula on every call.
inline BigNat count_duchon(long long l) {
    if (l < 1) throw std::invalid_argument("count_duchon: l >= 1");
    BigRat total = 0;
    for (long long i = 0; i <= 5; ++i)
        total += BigRat(binomial(5 * l + 1, l - i) * binomial(5 * l + 2 * i, i),
                        5 * l + i + 1);
    const BigNat v = rat_to_nat(total);
    if (v != count_main(2 * l, 3 * l).value)
        throw std::logic_error("count_duchon: disagrees with the main formula");
    return v;
}

/// [C_0, ..., C_nmax] via C_0 = 1, C_n = sum C_i C_{n-1-i}.
inline std::vector<BigNat> catalan_sequence(long long nmax) {
    std::vector<BigNat> c{1};
    for (long long n = 1; n <= nmax; ++n) {
        BigNat v = 0;
        for (long long i = 0; i < n; ++i)
            v += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - 1 - i)];
        c.push_back(v);
    }
    return c;
}

/// (i/n) A_{(i,i)} C_{n-i} + ((n-i+1)/n) A_{(n-i+1,n-i+1)} C_{i-1}
///   = 2 C_{n-i} C_{i-1}, exactly.
inline bool check_catalan_reduction(long long n, long long i) {
    if (i < 1 || i > n) throw std::invalid_argument("check_catalan_reduction: 1 <= i <= n");
    const std::vector<BigNat> c = catalan_sequence(n);
    const BigRat lhs =
        BigRat(i, n) * a_value(i, i) * BigRat(c[static_cast<std::size_t>(n - i)]) +
        BigRat(n - i + 1, n) * a_value(n - i + 1, n - i + 1) *
            BigRat(c[static_cast<std::size_t>(i - 1)]);
    const BigRat rhs = BigRat(2) * BigRat(c[static_cast<std::size_t>(n - i)]) *
                       BigRat(c[static_cast<std::size_t>(i - 1)]);
    return lhs == rhs;
}

/// C(kn, n) = sum over (n_1..n_{k+1}) >= 0 with sum = n-1 of
/// prod C(k n_i, n_i), with the n_i = 0 factor equal to 1.
inline bool check_fuss_recurrence(long long k, long long n) {
    if (k < 1 || n < 1) throw std::invalid_argument("check_fuss_recurrence: k,n >= 1");
    auto fuss_or_one = [&](long long t) { return t == 0 ? BigNat(1) : count_fuss(k, t); };
    BigNat total = 0;
    std::vector<long long> tuple(static_cast<std::size_t>(k + 1), 0);
    auto rec = [&](auto&& self, std::size_t idx, long long remaining) -> void {
        if (idx + 1 == tuple.size()) {
            tuple[idx] = remaining;
            BigNat prod = 1;
            for (long long t : tuple) prod *= fuss_or_one(t);
            total += prod;
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            tuple[idx] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    rec(rec, 0, n - 1);
    return total == count_fuss(k, n);
}

}  // namespace dyck
