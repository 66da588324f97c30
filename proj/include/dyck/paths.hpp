#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyck/arith.hpp"
#include "dyck/partitions.hpp"

namespace dyck {

/// A monotone lattice path as a word over {x (east), y (north)}.
class PathWord {
public:
    PathWord() = default;  // empty prefix
    explicit PathWord(std::string steps) : steps_(std::move(steps)) {
        for (char c : steps_) {
            if (c == 'x') ++m_;
            else if (c == 'y') ++n_;
            else throw std::invalid_argument("PathWord: steps must be 'x' or 'y'");
        }
    }

    const std::string& steps() const { return steps_; }
    long long m() const { return m_; }
    long long n() const { return n_; }
    long long length() const { return m_ + n_; }

    friend bool operator==(const PathWord&, const PathWord&) = default;
    friend auto operator<=>(const PathWord& a, const PathWord& b) {
        return a.steps_ <=> b.steps_;
    }

private:
    std::string steps_;
    long long m_ = 0;
    long long n_ = 0;
};

/// Prefix height n*(#x) - m*(#y) of the first `len` steps of P, against
/// the diagonal of an (m,n) endpoint. Negative means above the diagonal.
inline long long prefix_height(long long m, long long n, const PathWord& p,
                               std::size_t len) {
    long long x = 0, y = 0;
    for (std::size_t i = 0; i < len && i < p.steps().size(); ++i)
        (p.steps()[i] == 'x' ? x : y) += 1;
    return n * x - m * y;
}

inline long long height(long long m, long long n, const PathWord& prefix) {
    return n * prefix.m() - m * prefix.n();
}

/// True iff every prefix stays weakly below the diagonal toward (m,n).
inline bool is_dyck(const PathWord& p) {
    const long long m = p.m(), n = p.n();
    long long hgt = 0;
    for (char c : p.steps()) {
        hgt += (c == 'x') ? n : -m;
        if (hgt < 0) return false;
    }
    return true;
}

/// Cyclic shift: P_s = u_{s+1} ... u_{m+n} u_1 ... u_s.
inline PathWord rotate(const PathWord& p, long long s) {
    const long long len = p.length();
    if (len == 0) throw std::invalid_argument("rotate: empty word");
    s %= len;
    if (s < 0) s += len;
    std::string w = p.steps().substr(static_cast<std::size_t>(s)) +
                    p.steps().substr(0, static_cast<std::size_t>(s));
    return PathWord(std::move(w));
}

/// Smallest r in 1..m+n with rotate(P, r) = P.
inline long long period(const PathWord& p) {
    if (p.length() == 0) throw std::invalid_argument("period: empty word");
    for (long long r = 1; r < p.length(); ++r)
        if (rotate(p, r) == p) return r;
    return p.length();
}

inline std::set<PathWord> rotation_class(const PathWord& p) {
    std::set<PathWord> cls;
    for (long long s = 1; s <= p.length(); ++s) cls.insert(rotate(p, s));
    return cls;
}

/// Rotates P at the y-step where the prefix height is minimal (smallest
/// index on ties); the result is a Dyck path, unique in [P] when
/// gcd(m,n) = 1.
inline PathWord canonical_dyck(const PathWord& p) {
    const long long m = p.m(), n = p.n();
    long long hgt = 0, best = 0, best_pos = 0;
    for (std::size_t i = 0; i < p.steps().size(); ++i) {
        if (p.steps()[i] == 'x') {
            hgt += n;
        } else {
            hgt -= m;
            if (hgt < best) {
                best = hgt;
                best_pos = static_cast<long long>(i) + 1;
            }
        }
    }
    return rotate(p, best_pos);
}

/// Block lengths between consecutive diagonal returns of a Dyck path,
/// as a composition of d = gcd(m,n).
inline std::vector<long long> shape(const PathWord& p) {
    if (!is_dyck(p)) throw std::invalid_argument("shape: not a Dyck path");
    const long long m = p.m(), n = p.n();
    const long long d = std::gcd(m, n);
    const long long block = (m + n) / d;  // steps per diagonal unit
    std::vector<long long> parts;
    long long hgt = 0, prev_k = 0;
    for (std::size_t i = 0; i < p.steps().size(); ++i) {
        hgt += (p.steps()[i] == 'x') ? n : -m;
        const long long pos = static_cast<long long>(i) + 1;
        if (hgt == 0 && pos % block == 0) {
            const long long k = pos / block;
            parts.push_back(k - prev_k);
            prev_k = k;
        }
    }
    return parts;
}

/// Multiplicity sequence of the shape: a_i = #{parts equal to i}.
inline MultSeq type_of(const PathWord& p) {
    const std::vector<long long> parts = shape(p);
    const long long d = std::gcd(p.m(), p.n());
    std::vector<long long> mult(static_cast<std::size_t>(d), 0);
    for (long long e : parts) mult[static_cast<std::size_t>(e - 1)] += 1;
    return MultSeq(std::move(mult));
}

inline long long enumeration_limit() {
    if (const char* env = std::getenv("DYCK_ENUM_LIMIT")) {
        const long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 24;
}

/// All binom(m+n, n) words with m x's and n y's, lexicographic order.
inline std::vector<PathWord> enumerate_paths(long long m, long long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("enumerate_paths: m,n >= 1");
    if (m + n > enumeration_limit())
        throw std::invalid_argument("enumerate_paths: m+n exceeds exhaustive limit");
    std::string w(static_cast<std::size_t>(m), 'x');
    w += std::string(static_cast<std::size_t>(n), 'y');
    std::vector<PathWord> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Grid DP oracle. strict=false counts paths weakly below the diagonal
/// (C(m,n)); strict=true forbids every diagonal point except the two
/// endpoints (D(m,n)).
inline BigNat count_dp(long long m, long long n, bool strict) {
    if (m < 1 || n < 1) throw std::invalid_argument("count_dp: m,n >= 1");
    auto admissible = [&](long long x, long long y) {
        const long long hgt = n * x - m * y;
        if (strict) {
            if ((x == 0 && y == 0) || (x == m && y == n)) return true;
            return hgt > 0;
        }
        return hgt >= 0;
    };
    std::vector<std::vector<BigNat>> dp(
        static_cast<std::size_t>(m + 1),
        std::vector<BigNat>(static_cast<std::size_t>(n + 1), 0));
    dp[0][0] = 1;
    for (long long x = 0; x <= m; ++x)
        for (long long y = 0; y <= n; ++y) {
            if (x == 0 && y == 0) continue;
            if (!admissible(x, y)) continue;
            BigNat v = 0;
            if (x > 0) v += dp[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y)];
            if (y > 0) v += dp[static_cast<std::size_t>(x)][static_cast<std::size_t>(y - 1)];
            dp[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = v;
        }
    return dp[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

/// [D(p,q), D(2p,2q), ..., D(dmax p, dmax q)] computed by strict DP and
/// re-derived via the first-return recursion D_d = C~_d - sum D_i C~_{d-i};
/// throws if the two routes disagree.
inline std::vector<BigNat> primitive_counts(long long p, long long q, long long dmax) {
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("primitive_counts: gcd(p,q) must be 1");
    if (dmax < 1) throw std::invalid_argument("primitive_counts: dmax >= 1");
    std::vector<BigNat> d_strict, c_full;
    for (long long i = 1; i <= dmax; ++i) {
        d_strict.push_back(count_dp(i * p, i * q, true));
        c_full.push_back(count_dp(i * p, i * q, false));
    }
    // first-return route, C~_0 = 1
    std::vector<BigNat> d_rec(static_cast<std::size_t>(dmax));
    for (long long dd = 1; dd <= dmax; ++dd) {
        BigNat v = c_full[static_cast<std::size_t>(dd - 1)];
        for (long long i = 1; i < dd; ++i)
            v -= d_rec[static_cast<std::size_t>(i - 1)] *
                 c_full[static_cast<std::size_t>(dd - i - 1)];
        d_rec[static_cast<std::size_t>(dd - 1)] = v;
    }
    if (d_strict != d_rec)
        throw std::logic_error("primitive_counts: strict DP and first-return recursion disagree");
    return d_strict;
}

/// D^a = prod_i D(ip, iq)^{a_i}; empty product is 1 (so D(0,0)=1 never
/// appears as a path count).
inline BigNat d_power(long long p, long long q, const MultSeq& a) {
    const long long top = static_cast<long long>(a.entries().size());
    BigNat r = 1;
    if (top == 0) return r;
    const std::vector<BigNat> d_vals = primitive_counts(p, q, top);
    for (long long i = 1; i <= top; ++i) {
        const long long ai = a.at(static_cast<std::size_t>(i));
        for (long long e = 0; e < ai; ++e) r *= d_vals[static_cast<std::size_t>(i - 1)];
    }
    return r;
}

struct CensusRecord {
    MultSeq type;
    long long period = 0;
    BigNat count;

    friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// Exhaustively enumerates Dyck paths to (m,n) and aggregates counts
/// E(a,r) by (type, period). Verifies sum_r E(a,r) = h(a) D^a per type.
inline std::vector<CensusRecord> census(long long m, long long n) {
    const long long d = std::gcd(m, n);
    const long long p = m / d, q = n / d;
    std::map<std::pair<MultSeq, long long>, BigNat> agg;
    for (const PathWord& w : enumerate_paths(m, n)) {
        if (!is_dyck(w)) continue;
        agg[{type_of(w), period(w)}] += 1;
    }
    std::map<MultSeq, BigNat> by_type;
    std::vector<CensusRecord> out;
    for (const auto& [key, cnt] : agg) {
        out.push_back({key.first, key.second, cnt});
        by_type[key.first] += cnt;
    }
    for (const auto& [type, total] : by_type) {
        if (total != h(type) * d_power(p, q, type))
            throw std::logic_error("census: per-type total violates h(a) D^a");
    }
    return out;
}

}  // namespace dyck
