#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "dyck/arith.hpp"

namespace dyck {

/// A finitely supported sequence of non-negative integers
/// a = (a_1, a_2, ...). Canonical form has no trailing zero, so
/// structural equality coincides with mathematical equality.
class MultSeq {
public:
    MultSeq() = default;
    explicit MultSeq(std::vector<long long> entries) : entries_(std::move(entries)) {
        for (long long e : entries_)
            if (e < 0) throw std::invalid_argument("MultSeq: negative entry");
        trim();
    }
    MultSeq(std::initializer_list<long long> entries)
        : MultSeq(std::vector<long long>(entries)) {}

    const std::vector<long long>& entries() const { return entries_; }

    // a_i, 1-based; zero beyond the stored support
    long long at(std::size_t i) const {
        return (i >= 1 && i <= entries_.size()) ? entries_[i - 1] : 0;
    }

    /// ||a|| = sum of i * a_i
    long long norm() const {
        long long s = 0;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            s += static_cast<long long>(i + 1) * entries_[i];
        return s;
    }

    /// |a| = sum of a_i
    long long size() const {
        long long s = 0;
        for (long long e : entries_) s += e;
        return s;
    }

    /// l(a) = number of nonzero entries
    long long support_len() const {
        return std::count_if(entries_.begin(), entries_.end(),
                             [](long long e) { return e != 0; });
    }

    bool dominates(const MultSeq& a) const {
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            if (a.entries_[i] > at(i + 1)) return false;
        return true;
    }

    /// componentwise difference; requires *this >= a
    MultSeq minus(const MultSeq& a) const {
        if (!dominates(a)) throw std::invalid_argument("MultSeq::minus: not dominated");
        std::vector<long long> e = entries_;
        for (std::size_t i = 0; i < a.entries_.size(); ++i) e[i] -= a.entries_[i];
        return MultSeq(std::move(e));
    }

    friend bool operator==(const MultSeq&, const MultSeq&) = default;
    friend auto operator<=>(const MultSeq& a, const MultSeq& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    void trim() {
        while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
    }
    std::vector<long long> entries_;
};

inline long long norm(const MultSeq& a) { return a.norm(); }
inline long long size(const MultSeq& a) { return a.size(); }
inline long long support_len(const MultSeq& a) { return a.support_len(); }

/// h(a) = |a|! / prod a_i!, the number of orderings of the part multiset.
inline BigNat h(const MultSeq& a) {
    BigNat r = factorial(a.size());
    for (long long e : a.entries()) r /= factorial(e);
    return r;
}

/// All multiplicity sequences with ||a|| = d, one per integer partition
/// of d. Order: ascending largest part, ties by descending entry list,
/// so d=3 yields (3), (1,1), (0,0,1).
inline std::vector<MultSeq> sequences_with_norm(long long d) {
    if (d < 1) throw std::invalid_argument("sequences_with_norm: d must be >= 1");
    std::vector<MultSeq> out;
    std::vector<long long> mult(static_cast<std::size_t>(d), 0);
    // recurse over parts of size <= maxpart, largest part first
    auto rec = [&](auto&& self, long long remaining, long long maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(mult);
            return;
        }
        for (long long part = std::min(remaining, maxpart); part >= 1; --part) {
            mult[static_cast<std::size_t>(part - 1)] += 1;
            self(self, remaining - part, part);
            mult[static_cast<std::size_t>(part - 1)] -= 1;
        }
    };
    rec(rec, d, d);
    // generation order is descending largest part; the fixed public
    // order is ascending largest part (matches the worked 3x3 breakdown)
    std::reverse(out.begin(), out.end());
    return out;
}

/// B_c^j: all a <= c (componentwise) with |a| = |c| - j.
inline std::vector<MultSeq> below_set(const MultSeq& c, long long j) {
    if (j < 0 || j >= c.size())
        throw std::invalid_argument("below_set: need 0 <= j < |c|");
    const long long target = c.size() - j;
    std::vector<MultSeq> out;
    std::vector<long long> cur(c.entries().size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, long long sz) -> void {
        if (sz > target) return;
        if (idx == cur.size()) {
            if (sz == target) out.emplace_back(cur);
            return;
        }
        for (long long v = 0; v <= c.entries()[idx]; ++v) {
            cur[idx] = v;
            self(self, idx + 1, sz + v);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

/// Checks sum_{a in B_c^j} (||a||/|a|) h(a) h(c-a) = (||c||/|c|) h(c)
/// in exact rational arithmetic.
inline bool check_hh_identity(const MultSeq& c, long long j) {
    if (c.size() == 0) throw std::invalid_argument("check_hh_identity: |c| = 0");
    if (j < 0 || j > c.size() - 1)
        throw std::invalid_argument("check_hh_identity: need 0 <= j <= |c|-1");
    BigRat lhs = 0;
    for (const MultSeq& a : below_set(c, j)) {
        lhs += BigRat(a.norm(), a.size()) * BigRat(h(a)) * BigRat(h(c.minus(a)));
    }
    const BigRat rhs = BigRat(c.norm(), c.size()) * BigRat(h(c));
    return lhs == rhs;
}

namespace detail {

// sum over ||a|| = t of prod_j (1/a_j!) x_j^{a_j}; empty product 1 at t=0
inline BigRat elementary_norm_sum(long long t, const std::vector<BigRat>& xs) {
    if (t == 0) return 1;
    BigRat total = 0;
    for (const MultSeq& a : sequences_with_norm(t)) {
        BigRat term = 1;
        for (std::size_t i = 0; i < a.entries().size(); ++i) {
            const long long ai = a.entries()[i];
            if (ai == 0) continue;
            BigRat p = 1;
            for (long long e = 0; e < ai; ++e) p *= xs[i];
            term *= p / BigRat(factorial(ai));
        }
        total += term;
    }
    return total;
}

}  // namespace detail

/// Evaluates both sides of the d-variable polynomial identity
///   sum_{i=1..d} (i/d) x_i sum_{||a||=d-i} prod (1/a_j!) x_j^{a_j}
///     = sum_{||a||=d} prod (1/a_i!) x_i^{a_i}
/// at the given rational point and compares exactly.
inline bool check_coef_identity(long long d, const std::vector<BigRat>& xs) {
    if (d < 1) throw std::invalid_argument("check_coef_identity: d must be >= 1");
    if (static_cast<long long>(xs.size()) != d)
        throw std::invalid_argument("check_coef_identity: need exactly d values");
    BigRat lhs = 0;
    for (long long i = 1; i <= d; ++i)
        lhs += BigRat(i, d) * xs[static_cast<std::size_t>(i - 1)] *
               detail::elementary_norm_sum(d - i, xs);
    return lhs == detail::elementary_norm_sum(d, xs);
}

}  // namespace dyck
