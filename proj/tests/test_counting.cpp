#include "doctest.h"

#include "dyck/counting.hpp"

#include <numeric>

using dyck::BigNat;
using dyck::BigRat;
using dyck::MultSeq;

TEST_CASE("count_coprime") {
    CHECK(dyck::count_coprime(5, 3) == 7);
    CHECK(dyck::count_coprime(1, 1) == 1);
    CHECK(dyck::count_coprime(2, 3) == 2);
    CHECK_THROWS_AS(dyck::count_coprime(2, 2), std::invalid_argument);
}

TEST_CASE("count_main worked example (3,3)") {
    const auto res = dyck::count_main(3, 3);
    CHECK(res.value == 5);
    REQUIRE(res.terms.size() == 3);
    CHECK(res.terms[0].first == MultSeq{3});
    CHECK(res.terms[0].second == BigRat(1, 6));
    CHECK(res.terms[1].first == MultSeq{1, 1});
    CHECK(res.terms[1].second == BigRat(3, 2));
    CHECK(res.terms[2].first == MultSeq{0, 0, 1});
    CHECK(res.terms[2].second == BigRat(10, 3));
    BigRat sum = 0;
    for (const auto& [a, t] : res.terms) sum += t;
    CHECK(sum == 5);
}

TEST_CASE("count_main further values") {
    CHECK(dyck::count_main(4, 6).value == 23);
    for (long long m = 1; m <= 10; ++m)
        for (long long n = 1; n <= 10; ++n)
            if (std::gcd(m, n) == 1)
                CHECK(dyck::count_main(m, n).value == dyck::count_coprime(m, n));
}

TEST_CASE("count_recurrence") {
    CHECK(dyck::count_recurrence(3, 3) == 5);
    CHECK(dyck::count_recurrence(2, 2) == 2);
    CHECK(dyck::count_recurrence(5, 3) == dyck::count_coprime(5, 3));
}

TEST_CASE("cross-method equality against the DP oracle") {
    for (long long m = 1; m <= 10; ++m)
        for (long long n = 1; n <= 10; ++n) {
            const BigNat oracle = dyck::count_dp(m, n, false);
            CHECK(dyck::count_main(m, n).value == oracle);
            CHECK(dyck::count_recurrence(m, n) == oracle);
        }
}

TEST_CASE("count_fuss") {
    CHECK(dyck::count_fuss(1, 3) == 5);
    CHECK(dyck::count_fuss(2, 2) == 3);
    CHECK(dyck::count_fuss(3, 1) == 1);
    CHECK(dyck::count_fuss(2, 2) == dyck::count_dp(4, 2, false));
}

TEST_CASE("count_duchon") {
    CHECK(dyck::count_duchon(1) == 2);
    CHECK(dyck::count_duchon(2) == 23);
    CHECK(dyck::count_duchon(3) == dyck::count_main(6, 9).value);
}

TEST_CASE("catalan_sequence") {
    CHECK(dyck::catalan_sequence(3) == std::vector<BigNat>{1, 1, 2, 5});
    CHECK(dyck::catalan_sequence(0) == std::vector<BigNat>{1});
    CHECK(dyck::catalan_sequence(5).back() == 42);
    for (long long n = 1; n <= 8; ++n)
        CHECK(dyck::catalan_sequence(n).back() == dyck::count_main(n, n).value);
}

TEST_CASE("check_catalan_reduction") {
    CHECK(dyck::check_catalan_reduction(3, 1));
    CHECK(dyck::check_catalan_reduction(1, 1));
    CHECK(dyck::check_catalan_reduction(10, 4));
    CHECK_THROWS_AS(dyck::check_catalan_reduction(3, 4), std::invalid_argument);
}

TEST_CASE("check_fuss_recurrence") {
    CHECK(dyck::check_fuss_recurrence(1, 4));
    CHECK(dyck::check_fuss_recurrence(2, 1));
    CHECK(dyck::check_fuss_recurrence(2, 3));
    CHECK(dyck::count_fuss(2, 3) == 12);
    CHECK(dyck::count_dp(6, 3, false) == 12);
}

TEST_CASE("chaD at formula level for small primitive slopes") {
    // C~_d = sum over ||a||=d of h(a) D^a
    const std::vector<std::pair<long long, long long>> slopes{{1, 1}, {1, 2}, {2, 3}, {1, 3}};
    for (const auto& [p, q] : slopes)
        for (long long d = 1; d * (p + q) <= 12; ++d) {
            BigNat sum = 0;
            for (const MultSeq& a : dyck::sequences_with_norm(d))
                sum += dyck::h(a) * dyck::d_power(p, q, a);
            CHECK(sum == dyck::count_dp(d * p, d * q, false));
        }
}

TEST_CASE("ahaD at formula level for small primitive slopes") {
    // A_d = sum over ||a||=d of (1/|a|) h(a) D^a
    const std::vector<std::pair<long long, long long>> slopes{{1, 1}, {1, 2}, {2, 3}};
    for (const auto& [p, q] : slopes)
        for (long long d = 1; d * (p + q) <= 12; ++d) {
            BigRat sum = 0;
            for (const MultSeq& a : dyck::sequences_with_norm(d))
                sum += BigRat(dyck::h(a) * dyck::d_power(p, q, a)) / BigRat(a.size());
            CHECK(sum == dyck::a_value(d * p, d * q));
        }
}
