#include "doctest.h"

#include "dyck/arith.hpp"

#include <numeric>
#include <vector>

using dyck::BigNat;
using dyck::BigRat;

namespace {

// independent oracle: Pascal's triangle built by addition only
std::vector<std::vector<BigNat>> pascal_triangle(int nmax) {
    std::vector<std::vector<BigNat>> t(static_cast<std::size_t>(nmax + 1));
    for (int n = 0; n <= nmax; ++n) {
        t[n].assign(static_cast<std::size_t>(n + 1), 1);
        for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

}  // namespace

TEST_CASE("binomial basics") {
    CHECK(dyck::binomial(8, 3) == 56);  // frozen from the Pascal oracle
    CHECK(dyck::binomial(5, 0) == 1);
    CHECK(dyck::binomial(6, 7) == 0);
    CHECK(dyck::binomial(6, -1) == 0);
    CHECK_THROWS_AS(dyck::binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial matches Pascal's triangle up to 64") {
    const auto t = pascal_triangle(64);
    for (int n = 0; n <= 64; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(dyck::binomial(n, k) == t[n][k]);
}

TEST_CASE("a_value examples") {
    CHECK(dyck::a_value(2, 2) == BigRat(3, 2));
    CHECK(dyck::a_value(3, 3) == BigRat(10, 3));  // 20/6 in lowest terms
    CHECK(dyck::a_value(1, 1) == 1);
    CHECK_THROWS_AS(dyck::a_value(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(dyck::a_value(1, 0), std::invalid_argument);
}

TEST_CASE("a_value symmetry and coprime integrality") {
    for (long long m = 1; m <= 30; ++m)
        for (long long n = 1; n <= 30; ++n) {
            CHECK(dyck::a_value(m, n) == dyck::a_value(n, m));
            if (std::gcd(m, n) == 1) CHECK(dyck::is_integral(dyck::a_value(m, n)));
        }
}

TEST_CASE("rat_to_nat rejects non-integers") {
    CHECK(dyck::rat_to_nat(BigRat(6, 3)) == 2);
    CHECK_THROWS_AS(dyck::rat_to_nat(BigRat(3, 2)), std::logic_error);
    CHECK_THROWS_AS(dyck::rat_to_nat(BigRat(-2, 1)), std::logic_error);
}
