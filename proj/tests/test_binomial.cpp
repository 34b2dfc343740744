#include "liecoh/binomial_arith.hpp"

#include <doctest.h>

using namespace liecoh;

TEST_CASE("binomial gcds")
{
    CHECK(b_gcd(4, 2) == 2);
    CHECK(b_gcd(7, 1) == 7);
    CHECK(b_gcd(8, 4) == 2); // gcd(8, 28, 56, 70)
    CHECK(b_gcd(12, 12) == 1);
    CHECK_THROWS(b_gcd(4, 5));
}

TEST_CASE("prime-power partition")
{
    QPartition q12 = q_partition(12);
    CHECK(q12.qp.at(2) == std::vector<long>{2, 4});
    CHECK(q12.qp.at(3) == std::vector<long>{3});
    CHECK(q12.q0 == std::vector<long>{5, 6, 7, 8, 9, 10, 11, 12});

    QPartition q6 = q_partition(6);
    CHECK(q6.qp.at(2) == std::vector<long>{2});
    CHECK(q6.qp.at(3) == std::vector<long>{3});

    QPartition q7 = q_partition(7);
    CHECK(q7.qp.at(7) == std::vector<long>{7});
    CHECK(q7.q0 == std::vector<long>{2, 3, 4, 5, 6});
}

TEST_CASE("gcd ratios")
{
    CHECK(a_ratio(6, 2) == 2);
    CHECK(a_ratio(6, 3) == 3);
    CHECK(a_ratio(6, 5) == 1);
    for (long n = 3; n <= 60; ++n)
        for (long k = 2; k <= n; ++k) CHECK_NOTHROW(a_ratio(n, k));
}

TEST_CASE("binomial valuations")
{
    CHECK(ord_p_binom_checked(8, 2, 2) == 2);
    CHECK(ord_p_binom_checked(8, 3, 2) == 3);
    CHECK_THROWS(ord_p_binom_checked(9, 3, 3)); // t + 1 = r, outside the precondition
}

TEST_CASE("h sequences")
{
    CHECK(h_sequence(2, 2, 1) == std::vector<Int>{1});  // C(4,2) - 2 = 4 = 1 * C(4,1)
    CHECK(h_sequence(2, 3, 1) == std::vector<Int>{3});  // 28 - 4 = 24 = 3 * 8
    CHECK(h_sequence(3, 1, 1) == std::vector<Int>{0});  // C(3,3) - 1 = 0
    // re-multiplied certificates for a spread of prime powers
    for (long p : {2L, 3L, 5L})
        for (long r = 1; r <= 4; ++r)
            for (long s = 1; s <= r; ++s) CHECK_NOTHROW(h_sequence(p, r, s));
}

TEST_CASE("transfer values at n = 8")
{
    CHECK(theta_gamma(2, 3, {2}).str() == "4*w");     // singleton p^1: 2^{3-1} w^{2-1}
    CHECK(theta_gamma(2, 3, {1}).str() == "8");       // the covering degree
    CHECK(theta_gamma(2, 3, {1, 2, 4}).str() == "2*rho3*rho7");
    CHECK(theta_gamma(2, 3, {1, 2, 8}).str() == "2*rho3*rho15 + w^4*rho3*rho7");
    CHECK(theta_gamma(2, 3, {1, 4, 8}).str() == "2*rho7*rho15 + w^2*rho3*rho15");
    CHECK(theta_gamma(2, 3, {2, 4, 8}).str() == "w*rho7*rho15");
    CHECK(theta_gamma(2, 3, {1, 2, 4, 8}).str() == "rho3*rho7*rho15");
    CHECK_THROWS(theta_gamma(2, 3, {5}));
    CHECK_THROWS(theta_gamma(2, 3, {2, 2}));
}

TEST_CASE("transfer expressions normalize against the omega torsion")
{
    // at n = 2^2: 4w = 0, 2w^2 = 0, w^4 = 0
    ThetaExpression t = theta_gamma(2, 2, {1});
    CHECK(t.str() == "4"); // degree-0 value is untouched
    ThetaExpression t2 = theta_gamma(2, 2, {2});
    CHECK(t2.str() == "2*w");
    ThetaExpression t4 = theta_gamma(2, 2, {4});
    CHECK(t4.str() == "w^3");
}
