#include "liecoh/smith.hpp"

#include <doctest.h>

#include <random>

using namespace liecoh;

namespace {

// brute-force oracle: reduce a copy by naive row/column gcd elimination and
// return the sorted elementary divisors via determinant-of-minors gcds
Int minor_gcd(const IntegerMatrix& m, std::size_t k)
{
    // gcd of all k x k minors, recursively expanded (tiny matrices only)
    std::vector<std::size_t> rows(m.rows), cols(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) rows[i] = i;
    for (std::size_t j = 0; j < m.cols; ++j) cols[j] = j;

    std::function<Int(std::vector<std::size_t>, std::vector<std::size_t>)> det =
        [&](std::vector<std::size_t> r, std::vector<std::size_t> c) -> Int {
        if (r.size() == 1) return m.at(r[0], c[0]);
        Int acc = 0;
        int sign = 1;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::vector<std::size_t> r2;
            for (std::size_t t = 0; t < r.size(); ++t)
                if (t != i) r2.push_back(r[t]);
            std::vector<std::size_t> c2(c.begin() + 1, c.end());
            acc += sign * m.at(r[i], c[0]) * det(r2, c2);
            sign = -sign;
        }
        return acc;
    };

    Int g = 0;
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> choose_rows;
    std::vector<std::size_t> rsel, csel;
    std::function<void(std::size_t)> pick_cols = [&](std::size_t start) {
        if (csel.size() == k) {
            g = gcd(g, det(rsel, csel));
            return;
        }
        for (std::size_t j = start; j < m.cols; ++j) {
            csel.push_back(j);
            pick_cols(j + 1);
            csel.pop_back();
        }
    };
    std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
        if (rsel.size() == k) {
            pick_cols(0);
            return;
        }
        for (std::size_t i = start; i < m.rows; ++i) {
            rsel.push_back(i);
            pick_rows(i + 1);
            rsel.pop_back();
        }
    };
    pick_rows(0);
    return g;
}

} // namespace

TEST_CASE("smith normal form on stated examples")
{
    {
        IntegerMatrix m(2, 2);
        m.at(0, 0) = 2;
        m.at(1, 1) = 3;
        auto s = smith_normal_form(m);
        verify_snf(m, s);
        CHECK(s.diagonal == std::vector<Int>{1, 6});
    }
    {
        IntegerMatrix m = IntegerMatrix::identity(3);
        auto s = smith_normal_form(m);
        verify_snf(m, s);
        CHECK(s.diagonal == std::vector<Int>{1, 1, 1});
    }
    {
        IntegerMatrix m(2, 1);
        m.at(0, 0) = 4;
        m.at(1, 0) = 6;
        auto s = smith_normal_form(m);
        verify_snf(m, s);
        CHECK(s.diagonal == std::vector<Int>{2});
    }
}

TEST_CASE("smith normal form against the minor-gcd oracle on random matrices")
{
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> val(-6, 6), dim(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        IntegerMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = val(rng);
        auto s = smith_normal_form(m);
        verify_snf(m, s);
        // elementary divisors d_1..d_k satisfy d_1 ... d_i = gcd of i x i minors
        Int prod = 1;
        for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
            prod *= s.diagonal[i];
            CHECK(prod == minor_gcd(m, i + 1));
        }
        if (s.rank < std::min(m.rows, m.cols)) CHECK(minor_gcd(m, s.rank + 1) == 0);
    }
}

TEST_CASE("integer linear solve")
{
    IntegerMatrix A(2, 3);
    // x + 2y + 3z = 7, 2x + z = 4 has integer solutions
    A.at(0, 0) = 1;
    A.at(0, 1) = 2;
    A.at(0, 2) = 3;
    A.at(1, 0) = 2;
    A.at(1, 2) = 1;
    auto sol = solve_integer(A, {7, 4});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] + 2 * (*sol)[1] + 3 * (*sol)[2] == 7);
    CHECK(2 * (*sol)[0] + (*sol)[2] == 4);

    IntegerMatrix B(1, 1);
    B.at(0, 0) = 2;
    CHECK_FALSE(solve_integer(B, {3}).has_value());
}
