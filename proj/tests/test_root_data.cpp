#include "liecoh/root_data.hpp"

#include <doctest.h>

#include <numeric>

using namespace liecoh;

namespace {

// brute-force Cartan matrix from explicit root vectors, b_ij = 2(a_i,a_j)/(a_j,a_j)
IntegerMatrix cartan_from_roots(const std::vector<std::vector<int>>& roots)
{
    auto ip = [](const std::vector<int>& a, const std::vector<int>& b) {
        long s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
        return s;
    };
    IntegerMatrix m(roots.size(), roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j) {
            long num = 2 * ip(roots[i], roots[j]);
            long den = ip(roots[j], roots[j]);
            REQUIRE(num % den == 0);
            m.at(i, j) = num / den;
        }
    return m;
}

} // namespace

TEST_CASE("Cartan matrices from root-vector oracles")
{
    // SU(2)
    CHECK(cartan_matrix(GroupSpec::simply_connected(Family::SU, 2)).at(0, 0) == 2);
    // SU(3): standard A_2 simple roots e_i - e_{i+1} in R^3
    {
        IntegerMatrix oracle = cartan_from_roots({{1, -1, 0}, {0, 1, -1}});
        CHECK(cartan_matrix(GroupSpec::simply_connected(Family::SU, 3)) == oracle);
    }
    // Sp(2): C_2 roots e1 - e2, 2 e2
    {
        IntegerMatrix oracle = cartan_from_roots({{1, -1}, {0, 2}});
        IntegerMatrix got = cartan_matrix(GroupSpec::simply_connected(Family::Sp, 2));
        CHECK(got == oracle);
        CHECK(got.at(0, 1) == -1);
        CHECK(got.at(1, 0) == -2);
    }
    // Sp(4) from explicit C_4 roots
    {
        IntegerMatrix oracle =
            cartan_from_roots({{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 2}});
        CHECK(cartan_matrix(GroupSpec::simply_connected(Family::Sp, 4)) == oracle);
    }
    // determinants match the center orders
    auto det_of = [](const GroupSpec& s) {
        auto snf = smith_normal_form(cartan_matrix(s), SnfTransforms::None);
        Int d = 1;
        for (const auto& x : snf.diagonal) d *= x;
        return d;
    };
    CHECK(det_of(GroupSpec::simply_connected(Family::SU, 7)) == 7);
    CHECK(det_of(GroupSpec::simply_connected(Family::Sp, 5)) == 2);
    CHECK(det_of(GroupSpec::simply_connected(Family::E6, 6)) == 3);
    CHECK(det_of(GroupSpec::simply_connected(Family::E7, 7)) == 2);
}

TEST_CASE("transition matrices")
{
    GroupSpec sc = GroupSpec::simply_connected(Family::SU, 3);
    CHECK(transition_matrix(sc) == IntegerMatrix::identity(2));
    GroupSpec ad = GroupSpec::adjoint(Family::SU, 3);
    CHECK(transition_matrix(ad) == cartan_matrix(ad).transpose());
    GroupSpec e7 = GroupSpec::adjoint(Family::E7, 7);
    CHECK(transition_matrix(e7) == cartan_matrix(e7).transpose());
}

TEST_CASE("transgression images")
{
    // PSU(3): tau(t1) = 2w1 - w2, tau(t2) = -w1 + 2w2
    GroupSpec ad = GroupSpec::adjoint(Family::SU, 3);
    TransgressionData t = transgression(ad, false);
    auto V = t.omega_vars;
    CHECK(t.images[0] == Poly::variable(V, ZZ(), 0, 2) - Poly::variable(V, ZZ(), 1));
    CHECK(t.images[1] == Poly::variable(V, ZZ(), 1, 2) - Poly::variable(V, ZZ(), 0));

    // simply connected: identity images
    TransgressionData t0 = transgression(GroupSpec::simply_connected(Family::SU, 5), false);
    for (std::size_t i = 0; i < t0.images.size(); ++i)
        CHECK(t0.images[i] == Poly::variable(t0.omega_vars, ZZ(), i));

    // PE7 circle image is omega_2
    TransgressionData t7 = transgression(GroupSpec::adjoint(Family::E7, 7), true);
    CHECK(t7.has_circle);
    CHECK(t7.varpi == Poly::variable(t7.omega_vars, ZZ(), 1));
    CHECK(t7.images.size() == 8);
    CHECK(t7.basis_names_fiber.back() == "t0");

    // circle extension rejected for simply connected input
    CHECK_THROWS(transgression(GroupSpec::simply_connected(Family::Sp, 2), true));
}

TEST_CASE("spec validation")
{
    CHECK_THROWS(GroupSpec::simply_connected(Family::SU, 1));
    CHECK(GroupSpec::adjoint(Family::SU, 6).quotient_order == 6);
    CHECK(GroupSpec::adjoint(Family::E6, 6).quotient_order == 3);
    CHECK(GroupSpec::parse("PSp", 3).name() == "PSp(3)");
    CHECK_THROWS(GroupSpec::parse("Spin", 7));
}
