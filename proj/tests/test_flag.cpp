#include "liecoh/charpoly.hpp"
#include "liecoh/flag.hpp"

#include <doctest.h>

using namespace liecoh;

TEST_CASE("omega sets")
{
    auto su3 = omega_set(GroupSpec::simply_connected(Family::SU, 3));
    CHECK(su3.size() == 3);
    CHECK(su3[0].str() == "w1");
    CHECK(su3[1].str() == "-1*w1 + w2");
    CHECK(su3[2].str() == "-1*w2");

    auto sp1 = omega_set(GroupSpec::simply_connected(Family::Sp, 1));
    CHECK(sp1.size() == 2);
    CHECK(sp1[0].str() == "w1");
    CHECK(sp1[1].str() == "-1*w1");

    auto e6 = omega_set(GroupSpec::simply_connected(Family::E6, 6));
    CHECK(e6.size() == 6);
    CHECK(e6[0].str() == "w6");
    CHECK(e6[1].str() == "w5 - w6");

    CHECK(omega_set(GroupSpec::simply_connected(Family::E7, 7)).size() == 7);
}

TEST_CASE("chern classes")
{
    GroupSpec su3 = GroupSpec::simply_connected(Family::SU, 3);
    CHECK(chern_class(su3, 1).is_zero());
    auto t = omega_table(su3);
    Poly w1 = Poly::variable(t, ZZ(), 0), w2 = Poly::variable(t, ZZ(), 1);
    CHECK(chern_class(su3, 2) == w1 * w2 - w1 * w1 - w2 * w2);

    GroupSpec sp1 = GroupSpec::simply_connected(Family::Sp, 1);
    auto t1 = omega_table(sp1);
    Poly z = Poly::variable(t1, ZZ(), 0);
    CHECK(chern_class(sp1, 2) == -(z * z));

    CHECK(chern_class(GroupSpec::simply_connected(Family::SU, 7), 1).is_zero());
    CHECK_THROWS(chern_class(su3, 4));
}

TEST_CASE("flag presentations")
{
    RingPresentation su3 = flag_presentation(GroupSpec::simply_connected(Family::SU, 3));
    CHECK(su3.vars->names == std::vector<std::string>{"w1", "w2"});
    CHECK(su3.relations.size() == 2);
    CHECK(su3.relations[0].homogeneous_degree() == 4);
    CHECK(su3.relations[1].homogeneous_degree() == 6);

    RingPresentation e6 = flag_presentation(GroupSpec::simply_connected(Family::E6, 6));
    CHECK(e6.vars->size() == 8);
    CHECK(e6.relations.size() == 8);
    for (const auto& r : e6.relations) CHECK(r.is_homogeneous());

    RingPresentation e7 = flag_presentation(GroupSpec::simply_connected(Family::E7, 7));
    CHECK(e7.relations.size() == 11);
    // advertised degrees 2*{2,3,4,5,6,8,9,10,12,14,18}
    std::vector<int> degs;
    for (const auto& r : e7.relations) degs.push_back(*r.homogeneous_degree());
    CHECK(degs == std::vector<int>{4, 6, 8, 10, 12, 16, 18, 20, 24, 28, 36});
}

TEST_CASE("exceptional relation spot checks")
{
    // R2 = 4 w2^2 - c2 and R10 = x5^2 - 2 x3 c7 + w2^3 c7
    GroupSpec e7 = GroupSpec::simply_connected(Family::E7, 7);
    CharPolyContext ctx(GroupSpec::adjoint(Family::E7, 7));
    const auto& R = ctx.symbol_relations();
    CHECK(R.at(2) == ctx.wsym() * ctx.wsym() * 4 - ctx.csym(2));
    Poly x3 = ctx.xsym("x3"), x5 = ctx.xsym("x5");
    CHECK(R.at(10) == x5 * x5 - x3 * ctx.csym(7) * 2 + ctx.wsym().pow(3) * ctx.csym(7));
    (void)e7;
}

TEST_CASE("restriction map solves tau = 0")
{
    // PSU(n): w_k -> k w1 with n w1 = 0
    for (int n : {3, 4, 6, 10}) {
        RestrictionMap rm = restriction_map(GroupSpec::adjoint(Family::SU, n));
        CHECK(rm.q == n);
        CHECK(rm.survivor == 0);
        for (int k = 1; k <= n - 1; ++k)
            CHECK(rm.multipliers[static_cast<std::size_t>(k - 1)] == k % n);
    }
    // PSp(n): w_k -> k w1 mod 2
    for (int n : {1, 2, 5}) {
        RestrictionMap rm = restriction_map(GroupSpec::adjoint(Family::Sp, n));
        CHECK(rm.q == 2);
        for (int k = 1; k <= n; ++k)
            CHECK(rm.multipliers[static_cast<std::size_t>(k - 1)] == k % 2);
    }
    // PE6: w2 = w4 = 0, w1 = w5 = 1, w3 = w6 = 2, torsion 3
    {
        RestrictionMap rm = restriction_map(GroupSpec::adjoint(Family::E6, 6));
        CHECK(rm.q == 3);
        CHECK(rm.multipliers == std::vector<Int>{1, 0, 2, 0, 1, 2});
    }
    // PE7: w1 = w3 = w4 = w6 = 0, w2 = w5 = w7 = 1, torsion 2
    {
        RestrictionMap rm = restriction_map(GroupSpec::adjoint(Family::E7, 7));
        CHECK(rm.q == 2);
        CHECK(rm.multipliers == std::vector<Int>{0, 1, 0, 0, 1, 0, 1});
        CHECK(rm.survivor == 1);
    }
    CHECK_THROWS(restriction_map(GroupSpec::simply_connected(Family::SU, 3)));
}

TEST_CASE("restricted chern classes match the binomial formulas in the quotient")
{
    // PSU(3), r = 2: raw value -3 w1^2 equals 3 w1^2 modulo 3 w1
    {
        GroupSpec spec = GroupSpec::adjoint(Family::SU, 3);
        Poly rc = restricted_chern(spec, 2);
        RestrictionMap rm = restriction_map(spec);
        Poly z2 = Poly::variable(rm.restricted_vars, ZZ(), 0, 1, 2);
        Poly diff = rc - z2 * binomial(3, 2);
        for (const auto& [e, c] : diff.terms()) CHECK(mod_positive(c, 3) == 0);
    }
    // all families, all r, coefficient congruences (with the E6 sign)
    auto congruent = [](const Poly& diff, const Int& q) {
        for (const auto& [e, c] : diff.terms())
            if (mod_positive(c, q) != 0) return false;
        return true;
    };
    for (int n : {2, 5, 8, 10}) {
        GroupSpec spec = GroupSpec::adjoint(Family::SU, n);
        RestrictionMap rm = restriction_map(spec);
        for (int r = 2; r <= n; ++r) {
            Poly z = Poly::variable(rm.restricted_vars, ZZ(), 0, binomial(n, r), static_cast<std::uint32_t>(r));
            CHECK(congruent(restricted_chern(spec, r) - z, n));
        }
    }
    for (int n : {1, 4, 8}) {
        GroupSpec spec = GroupSpec::adjoint(Family::Sp, n);
        RestrictionMap rm = restriction_map(spec);
        for (int r = 1; r <= n; ++r) {
            Poly z = Poly::variable(rm.restricted_vars, ZZ(), 0, binomial(n, r), static_cast<std::uint32_t>(2 * r));
            CHECK(congruent(restricted_chern(spec, 2 * r) - z, 2));
            CHECK(restricted_chern(spec, 2 * r - 1).is_zero()); // odd symmetric functions vanish
        }
    }
    {
        GroupSpec spec = GroupSpec::adjoint(Family::E6, 6);
        RestrictionMap rm = restriction_map(spec);
        for (int r = 1; r <= 6; ++r) {
            Int coef = binomial(6, r);
            if (r % 2 == 1) coef = -coef;
            Poly z = Poly::variable(rm.restricted_vars, ZZ(), 0, coef, static_cast<std::uint32_t>(r));
            CHECK(congruent(restricted_chern(spec, r) - z, 3));
        }
    }
    {
        GroupSpec spec = GroupSpec::adjoint(Family::E7, 7);
        RestrictionMap rm = restriction_map(spec);
        for (int r = 1; r <= 7; ++r) {
            Poly z = Poly::variable(rm.restricted_vars, ZZ(), 0, binomial(7, r), static_cast<std::uint32_t>(r));
            CHECK(congruent(restricted_chern(spec, r) - z, 2));
        }
    }
}

TEST_CASE("mod-p presentations")
{
    // SU/Sp: deltas are the chern symbols
    ModPPresentation su = modp_presentation(GroupSpec::adjoint(Family::SU, 4), 2);
    CHECK(su.deltas.size() == 3);
    CHECK(su.surviving.empty());

    // (E6, 3): x3 eliminated, x4 survives with its cube relation
    ModPPresentation e6 = modp_presentation(GroupSpec::adjoint(Family::E6, 6), 3);
    CHECK(e6.surviving == std::vector<std::string>{"x4"});
    CHECK(e6.deltas.size() == 6);
    CHECK(e6.y_relations.size() == 1);
    CHECK(e6.y_relations[0].homogeneous_degree() == 24);

    // (E7, 2): x3, x5, x9 survive
    ModPPresentation e7 = modp_presentation(GroupSpec::adjoint(Family::E7, 7), 2);
    CHECK(e7.surviving == std::vector<std::string>{"x3", "x5", "x9"});
    CHECK(e7.deltas.size() == 7);
    CHECK(e7.y_relations.size() == 3);
}
