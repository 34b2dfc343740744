#include "liecoh/assemble.hpp"
#include "liecoh/charpoly.hpp"
#include "liecoh/koszul.hpp"
#include "liecoh/tables.hpp"

#include <doctest.h>

#include <random>

using namespace liecoh;

TEST_CASE("derivative of stated examples")
{
    // SU(n): c_s differentiates to C(n,s) w1^{s-1} modulo n
    for (int n : {4, 6}) {
        CharPolyContext ctx(GroupSpec::adjoint(Family::SU, n));
        for (int s = 2; s <= n; ++s) {
            Poly d = ctx.derivative_wrt_varpi(ctx.csym(s));
            Poly expect =
                Poly::variable(ctx.restriction().restricted_vars, ZZ(), 0, binomial(n, s), static_cast<std::uint32_t>(s - 1));
            Poly diff = d - expect;
            for (const auto& [e, c] : diff.terms()) CHECK(mod_positive(c, n) == 0);
        }
    }
    // E6 row: everything zero as E3 classes except the degree-9 slot, which is w1^8
    {
        CharPolyContext ctx(GroupSpec::adjoint(Family::E6, 6));
        auto forms = stored_integral_set(ctx);
        auto& e3 = ctx.e3(ZZ());
        auto rv = ctx.restriction().restricted_vars;
        for (const auto& f : forms) {
            Poly tb = ctx.theta_bar(f.characteristic, ZZ());
            if (f.cohomological_degree == 17) { // degree-9 entry
                Poly z8 = Poly::variable(rv, ZZ(), 0, 1, 8);
                CHECK(e3.same_class(tb, z8));
            } else {
                CHECK(tb.is_zero());
            }
        }
    }
    // mod-3 E6 row
    {
        CharPolyContext ctx(GroupSpec::adjoint(Family::E6, 6));
        auto forms = stored_modp_set(ctx, 3);
        auto derivs = stored_derivatives_modp(ctx, 3);
        for (std::size_t i = 0; i < forms.size(); ++i)
            CHECK(ctx.derivative_wrt_varpi(forms[i].characteristic.to_ring(FF(3))) == derivs[i].to_ring(FF(3)));
    }
    // membership guard: a polynomial outside <Im tau~'> is rejected
    {
        CharPolyContext ctx(GroupSpec::adjoint(Family::E7, 7));
        Poly bad = ctx.xsym("x4") * ctx.xsym("x4");
        CHECK_THROWS(ctx.derivative_wrt_varpi(bad));
        CHECK(ctx.derivative_wrt_varpi(Poly::zero(ctx.symbols(), ZZ())).is_zero());
    }
}

TEST_CASE("theta_bar on stated examples")
{
    // theta(gamma_{2s-1}) for PSU(n): C(n,s) varpi^{s-1} as a class
    for (int n : {4, 8}) {
        CharPolyContext ctx(GroupSpec::adjoint(Family::SU, n));
        auto& e3 = ctx.e3(ZZ());
        auto rv = ctx.restriction().restricted_vars;
        for (int s = 2; s <= n; ++s) {
            Poly tb = ctx.theta_bar(ctx.csym(s), ZZ());
            Poly expect = Poly::variable(rv, ZZ(), 0, binomial(n, s), static_cast<std::uint32_t>(s - 1));
            CHECK(e3.same_class(tb, expect));
        }
    }
    // Sp(2^r (2b+1)): zero unless s = 2^{r+1}, where the value is varpi^{2^{r+1}-1}
    for (int n : {2, 4, 6}) {
        CharPolyContext ctx(GroupSpec::adjoint(Family::Sp, n));
        auto& e3 = ctx.e3(ZZ());
        auto rv = ctx.restriction().restricted_vars;
        int h = h_degree(ctx.spec(), 2);
        for (int k = 1; k <= n; ++k) {
            Poly tb = ctx.theta_bar(ctx.csym(2 * k), ZZ());
            if (2 * k == h) {
                Poly expect = Poly::variable(rv, ZZ(), 0, 1, static_cast<std::uint32_t>(h - 1));
                CHECK(e3.same_class(tb, expect));
                CHECK(e3.class_order(tb) == 2);
            } else {
                CHECK(tb.is_zero());
            }
        }
    }
    // order of the theta class recovers a_s for the exceptional families
    {
        CharPolyContext ctx(GroupSpec::adjoint(Family::E7, 7));
        auto forms = stored_integral_set(ctx);
        CHECK(ctx.theta_order(forms[0].characteristic) == 2); // degree 2
        for (std::size_t i = 1; i < forms.size(); ++i) CHECK(ctx.theta_order(forms[i].characteristic) == 1);
    }
}

TEST_CASE("expansion certificates mod p")
{
    // c_2(PSU(4)) mod 2 expands over the adjoint transgression images
    CharPolyContext ctx(GroupSpec::adjoint(Family::SU, 4));
    GroupSpec spec = ctx.spec();
    Poly c2 = chern_class(spec, 2);
    auto expansion = ctx.expand_in_tau_modp(c2, 2);
    REQUIRE(expansion.has_value());
    TransgressionData tau = transgression(spec, false);
    Poly recon(tau.omega_vars, FF(2));
    for (std::size_t i = 0; i < expansion->size(); ++i)
        recon = recon + (*expansion)[i] * tau.images[i].to_ring(FF(2));
    CHECK(recon == c2.to_ring(FF(2)));

    // a pure survivor power is not in the ideal
    Poly w1 = Poly::variable(tau.omega_vars, ZZ(), 0);
    CHECK_FALSE(ctx.expand_in_tau_modp(w1, 2).has_value());

    // the zero polynomial expands trivially
    auto zero = ctx.expand_in_tau_modp(Poly::zero(tau.omega_vars, ZZ()), 2);
    REQUIRE(zero.has_value());
    for (const auto& g : *zero) CHECK(g.is_zero());
}

TEST_CASE("well-definedness of the one-form class across integral expansions")
{
    // Over Z the adjoint transgression images are algebraically independent, and
    // two expansions of the same polynomial give the same E3 class in fiber
    // degree 1. (Over F_p with p | q the images become linearly dependent and
    // the class is only pinned modulo multiples of the covering class.)
    for (int n : {2, 3}) {
        GroupSpec spec = GroupSpec::adjoint(Family::SU, n);
        TransgressionData tau = transgression(spec, false);
        auto base = flag_ring(spec, ZZ());
        auto vars = base->vars();
        std::vector<Poly> images;
        for (const Poly& img : tau.images) images.push_back(img);
        KoszulComplex kz(base, images);
        QuotientRing tau_ideal(vars, ZZ(), images);

        std::mt19937 rng(99 + n);
        std::uniform_int_distribution<int> coef(-2, 2);
        for (int trial = 0; trial < 6; ++trial) {
            Poly P(vars, ZZ());
            std::vector<Poly> gs;
            for (std::size_t i = 0; i < images.size(); ++i) {
                Poly g(vars, ZZ());
                for (const auto& e : monomials_of_degree(*vars, 4)) g.add_term(e, coef(rng));
                gs.push_back(g);
                P = P + g * images[i];
            }
            auto expansion = tau_ideal.express_in_ideal(P);
            REQUIRE(expansion.has_value());
            KoszulElement x, y;
            for (std::size_t i = 0; i < images.size(); ++i) {
                x.add(1u << i, gs[i]);
                y.add(1u << i, (*expansion)[i]);
            }
            // both represent expansions of P; the difference is a cycle and bounds
            KoszulElement diff = x;
            for (const auto& [mask, q] : y.comps) diff.add(mask, -q);
            CHECK(kz.is_cycle(diff));
            CHECK(kz.is_boundary(diff));
        }
    }
}

TEST_CASE("lift_characteristic on stated examples")
{
    // (SU(n), p | n): c_k lifts to itself below p^r, with the gcd correction above
    {
        CharPolyContext ctx(GroupSpec::adjoint(Family::SU, 6));
        long p = 3; // r = 1, p^r = 3
        auto l2 = ctx.lift_characteristic(ctx.csym(2), p);
        REQUIRE(l2.has_value());
        CHECK(*l2 == ctx.csym(2).to_ring(FF(p)));
        // k = 4 >= 3: c_4 - t c_3 w^{1} with t C(6,3) = C(6,4) mod 3: t*2 = 0 -> t = 0
        auto l4 = ctx.lift_characteristic(ctx.csym(4), p);
        REQUIRE(l4.has_value());
        CHECK(*l4 == ctx.csym(4).to_ring(FF(p)));
        // k = 5: C(6,5) = 6 = 0 mod 3: unchanged
        auto l5 = ctx.lift_characteristic(ctx.csym(5), p);
        REQUIRE(l5.has_value());
        CHECK(*l5 == ctx.csym(5).to_ring(FF(p)));
        // the excluded degree p^r has nonvanishing theta: no lift
        CHECK_FALSE(ctx.lift_characteristic(ctx.csym(3), p).has_value());
    }
    {
        CharPolyContext ctx(GroupSpec::adjoint(Family::SU, 4));
        long p = 2; // r = 2, p^r = 4; t C(4,4) = C(4, ...) corrections at k >= 4 only
        auto l3 = ctx.lift_characteristic(ctx.csym(3), p);
        REQUIRE(l3.has_value());
        CHECK(*l3 == ctx.csym(3).to_ring(FF(p))); // C(4,3) = 4 even
    }
    // (E7, 2, the c3 entry) lifts to c3 - c2 w2
    {
        CharPolyContext ctx(GroupSpec::adjoint(Family::E7, 7));
        auto l = ctx.lift_characteristic(ctx.csym(3), 2);
        REQUIRE(l.has_value());
        CHECK(*l == (ctx.csym(3) - ctx.csym(2) * ctx.wsym()).to_ring(FF(2)));
        // lifted polynomial is in <Im tau~_2> and in ker f_2
        CHECK(ctx.in_im_tau_modp(*l, 2));
        CHECK(ctx.in_ker_f(*l, FF(2)));
    }
}
