#include "liecoh/steenrod.hpp"
#include "liecoh/tables.hpp"

#include <doctest.h>

using namespace liecoh;

TEST_CASE("Wu formula")
{
    // Sq^2 c_2 = c_1 c_2 + c_3 on the E7 alphabet, with c_1 = 3 w2
    CharPolyContext ctx(GroupSpec::adjoint(Family::E7, 7));
    SteenrodCalculus sq(ctx);
    Poly lhs = sq.sq(ctx.csym(2).to_ring(FF(2)), 1);
    Poly rhs = (ctx.wsym() * ctx.csym(2) * 3 + ctx.csym(3)).to_ring(FF(2));
    CHECK(lhs == rhs);

    // full Wu expansion Sq^{2s-2} c_s = c_{s-1} c_s + ... + c_{2s-1}
    for (int s = 2; s <= 4; ++s) {
        Poly want(ctx.symbols(), FF(2));
        for (int t = 0; t < s; ++t) {
            int a = s - 1 - t, b = s + t;
            if (b > 7) continue;
            Poly factor = (a == 0) ? Poly::constant(ctx.symbols(), FF(2), 1)
                                   : (a == 1 ? (ctx.wsym() * 3).to_ring(FF(2)) : ctx.csym(a).to_ring(FF(2)));
            want = want + factor * ctx.csym(b).to_ring(FF(2));
        }
        CHECK(sq.sq(ctx.csym(s).to_ring(FF(2)), s - 1) == want);
    }
}

TEST_CASE("total square is multiplicative")
{
    CharPolyContext ctx(GroupSpec::adjoint(Family::SU, 6));
    SteenrodCalculus sq(ctx);
    Poly a = ctx.csym(2).to_ring(FF(2)), b = ctx.csym(3).to_ring(FF(2));
    CHECK(sq.total_sq(a * b) == sq.total_sq(a) * sq.total_sq(b));
}

TEST_CASE("SU square ladder")
{
    // n = 8: Sq^2 zeta_3 = zeta_5
    CharPolyContext ctx(GroupSpec::adjoint(Family::SU, 8));
    SteenrodCalculus sq(ctx);
    auto pick = [&](int s) {
        for (const auto& f : stored_modp_quotient_set(ctx, 2))
            if ((f.cohomological_degree + 1) / 2 == s) return f.characteristic.to_ring(FF(2));
        throw std::runtime_error("missing");
    };
    Poly image = sq.sq(pick(2), 1);
    CHECK(sq.phi2_kills(image - pick(3)));
}

TEST_CASE("E7 squares and kills")
{
    CharPolyContext ctx(GroupSpec::adjoint(Family::E7, 7));
    SteenrodCalculus sq(ctx);
    auto pick = [&](int s) {
        for (const auto& f : stored_modp_quotient_set(ctx, 2))
            if ((f.cohomological_degree + 1) / 2 == s) return f.characteristic.to_ring(FF(2));
        throw std::runtime_error("missing");
    };
    // fast cases here; the full battery runs in the acceptance suite
    CHECK(sq.phi2_kills(sq.sq(pick(3), 2) - pick(5)));
    CHECK(sq.phi2_kills(sq.sq(pick(5), 4) - pick(9)));
    CHECK_FALSE(sq.phi2_kills(pick(3))); // a generator itself does not die
}
