#include "liecoh/quotient.hpp"

#include <doctest.h>

using namespace liecoh;

namespace {

Poly v(const VarTablePtr& t, std::size_t i, Int c = 1, std::uint32_t pw = 1)
{
    return Poly::variable(t, ZZ(), i, c, pw);
}

} // namespace

TEST_CASE("graded quotient of the one-variable gcd ladder")
{
    // Z[w]/<4w, 2w^2, 2w^3, w^4>: Z/4, Z/2, Z/2 in degrees 2, 4, 6; trivial after
    auto t = VarTable::make({"w"}, {2});
    std::vector<Poly> rels = {v(t, 0, 4), v(t, 0, 2, 2), v(t, 0, 2, 3), v(t, 0, 1, 4)};
    QuotientRing q(t, ZZ(), rels);
    CHECK(q.group(2).torsion == std::vector<Int>{4});
    CHECK(q.group(4).torsion == std::vector<Int>{2});
    CHECK(q.group(6).torsion == std::vector<Int>{2});
    CHECK(q.group(8).trivial());
    CHECK(q.group(10).trivial());

    // Z[w]/<w> lives in degree 0 only
    QuotientRing q2(t, ZZ(), {v(t, 0)});
    CHECK(q2.group(0).free_rank == 1);
    CHECK(q2.group(2).trivial());
}

TEST_CASE("membership, normal form and class order")
{
    auto t = VarTable::make({"w"}, {2});
    QuotientRing q(t, ZZ(), {v(t, 0, 4), v(t, 0, 2, 2)});
    CHECK(q.contains(v(t, 0, 8)));            // 8w = 2*4w
    CHECK_FALSE(q.contains(v(t, 0, 2)));      // 2w is not a multiple of 4w
    CHECK(q.class_order(v(t, 0)) == 4);
    CHECK(q.class_order(v(t, 0, 1, 2)) == 2);
    CHECK(q.same_class(v(t, 0, 5), v(t, 0))); // 5w == w mod 4w
    Poly nf = q.normal_form(v(t, 0, 7));
    CHECK(q.same_class(nf, v(t, 0, 7)));
    CHECK(q.normal_form(nf) == nf);
}

TEST_CASE("divide_class and express_in_ideal")
{
    auto t = VarTable::make({"w"}, {2});
    QuotientRing q(t, ZZ(), {v(t, 0, 6, 2)}); // relation 6 w^2
    // 2X == 4 w^2 (mod 6w^2) has the solution X = 2w^2 up to the relation
    auto x = q.divide_class(v(t, 0, 4, 2), 2);
    REQUIRE(x.has_value());
    CHECK(q.contains(*x * Int(2) - v(t, 0, 4, 2)));

    auto combo = q.express_in_ideal(v(t, 0, 12, 3)); // 12 w^3 = (2w) * 6w^2
    REQUIRE(combo.has_value());
    Poly recon = (*combo)[0] * q.relations()[0];
    CHECK(recon == v(t, 0, 12, 3));
}

TEST_CASE("field coefficients report dimensions")
{
    auto t = VarTable::make({"w"}, {2});
    std::vector<Poly> rels = {Poly::variable(t, FF(3), 0, 1, 3)}; // w^3 = 0 over F_3
    QuotientRing q(t, FF(3), rels);
    CHECK(q.group(2).free_rank == 1);
    CHECK(q.group(4).free_rank == 1);
    CHECK(q.group(6).free_rank == 0);
    CHECK(q.dim(4) == 1);
}

TEST_CASE("dimension budget guard")
{
    setenv("LIECOH_DIM_BUDGET", "10", 1);
    auto t = VarTable::make({"a", "b", "c"}, {2, 2, 2});
    QuotientRing q(t, ZZ(), {Poly::variable(t, ZZ(), 0, 1, 2)});
    CHECK_THROWS_AS(q.group(12), DimensionBudgetExceeded);
    unsetenv("LIECOH_DIM_BUDGET");
    CHECK(q.group(4).free_rank > 0);
}
