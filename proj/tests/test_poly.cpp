#include "liecoh/poly.hpp"

#include <doctest.h>

using namespace liecoh;

namespace {

VarTablePtr two_omegas() { return VarTable::make({"w1", "w2"}, {2, 2}); }

Poly w(const VarTablePtr& t, int i, Int c = 1) { return Poly::variable(t, ZZ(), static_cast<std::size_t>(i), c); }

// independent oracle for elementary symmetric polynomials: subset expansion
Poly e_r_subsets(const std::vector<Poly>& forms, std::size_t r)
{
    auto vars = forms.front().vars_ptr();
    Poly acc = Poly::zero(vars, forms.front().ring());
    std::vector<std::size_t> sel;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (sel.size() == r) {
            Poly prod = Poly::constant(vars, forms.front().ring(), 1);
            for (auto i : sel) prod = prod * forms[i];
            acc = acc + prod;
            return;
        }
        for (std::size_t i = start; i < forms.size(); ++i) {
            sel.push_back(i);
            rec(i + 1);
            sel.pop_back();
        }
    };
    rec(0);
    return acc;
}

} // namespace

TEST_CASE("basic arithmetic")
{
    auto t = two_omegas();
    Poly a = w(t, 0);
    CHECK((a * a).str() == "w1^2");
    Poly b = w(t, 0, 2) - w(t, 1);      // 2w1 - w2
    Poly c = w(t, 1, 2) - w(t, 0);      // -w1 + 2w2
    CHECK((b + c) == (w(t, 0) + w(t, 1)));

    // Frobenius over F_2
    Poly s = (w(t, 0) + w(t, 1)).to_ring(FF(2));
    CHECK((s * s) == (w(t, 0) * w(t, 0) + w(t, 1) * w(t, 1)).to_ring(FF(2)));
}

TEST_CASE("homogeneity bookkeeping")
{
    auto t = VarTable::make({"w1", "x3"}, {2, 6});
    Poly p = Poly::variable(t, ZZ(), 0, 1, 3) + Poly::variable(t, ZZ(), 1); // w1^3 + x3
    CHECK(p.homogeneous_degree() == 6);
    Poly q = Poly::variable(t, ZZ(), 0) + Poly::variable(t, ZZ(), 1);
    CHECK_THROWS(q.homogeneous_degree());
    CHECK_FALSE(q.is_homogeneous());
}

TEST_CASE("elementary symmetric against the subset oracle")
{
    auto t = two_omegas();
    std::vector<Poly> su3 = {w(t, 0), w(t, 1) - w(t, 0), -w(t, 1)};
    // e1 telescopes to zero
    CHECK(elementary_symmetric(su3, 1).is_zero());
    // e2 expands to w1*w2 - w1^2 - w2^2
    Poly expect = w(t, 0) * w(t, 1) - w(t, 0) * w(t, 0) - w(t, 1) * w(t, 1);
    CHECK(elementary_symmetric(su3, 2) == expect);
    CHECK(e_r_subsets(su3, 2) == expect);
    // two-element case {w1, -w1}
    std::vector<Poly> pm = {w(t, 0), -w(t, 0)};
    CHECK(elementary_symmetric(pm, 2) == -(w(t, 0) * w(t, 0)));
    // dual-route agreement on a larger alphabet
    std::vector<Poly> alphabet = {w(t, 0), w(t, 1), w(t, 0) - w(t, 1), w(t, 0) + w(t, 1), -w(t, 0)};
    for (std::size_t r = 1; r <= alphabet.size(); ++r)
        CHECK(elementary_symmetric(alphabet, r) == e_r_subsets(alphabet, r));
}

TEST_CASE("substitution")
{
    auto t = two_omegas();
    std::vector<Poly> su3 = {w(t, 0), w(t, 1) - w(t, 0), -w(t, 1)};
    Poly c2 = elementary_symmetric(su3, 2);
    // w2 -> 2 w1 sends c2 to -3 w1^2
    std::vector<Poly> images = {w(t, 0), w(t, 0, 2)};
    CHECK(c2.substitute(images) == w(t, 0) * w(t, 0) * Int(-3));
    // identity assignment
    std::vector<Poly> id = {w(t, 0), w(t, 1)};
    CHECK(c2.substitute(id) == c2);
    // w2^2 over F_3 with w2 -> 2w1
    Poly sq = (w(t, 1) * w(t, 1)).to_ring(FF(3));
    std::vector<Poly> images3 = {w(t, 0).to_ring(FF(3)), w(t, 0, 2).to_ring(FF(3))};
    CHECK(sq.substitute(images3) == (w(t, 0) * w(t, 0)).to_ring(FF(3)));
}

TEST_CASE("monomial enumeration")
{
    auto t = VarTable::make({"z", "x3", "x4"}, {2, 6, 8});
    auto mons = monomials_of_degree(*t, 8);
    // z^4, z*x3, x4
    CHECK(mons.size() == 3);
}
