#include "liecoh/emit.hpp"

#include <doctest.h>

using namespace liecoh;

TEST_CASE("json emission is deterministic and round-trips coefficients")
{
    auto t = VarTable::make({"w1", "w2"}, {2, 2});
    Poly p = Poly::variable(t, ZZ(), 0, -3, 2) + Poly::variable(t, ZZ(), 1);
    auto j = poly_to_json(p);
    CHECK(j["ring"] == "Z");
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coefficient"] == "1");
    CHECK(j["terms"][1]["coefficient"] == "-3");
    CHECK(j.dump() == poly_to_json(p).dump());
}

TEST_CASE("latex names")
{
    auto t = VarTable::make({"w2", "x4"}, {2, 8});
    Poly p = Poly::variable(t, ZZ(), 0, 4, 2) - Poly::variable(t, ZZ(), 1, 1);
    std::string s = poly_to_latex(p);
    CHECK(s.find("\\omega_{2}^{2}") != std::string::npos);
    CHECK(s.find("x_{4}") != std::string::npos);
}

TEST_CASE("graded group emission")
{
    GradedAbelianGroup g;
    g.set(2, {0, {Int(4)}});
    g.set(3, {2, {}});
    auto j = graded_to_json(g);
    CHECK(j["2"]["torsion"][0] == "4");
    CHECK(j["3"]["rank"] == 2);
    CHECK(g.str().find("Z/4") != std::string::npos);
}
