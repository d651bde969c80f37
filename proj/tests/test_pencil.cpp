#include "lmhs/pencil.hpp"

#include <doctest.h>

using namespace lmhs;
using V = PencilVariety;

TEST_SUITE("pencil")
{
    TEST_CASE("input validation")
    {
        CHECK_THROWS_AS(PencilInput(1, 1, 1), std::invalid_argument);
        CHECK_THROWS_AS(PencilInput(3, 0, 1), std::invalid_argument);
        CHECK(PencilInput(3, 2, 5).d0() == 7);
    }

    TEST_CASE("gamma values")
    {
        const GammaTable g(PencilInput(3, 1, 1));
        CHECK(g.dim(V::Y) == 3);
        CHECK(g.dim(V::Y0) == 2);
        CHECK(g.gamma(V::Y, -1) == 1);
        CHECK(g.gamma(V::Y, 0) == 0);
        CHECK(g.gamma(V::Y0, 0) == 2);
        CHECK(g.gamma(V::Z, 0) == 0);
        CHECK(g.gamma(V::Z, -1) == 1);
        CHECK(g.gamma(V::Sigma, 0) == 2);

        const GammaTable k3(PencilInput(3, 2, 2));
        CHECK(k3.gamma(V::Y0, 0) == 22);  // quartic surface
    }

    TEST_CASE("gamma symmetry")
    {
        for (int n = 2; n <= 6; ++n)
            for (int d1 = 1; d1 <= 3; ++d1)
                for (int d2 = 1; d2 <= 3; ++d2) {
                    const GammaTable g(PencilInput(n, d1, d2));
                    for (V v : {V::Y, V::Y0, V::Y1, V::Y2, V::Z, V::Sigma})
                        for (int j = 1; j <= n; ++j)
                            CHECK(g.gamma(v, j) == g.gamma(v, -j));
                }
    }

    TEST_CASE("empty triple intersection in the plane")
    {
        const GammaTable g(PencilInput(2, 1, 2));
        CHECK(g.variety(V::Sigma).is_empty());
        for (int j = -2; j <= 2; ++j)
            CHECK(g.gamma(V::Sigma, j) == 0);
    }

    TEST_CASE("inequality lines")
    {
        const auto lines = weak_lefschetz_inequalities(PencilInput(5, 2, 2));
        CHECK(lines.size() == 11);
        for (const auto& line : lines)
            CHECK_MESSAGE(line.holds, line.statement);
        int equalities = 0;
        for (const auto& line : lines)
            equalities += line.is_equality;
        CHECK(equalities == 6);
    }

    TEST_CASE("vanishing cycle inequality and its quadric exception")
    {
        const auto conic = theorem6_inequality(PencilInput(2, 1, 1));
        CHECK(!conic.holds);
        CHECK(conic.gamma0_y0 == 0);
        CHECK(conic.gamma_minus1_y == 0);
        CHECK(conic.branch == SufficientBranch::none);

        const auto quadric3 = theorem6_inequality(PencilInput(4, 1, 1));
        CHECK(!quadric3.holds);

        const auto quadric_surface = theorem6_inequality(PencilInput(3, 1, 1));
        CHECK(quadric_surface.holds);
        CHECK(quadric_surface.gamma0_y0 == 2);
        CHECK(quadric_surface.gamma_minus1_y == 1);
        CHECK(quadric_surface.branch != SufficientBranch::none);

        CHECK(theorem6_inequality(PencilInput(4, 1, 2)).holds);
        CHECK(theorem6_inequality(PencilInput(2, 1, 2)).holds);
    }

    TEST_CASE("three-column page matches the general construction")
    {
        for (int n = 2; n <= 6; ++n)
            for (int d1 = 1; d1 <= 3; ++d1)
                for (int d2 = d1; d2 <= 3; ++d2) {
                    const PencilInput in(n, d1, d2);
                    const auto small = e1_table(in);
                    const auto general = build_e1_nearby(in.as_degeneration());
                    CHECK(small.same_dims(general));
                    for (const auto& [k, c] : small.cells)
                        CHECK(c.summands == general.find(k.first, k.second)->summands);
                }
    }
}
