#include "lmhs/limit_mhs.hpp"

#include <doctest.h>

using namespace lmhs;

TEST_SUITE("limit_mhs")
{
    TEST_CASE("elliptic curve degenerating to a triangle of lines")
    {
        const DegenerationInput in(2, {1, 1, 1});
        const auto mhs = limit_mhs(in);
        CHECK(mhs.full_graded.grades().size() == 2);
        CHECK(mhs.full_graded.grades().at(0) == FormalSum(Summand::tate(0)));
        CHECK(mhs.full_graded.grades().at(2) == FormalSum(Summand::tate(1)));
        const auto j = jordan_profile(in);
        CHECK(j.blocks == std::map<int, BigInt>{{2, 1}});
        CHECK(j.total_dim() == 2);
        CHECK(!mhs.middle_has_hyperplane_class);
    }

    TEST_CASE("conic degenerating to two lines has no primitive cohomology")
    {
        const DegenerationInput in(2, {1, 1});
        const auto mhs = limit_mhs(in);
        CHECK(mhs.primitive.primitives.empty());
        CHECK(mhs.full_graded.empty());
        CHECK(jordan_profile(in).blocks.empty());
    }

    TEST_CASE("quintic threefold degenerating to five hyperplanes")
    {
        const DegenerationInput in(4, {1, 1, 1, 1, 1});
        const auto mhs = limit_mhs(in);
        CHECK(mhs.full_graded.grades().rbegin()->first == 6);
        CHECK(mhs.full_graded.grades().at(6) == FormalSum(Summand::tate(3)));
        CHECK(mhs.full_graded.total_dim() == 204);
        const auto j = jordan_profile(in);
        CHECK(j.blocks.at(4) == 1);
        CHECK(j.total_dim() == 204);
        CHECK(mhs.middle_has_hyperplane_class == false);
    }

    TEST_CASE("hyperplane class flag follows the parity of n - 1")
    {
        CHECK(limit_mhs(DegenerationInput(3, {1, 2})).middle_has_hyperplane_class);
        CHECK(!limit_mhs(DegenerationInput(4, {1, 2})).middle_has_hyperplane_class);
    }

    TEST_CASE("subset identity examples")
    {
        auto a = verify_identity_04(DegenerationInput(2, {1, 2}));
        CHECK(a.lhs == 2);
        CHECK(a.rhs == 2);
        CHECK(a.equal);
        auto b = verify_identity_04(DegenerationInput(2, {1, 1, 1}));
        CHECK(b.lhs == 2);
        CHECK(b.equal);
        CHECK(verify_identity_04(DegenerationInput(4, {1, 1, 1, 1, 1})).lhs == 204);
    }

    TEST_CASE("all-ones identity agrees with the subset identity")
    {
        for (int n = 2; n <= 6; ++n)
            for (int d = 2; d <= 7; ++d) {
                const auto special = verify_all_ones_identity(n, d);
                const auto general = verify_identity_04(DegenerationInput(n, std::vector<int>(d, 1)));
                CHECK(special.equal);
                CHECK(special.lhs == general.lhs);
                CHECK(special.rhs == general.rhs);
            }
        CHECK_THROWS_AS(verify_all_ones_identity(1, 3), std::invalid_argument);
        CHECK_THROWS_AS(verify_all_ones_identity(3, 1), std::invalid_argument);
    }

    TEST_CASE("graded pieces are symmetric and sum to the primitive dimension")
    {
        for (int n = 2; n <= 5; ++n)
            for (const auto& ds : std::vector<std::vector<int>>{{1, 1, 2}, {2, 3}, {1, 2, 2, 3}, {1, 1, 1, 1, 1, 1}}) {
                const DegenerationInput in(n, ds);
                const auto mhs = limit_mhs(in);
                CHECK(mhs.full_graded.total_dim() == prim_middle_dim(CompleteIntersection(n, Multidegree{in.d0()})));
                for (int k = 1; k < n; ++k)
                    CHECK(mhs.full_graded.dim(n - 1 + k) == mhs.full_graded.dim(n - 1 - k));
                CHECK(mhs.full_graded.dim(3 * n) == 0);
                CHECK(jordan_profile(in).total_dim() == mhs.full_graded.total_dim());
            }
    }

    TEST_CASE("other degrees")
    {
        const DegenerationInput in(3, {1, 2});
        CHECK(other_degrees(in, 0) == FormalSum(Summand::tate(0)));
        CHECK(other_degrees(in, 4) == FormalSum(Summand::tate(2)));
        CHECK(other_degrees(in, 1).empty());
        CHECK_THROWS_AS(other_degrees(in, 2), std::invalid_argument);
        CHECK_THROWS_AS(other_degrees(in, 5), std::invalid_argument);
        CHECK_THROWS_AS(other_degrees(in, -1), std::invalid_argument);
    }

    TEST_CASE("level report")
    {
        const auto rep = level_report(DegenerationInput(2, {1, 1, 1}));
        CHECK(rep.size() == 3);
        CHECK(rep.at(-1) == 0);
        CHECK(rep.at(0) == 0);
        CHECK(rep.at(1) == 0);

        // The (2,2) curve in P^3 is not a hypersurface, so its grades have no level.
        const auto r3 = level_report(DegenerationInput(3, {2, 2}));
        CHECK(r3.size() == 5);
        CHECK(r3.at(-2) == 0);
        CHECK(r3.at(2) == 0);
        CHECK(!r3.at(1).has_value());
        CHECK(!r3.at(-1).has_value());
    }
}
