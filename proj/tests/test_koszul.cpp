#include "lmhs/koszul.hpp"

#include <doctest.h>

#include <random>

using namespace lmhs;

namespace {

RationalMatrix from_rows(std::vector<std::vector<Rational>> rows)
{
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = rows[i][j];
    return m;
}

// Plain Gaussian elimination over Q as an independent rank oracle.
std::size_t gauss_rank(RationalMatrix m)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, c) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m(rank, j), m(piv, j));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            const Rational f = m(i, c) / m(rank, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_SUITE("koszul")
{
    TEST_CASE("rank examples")
    {
        CHECK(RationalMatrix().rank() == 0);
        CHECK(RationalMatrix(3, 4).rank() == 0);
        CHECK(from_rows({{1, 2}, {2, 4}}).rank() == 1);
        CHECK(from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}}).rank() == 1);
        CHECK(from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), Rational(1, 7)}}).rank() == 2);
        CHECK(from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}).rank() == 3);
    }

    TEST_CASE("rank agrees with gaussian elimination on random rational matrices")
    {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> size(1, 6), num(-3, 3), den(1, 4), zero(0, 2);
        for (int trial = 0; trial < 200; ++trial) {
            RationalMatrix m(static_cast<std::size_t>(size(rng)), static_cast<std::size_t>(size(rng)));
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (zero(rng) != 0) {
                        m(i, j) = Rational(num(rng), den(rng));
                        m(i, j).canonicalize();
                    }
            CHECK(m.rank() == gauss_rank(m));
        }
    }

    TEST_CASE("koszul complex dimensions and boundary")
    {
        const auto k1 = koszul_identity(1);
        CHECK(k1.dim(0) == 1);
        CHECK(k1.dim(1) == 1);
        CHECK(k1.boundary(1).rank() == 1);

        const auto k3 = koszul_identity(3);
        for (int i = 0; i <= 3; ++i)
            CHECK(k3.dim(i) == binomial(3, i));
        CHECK(k3.is_complex());
        CHECK(k3.homology().empty());
        CHECK(k3.euler_characteristic() == 0);
    }

    TEST_CASE("d squared vanishes and the complex is acyclic")
    {
        for (int r = 1; r <= 7; ++r) {
            const auto k = koszul_identity(r);
            CHECK(k.is_complex());
            CHECK(k.homology().empty());
            for (int i = 1; i < r; ++i)
                CHECK((k.boundary(i) * k.boundary(i + 1)).is_zero());
        }
    }

    TEST_CASE("truncated homology examples")
    {
        CHECK(truncated_homology(3, 1, 2) == std::map<int, std::size_t>{{1, 1}, {2, 1}});
        CHECK(truncated_homology(5, 2, 4) == std::map<int, std::size_t>{{2, 4}, {4, 1}});
        CHECK(truncated_homology(4, 2, 2) == std::map<int, std::size_t>{{2, 6}});
        CHECK(truncated_homology(3, 0, 3).empty());
        CHECK_THROWS_AS(truncated_homology(3, 2, 1), std::invalid_argument);
        CHECK_THROWS_AS(truncated_homology(3, -1, 1), std::invalid_argument);
    }

    TEST_CASE("truncated homology closed form")
    {
        for (int r = 1; r <= 6; ++r)
            for (int p = 0; p <= r; ++p)
                for (int q = p + 1; q <= r; ++q) {
                    std::map<int, std::size_t> expected;
                    if (auto low = binomial(r - 1, p - 1); low != 0)
                        expected[p] = low.get_ui();
                    if (auto high = binomial(r - 1, q); high != 0)
                        expected[q] = high.get_ui();
                    CHECK(truncated_homology(r, p, q) == expected);
                }
    }

    TEST_CASE("diagonal euler characteristic")
    {
        const auto degenerate = eprime_euler(2, 3, 1);
        CHECK(degenerate.applicable);
        CHECK(degenerate.euler == 0);
        CHECK(degenerate.expected == 0);

        const auto quintic = eprime_euler(4, 5, 3);
        CHECK(quintic.survivor_high == 1);
        CHECK(quintic.euler == quintic.expected);

        const auto a = eprime_euler(4, 6, 3);
        CHECK(a.euler == -4);
        CHECK(a.expected == -4);

        const auto b = eprime_euler(3, 4, 0);
        CHECK(b.euler == 2);
        CHECK(b.survivor_low == 1);
        CHECK(b.survivor_high == 1);

        const auto parity = eprime_euler(3, 4, 1);
        CHECK(!parity.applicable);
        CHECK(parity.euler == 0);
        CHECK(!eprime_euler(3, 4, 3).applicable);
        CHECK_THROWS_AS(eprime_euler(3, 4, -1), std::invalid_argument);
    }
}
