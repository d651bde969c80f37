#include "lmhs/pencil.hpp"

#include <stdexcept>

namespace lmhs {

PencilInput::PencilInput(int n_, int d1_, int d2_)
    : n(n_)
    , d1(d1_)
    , d2(d2_)
{
    if (n < 2)
        throw std::invalid_argument("PencilInput: n must be >= 2");
    if (d1 < 1 || d2 < 1)
        throw std::invalid_argument("PencilInput: degrees must be >= 1");
}

std::string to_string(PencilVariety v)
{
    switch (v) {
    case PencilVariety::Y: return "Y";
    case PencilVariety::Y0: return "Y0";
    case PencilVariety::Y1: return "Y1";
    case PencilVariety::Y2: return "Y2";
    case PencilVariety::Z: return "Z";
    case PencilVariety::Sigma: return "Sigma";
    }
    return "?";
}

GammaTable::GammaTable(const PencilInput& input)
{
    const int n = input.n;
    varieties_.emplace(PencilVariety::Y, CompleteIntersection(n, {}));
    varieties_.emplace(PencilVariety::Y0, CompleteIntersection(n, {input.d0()}));
    varieties_.emplace(PencilVariety::Y1, CompleteIntersection(n, {input.d1}));
    varieties_.emplace(PencilVariety::Y2, CompleteIntersection(n, {input.d2}));
    varieties_.emplace(PencilVariety::Z, CompleteIntersection(n, {input.d1, input.d2}));
    varieties_.emplace(PencilVariety::Sigma, CompleteIntersection(n, {input.d0(), input.d1, input.d2}));
}

const CompleteIntersection& GammaTable::variety(PencilVariety v) const
{
    return varieties_.at(v);
}

int GammaTable::dim(PencilVariety v) const
{
    return variety(v).dim();
}

BigInt GammaTable::gamma(PencilVariety v, int j) const
{
    const CompleteIntersection& ci = variety(v);
    if (ci.is_empty())
        return 0;
    return betti(ci, j + ci.dim());
}

E1Page e1_table(const PencilInput& input)
{
    const int n = input.n;
    const GammaTable table(input);
    const auto& y1 = table.variety(PencilVariety::Y1);
    const auto& y2 = table.variety(PencilVariety::Y2);
    const auto& z = table.variety(PencilVariety::Z);
    const auto& sigma = table.variety(PencilVariety::Sigma);

    E1Page page;
    page.n = n;
    page.kind = E1Kind::nearby;
    auto put = [&page](int i, int j, const FormalSum& piece) {
        if (piece.empty())
            return;
        E1Cell& cell = page.cells[{i, j}];
        if (!cell.summands)
            cell.summands.emplace();
        *cell.summands += piece;
        cell.dim += piece.total_dim();
    };

    for (int j = -(n - 1); j <= n - 1; ++j) {
        put(1, j, cohomology_as_formal_sum(z, j + n - 2, 1));
        put(0, j, cohomology_as_formal_sum(y1, j + n - 1, 0));
        put(0, j, cohomology_as_formal_sum(y2, j + n - 1, 0));
        put(0, j, cohomology_as_formal_sum(sigma, j + n - 3, 1));
        put(-1, j, cohomology_as_formal_sum(z, j + n - 2, 0));
    }
    return page;
}

std::vector<InequalityLine> weak_lefschetz_inequalities(const PencilInput& input)
{
    const GammaTable g(input);
    using V = PencilVariety;
    std::vector<InequalityLine> lines;
    auto ge = [&lines](std::string s, BigInt a, BigInt b) {
        const bool ok = a >= b;
        lines.push_back({std::move(s), std::move(a), std::move(b), false, ok});
    };
    auto eq = [&lines](std::string s, BigInt a, BigInt b) {
        const bool ok = a == b;
        lines.push_back({std::move(s), std::move(a), std::move(b), true, ok});
    };

    ge("gamma^0(Sigma) >= gamma^-1(Z)", g.gamma(V::Sigma, 0), g.gamma(V::Z, -1));
    eq("gamma^-1(Z) = gamma^-2(Y1)", g.gamma(V::Z, -1), g.gamma(V::Y1, -2));
    eq("gamma^-1(Z) = gamma^-2(Y2)", g.gamma(V::Z, -1), g.gamma(V::Y2, -2));
    eq("gamma^-2(Y1) = gamma^-3(Y)", g.gamma(V::Y1, -2), g.gamma(V::Y, -3));
    eq("gamma^-2(Y2) = gamma^-3(Y)", g.gamma(V::Y2, -2), g.gamma(V::Y, -3));
    ge("gamma^0(Z) >= gamma^-1(Y1)", g.gamma(V::Z, 0), g.gamma(V::Y1, -1));
    ge("gamma^0(Z) >= gamma^-1(Y2)", g.gamma(V::Z, 0), g.gamma(V::Y2, -1));
    eq("gamma^-1(Y1) = gamma^-2(Y)", g.gamma(V::Y1, -1), g.gamma(V::Y, -2));
    eq("gamma^-1(Y2) = gamma^-2(Y)", g.gamma(V::Y2, -1), g.gamma(V::Y, -2));
    ge("gamma^0(Y1) >= gamma^-1(Y)", g.gamma(V::Y1, 0), g.gamma(V::Y, -1));
    ge("gamma^0(Y2) >= gamma^-1(Y)", g.gamma(V::Y2, 0), g.gamma(V::Y, -1));
    return lines;
}

std::string to_string(SufficientBranch b)
{
    switch (b) {
    case SufficientBranch::none: return "none";
    case SufficientBranch::sigma_exceeds_z: return "sigma_exceeds_z";
    case SufficientBranch::z_exceeds_y1: return "z_exceeds_y1";
    case SufficientBranch::both: return "both";
    }
    return "?";
}

Theorem6Report theorem6_inequality(const PencilInput& input)
{
    const GammaTable g(input);
    using V = PencilVariety;
    Theorem6Report report;
    report.gamma0_y0 = g.gamma(V::Y0, 0);
    report.gamma_minus1_y = g.gamma(V::Y, -1);
    report.holds = report.gamma0_y0 > report.gamma_minus1_y;

    const bool first = g.gamma(V::Sigma, 0) > g.gamma(V::Z, -1);
    const bool second = g.gamma(V::Z, 0) - g.gamma(V::Y1, -1) > 0;
    report.branch = first && second ? SufficientBranch::both
                  : first           ? SufficientBranch::sigma_exceeds_z
                  : second          ? SufficientBranch::z_exceeds_y1
                                    : SufficientBranch::none;
    return report;
}

}  // namespace lmhs
