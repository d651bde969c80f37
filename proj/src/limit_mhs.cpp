#include "lmhs/limit_mhs.hpp"

#include <bit>
#include <stdexcept>

namespace lmhs {

PrimitiveDecomposition primitive_graded(const DegenerationInput& input)
{
    const int n = input.n();
    const int r = input.r();
    PrimitiveDecomposition pd;
    pd.center_weight = n - 1;

    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        const int s = std::popcount(mask);

        // Y_I at level k = |I| - 1, twisted by k.
        const int k = s - 1;
        if (k <= n - 1) {
            FormalSum piece;
            piece.add(Summand::prim(CompleteIntersection(n, input.subset_degrees(mask)), k));
            pd.add(k, piece);
        }

        // Y'_I at level k = |I| - 2 < n - 1, twisted by k + 1.
        const int kp = s - 2;
        if (kp < 0)
            continue;
        const Multidegree primed = input.subset_degrees_primed(mask);
        if (kp < n - 1) {
            FormalSum piece;
            piece.add(Summand::prim(CompleteIntersection(n, primed), kp + 1));
            pd.add(kp, piece);
        } else if (primed.size() <= n) {
            // |I| >= n+1 forces n+2 or more equations in P^n, so Y'_I is empty here.
            throw std::logic_error("primitive_graded: nonempty Y'_I at level " + std::to_string(kp) + " for "
                                   + input.to_string());
        }
    }

    const BigInt m = binomial(r - 1, n);
    if (m > 0) {
        FormalSum tate;
        tate.add(Summand::tate(n - 1), m.get_si());
        pd.add(n - 1, tate);
    }
    return pd;
}

LimitMHS limit_mhs(const DegenerationInput& input)
{
    LimitMHS out;
    out.primitive = primitive_graded(input);
    out.full_graded = expand_lefschetz(out.primitive);
    out.middle_has_hyperplane_class = (input.n() - 1) % 2 == 0;
    return out;
}

IdentityCheck verify_identity_04(const DegenerationInput& input)
{
    const int n = input.n();
    const int r = input.r();
    IdentityCheck check;
    check.lhs = prim_middle_dim(CompleteIntersection(n, Multidegree{input.d0()}));
    check.rhs = 0;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        const int s = std::popcount(mask);
        const Multidegree d_i = input.subset_degrees(mask);
        if (d_i.size() <= n + 1)
            check.rhs += s * prim_middle_dim(CompleteIntersection(n, d_i));
        if (s >= 2 && d_i.size() + 1 <= n + 1)
            check.rhs += (s - 1) * prim_middle_dim(CompleteIntersection(n, d_i.with(input.d0())));
    }
    check.rhs += n * binomial(r - 1, n);
    check.equal = check.lhs == check.rhs;
    return check;
}

IdentityCheck verify_all_ones_identity(int n, int d)
{
    if (n < 2 || d < 2)
        throw std::invalid_argument("verify_all_ones_identity: need n >= 2 and d >= 2");
    IdentityCheck check;
    check.lhs = prim_hypersurface_closed_form(n, d);
    check.rhs = n * binomial(d - 1, n);
    for (int k = 0; k <= n - 3; ++k)
        check.rhs += (k + 1) * binomial(d, k + 2) * prim_hypersurface_closed_form(n - k - 2, d);
    check.equal = check.lhs == check.rhs;
    return check;
}

BigInt JordanProfile::total_dim() const
{
    BigInt total = 0;
    for (const auto& [size, count] : blocks)
        total += size * count;
    return total;
}

JordanProfile jordan_profile(const DegenerationInput& input)
{
    JordanProfile profile;
    for (const auto& [k, piece] : primitive_graded(input).primitives) {
        BigInt d = piece.total_dim();
        if (d != 0)
            profile.blocks[k + 1] = d;
    }
    return profile;
}

std::map<int, std::optional<int>> level_report(const DegenerationInput& input)
{
    const int n = input.n();
    const LimitMHS mhs = limit_mhs(input);
    std::map<int, std::optional<int>> report;
    for (int k = -(n - 1); k <= n - 1; ++k) {
        auto it = mhs.full_graded.grades().find(n - 1 + k);
        report[k] = it == mhs.full_graded.grades().end() ? std::optional<int>(0) : level(it->second);
    }
    return report;
}

FormalSum other_degrees(const DegenerationInput& input, int j)
{
    const int n = input.n();
    if (j == n - 1)
        throw std::invalid_argument("other_degrees: j = n-1 is the middle degree; use primitive_graded");
    if (j < 0 || j > 2 * (n - 1))
        throw std::invalid_argument("other_degrees: j must lie in [0, 2(n-1)], got " + std::to_string(j));
    FormalSum out;
    if (j % 2 == 0)
        out.add(Summand::tate(j / 2));
    return out;
}

}  // namespace lmhs
