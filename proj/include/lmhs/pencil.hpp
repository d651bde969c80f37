#pragma once

// Betti arithmetic behind the non-vanishing of Lefschetz-pencil vanishing
// cycles for Y = P^n and L = O(d1) (x) O(d2).

#include "lmhs/weight_ss.hpp"

#include <map>
#include <string>
#include <vector>

namespace lmhs {

struct PencilInput {
    PencilInput(int n, int d1, int d2);

    int n;
    int d1;
    int d2;
    int d0() const { return d1 + d2; }
    DegenerationInput as_degeneration() const { return DegenerationInput(n, {d1, d2}); }
};

enum class PencilVariety { Y, Y0, Y1, Y2, Z, Sigma };

std::string to_string(PencilVariety v);

/// gamma^j(V) = dim H^{j + dim V}(V); zero for empty V.
class GammaTable {
public:
    explicit GammaTable(const PencilInput& input);

    BigInt gamma(PencilVariety v, int j) const;
    int dim(PencilVariety v) const;
    const CompleteIntersection& variety(PencilVariety v) const;

private:
    std::map<PencilVariety, CompleteIntersection> varieties_;
};

inline GammaTable gamma_table(const PencilInput& input) { return GammaTable(input); }

/// Three-column page: Z(-1) at i=1, Y_1 + Y_2 + Sigma(-1) at i=0, Z at i=-1.
E1Page e1_table(const PencilInput& input);

struct InequalityLine {
    std::string statement;
    BigInt lhs;
    BigInt rhs;
    bool is_equality = false;
    bool holds = false;
};

/// The weak Lefschetz relations among gamma values, one line per comparison.
std::vector<InequalityLine> weak_lefschetz_inequalities(const PencilInput& input);

enum class SufficientBranch { none, sigma_exceeds_z, z_exceeds_y1, both };

std::string to_string(SufficientBranch b);

struct Theorem6Report {
    BigInt gamma0_y0;
    BigInt gamma_minus1_y;
    bool holds = false;
    SufficientBranch branch = SufficientBranch::none;
};

Theorem6Report theorem6_inequality(const PencilInput& input);

}  // namespace lmhs
