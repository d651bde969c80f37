#pragma once

// E_1 page of the weight spectral sequence of the degeneration
// {g_1 ... g_r = t g_0} of hypersurfaces of P^n, for nearby and vanishing
// cycles, plus the same index combinatorics over a user-supplied table.

#include "lmhs/formal_mhs.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lmhs {

/// n >= 2, r >= 2 degrees d_1..d_r >= 1; d_0 is their sum.
class DegenerationInput {
public:
    DegenerationInput(int n, std::vector<int> degrees);

    int n() const { return n_; }
    int r() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    int d0() const;

    /// Multidegree of Y_I for the subset encoded by mask (bit k <-> d_{k+1}).
    Multidegree subset_degrees(unsigned mask) const;
    /// Multidegree of Y'_I (d_I with d_0 appended).
    Multidegree subset_degrees_primed(unsigned mask) const;

    std::string to_string() const;

private:
    int n_;
    std::vector<int> degrees_;
};

enum class E1Kind { nearby, vanishing, custom };

/// One term of an E_1 cell: H^degree of Y_I (or Y'_I when primed) twisted by Q(-twist).
struct E1TraceEntry {
    int i = 0;
    int j = 0;
    int l = 0;
    unsigned subset = 0;
    bool primed = false;
    int degree = 0;
    int twist = 0;
};

struct E1Cell {
    BigInt dim = 0;
    /// Absent for pages built from a dimension table.
    std::optional<FormalSum> summands;
};

struct E1Page {
    int n = 0;
    E1Kind kind = E1Kind::nearby;
    /// (i, j) -> E_1^{-i, j+i}; cells of dimension zero are not stored.
    std::map<std::pair<int, int>, E1Cell> cells;
    std::vector<E1TraceEntry> trace;

    int weight(int i, int j) const { return j + n - 1 + i; }
    BigInt dim(int i, int j) const;
    const E1Cell* find(int i, int j) const;
    bool same_dims(const E1Page& other) const;
};

enum class Execution { serial, parallel };

struct E1Options {
    bool trace = false;
    Execution execution = Execution::parallel;
};

E1Page build_e1_nearby(const DegenerationInput& input, const E1Options& options = {});
E1Page build_e1_vanishing(const DegenerationInput& input, const E1Options& options = {});

/// Aggregate dimensions: YI[s][j] = dim of the direct sum of H^j(Y_I) over |I| = s, likewise YpI for Y'_I.
struct CohomologyTable {
    int n = 0;
    int r = 0;
    std::map<int, std::map<int, BigInt>> yi;
    std::map<int, std::map<int, BigInt>> ypi;

    /// Table built from P^n complete-intersection data.
    static CohomologyTable from_projective_space(const DegenerationInput& input);
};

/// Throws std::invalid_argument naming the first missing (|I|, j).
E1Page build_e1_custom(const CohomologyTable& table, int n, int r);

/// Relation sum_{i,j} (-1)^j dim E_1 = kE1EulerSign * (-1)^{n-1} * e_n(d_0),
/// with kE1EulerSign fixed on n = 2, degrees = (1,1).
inline constexpr int kE1EulerSign = 1;

struct EulerCheck {
    BigInt lhs;
    BigInt rhs;
    int sign = 1;
    bool equal() const { return lhs == rhs; }
};

EulerCheck euler_characteristic_check(const E1Page& page, const DegenerationInput& input);

/// Every summand at (i,j) has weight j+n-1+i; returns the first offending cell otherwise.
std::optional<std::pair<int, int>> first_impure_cell(const E1Page& page);

}  // namespace lmhs
