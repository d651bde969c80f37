#pragma once

// Batch invariant checks over ranges of inputs. Each sweep kernel exists in an
// OpenMP-parallel form and a serial reference form selected by Execution; both
// report failures in input order.

#include "lmhs/weight_ss.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lmhs {

struct SweepFailure {
    std::string input;
    std::string detail;
};

struct SweepResult {
    std::string suite;
    std::size_t cases = 0;
    std::vector<SweepFailure> failures;
    bool passed() const { return failures.empty(); }
};

struct SweepCase {
    std::string label;
    /// Returns a description of the violated invariant, or nullopt when it holds.
    std::function<std::optional<std::string>()> check;
};

SweepResult run_sweep(std::string suite, const std::vector<SweepCase>& cases, Execution execution);

/// All (n, nondecreasing d_1 <= ... <= d_r) with n in [n_lo, n_hi], r in [r_lo, r_hi], d in [d_lo, d_hi].
std::vector<DegenerationInput> enumerate_degenerations(int n_lo, int n_hi, int r_lo, int r_hi, int d_lo, int d_hi);

struct SweepBounds {
    int n_lo = 2, n_hi = 8;
    int r_lo = 2, r_hi = 8;
    int d_lo = 1, d_hi = 4;
};

SweepResult sweep_identity_04(const SweepBounds& b, Execution e = Execution::parallel);
SweepResult sweep_all_ones_identity(int n_lo, int n_hi, int d_lo, int d_hi, Execution e = Execution::parallel);
SweepResult sweep_e1_purity(const SweepBounds& b, Execution e = Execution::parallel);
SweepResult sweep_e1_euler(const SweepBounds& b, Execution e = Execution::parallel);
/// Conservation, symmetry, and the embedding dim primitives[k] <= dim E_1^{-k,k}.
SweepResult sweep_limit_mhs(const SweepBounds& b, bool with_e1_embedding, Execution e = Execution::parallel);
SweepResult sweep_euler_numbers(int n_max, int d_max, Execution e = Execution::parallel);
SweepResult sweep_griffiths(int n_max, int d_max, Execution e = Execution::parallel);
SweepResult sweep_truncated_homology(int r_max, Execution e = Execution::parallel);
SweepResult sweep_eprime_euler(int n_lo, int n_hi, int r_lo, int r_hi, Execution e = Execution::parallel);
SweepResult sweep_nilpotency(int n_lo, int n_hi, int r_max, Execution e = Execution::parallel);
SweepResult sweep_level_bound(int n_lo, int n_hi, int r_lo, int r_hi, Execution e = Execution::parallel);
SweepResult sweep_pencil(int n_lo, int n_hi, int d_max, Execution e = Execution::parallel);

}  // namespace lmhs
