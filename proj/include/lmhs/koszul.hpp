#pragma once

// Koszul complexes on r identity morphisms of Q, their stupid truncations,
// exact homology ranks, and the Euler characteristic of the 'E_1 diagonals.

#include "lmhs/exact_arith.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace lmhs {

using Rational = mpq_class;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    bool is_zero() const;

    /// Exact rank by fraction-free (Bareiss) elimination after clearing row denominators.
    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Chain complex C_lo .. C_hi with boundaries d_i : C_i -> C_{i-1}.
class ChainComplex {
public:
    ChainComplex(int lo, int hi);

    int lo() const { return lo_; }
    int hi() const { return hi_; }

    std::size_t dim(int degree) const;
    void set_dim(int degree, std::size_t dim);

    /// Matrix of size dim(degree-1) x dim(degree); zero map if unset.
    RationalMatrix boundary(int degree) const;
    void set_boundary(int degree, RationalMatrix m);

    /// d_{i} d_{i+1} = 0 for every i.
    bool is_complex() const;

    std::size_t homology_dim(int degree) const;
    std::map<int, std::size_t> homology() const;
    BigInt euler_characteristic() const;

    /// Keeps degrees in [p, q] and zeroes the rest.
    ChainComplex truncated(int p, int q) const;

private:
    int lo_;
    int hi_;
    std::map<int, std::size_t> dims_;
    std::map<int, RationalMatrix> boundaries_;
};

/// Exterior-algebra complex of r generators, boundary = contraction with (1,...,1).
ChainComplex koszul_identity(int r);

/// Homology of the truncation of K^(r) to degrees [p, q]; nonzero degrees only.
std::map<int, std::size_t> truncated_homology(int r, int p, int q);

struct EPrimeEuler {
    /// Euler characteristic of the assembled diagonal, computed from exact ranks.
    BigInt euler;
    /// Expected from the two survivors C(r-1, 0) at degree 1 and C(r-1, n) at degree n.
    BigInt survivor_low;
    BigInt survivor_high;
    BigInt expected;
    bool applicable = false;
};

/// Sign contributed to the Euler characteristic by the Y-part shift [-2l-1].
inline constexpr int kKoszulShiftSign = -1;

/// Returns an all-zero, non-applicable result unless 0 <= k <= n-1 and k+n-1 is even.
/// Throws std::invalid_argument for k < 0.
EPrimeEuler eprime_euler(int n, int r, int k);

}  // namespace lmhs
