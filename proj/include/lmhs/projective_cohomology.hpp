#pragma once

// Betti numbers, Euler characteristics, primitive middle cohomology and
// hypersurface Hodge numbers of smooth complete intersections in P^n.

#include "lmhs/exact_arith.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace lmhs {

/// Sorted tuple of positive degrees. Empty means the ambient projective space itself.
class Multidegree {
public:
    Multidegree() = default;
    Multidegree(std::initializer_list<int> degrees);
    explicit Multidegree(std::vector<int> degrees);

    const std::vector<int>& degrees() const { return degrees_; }
    int size() const { return static_cast<int>(degrees_.size()); }
    bool empty() const { return degrees_.empty(); }

    Multidegree with(int degree) const;
    /// Drop degree-1 entries (linear sections).
    Multidegree without_linear() const;
    BigInt product() const;

    std::string to_string() const;

    auto operator<=>(const Multidegree&) const = default;

private:
    std::vector<int> degrees_;
};

/// Smooth complete intersection of the given multidegree in P^ambient.
/// Codimension up to ambient+1 is allowed (codim ambient+1 is the empty variety).
class CompleteIntersection {
public:
    CompleteIntersection(int ambient_dim, Multidegree multidegree);

    int ambient_dim() const { return ambient_; }
    const Multidegree& multidegree() const { return degrees_; }
    int codim() const { return degrees_.size(); }
    int dim() const { return ambient_ - degrees_.size(); }
    bool is_empty() const { return dim() < 0; }

    std::string to_string() const;

    auto operator<=>(const CompleteIntersection&) const = default;

private:
    int ambient_;
    Multidegree degrees_;
};

/// Euler number e_n(d) of a smooth degree-d hypersurface in P^n, closed form.
BigInt euler_hypersurface(int n, int d);
/// Same quantity through e_n(d) = n d - (d-1) e_{n-1}(d), e_0(d) = 0.
BigInt euler_hypersurface_recurrence(int n, int d);
/// Same quantity through -sum_{i<n} C(n+1,i) (-d)^{n-i}.
BigInt euler_hypersurface_sum(int n, int d);

BigInt euler_complete_intersection(const CompleteIntersection& ci);

/// dim H^j. Throws for empty varieties.
BigInt betti(const CompleteIntersection& ci, int j);

/// Dimension of the reduced middle primitive cohomology.
/// Dimension 0: #points - 1. Empty: 0.
BigInt prim_middle_dim(const CompleteIntersection& ci);

/// P_n(d) = (d-1)((d-1)^n - (-1)^n)/d, n >= 1, d >= 1.
BigInt prim_hypersurface_closed_form(int n, int d);

/// C(n+1, d, j) by the alternating sum.
BigInt griffiths_coeff(int n, int d, int j);

/// (C(n+1,d,d i))_{i=1..n}; entry i-1 is dim Gr_F^{n-i} H^{n-1}_prim.
std::vector<BigInt> hypersurface_hodge_numbers(int n, int d);

/// Number of entries held by the invariant cache.
std::size_t cohomology_cache_size();

}  // namespace lmhs
