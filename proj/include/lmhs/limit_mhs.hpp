#pragma once

// Graded pieces of the limit mixed Hodge structure on H^{n-1}_prim(X_inf)
// for Y = P^n, their Lefschetz expansion, the subset dimension identity and Jordan data.

#include "lmhs/formal_mhs.hpp"
#include "lmhs/weight_ss.hpp"

#include <map>
#include <optional>

namespace lmhs {

/// N-primitive pieces centered at weight n-1.
PrimitiveDecomposition primitive_graded(const DegenerationInput& input);

struct LimitMHS {
    PrimitiveDecomposition primitive;
    GradedObject full_graded;
    /// Full H^{n-1} carries one more Tate((n-1)/2) at weight n-1 when n-1 is even.
    bool middle_has_hyperplane_class = false;
};

LimitMHS limit_mhs(const DegenerationInput& input);

struct IdentityCheck {
    BigInt lhs;
    BigInt rhs;
    bool equal = false;
};

/// P_n(d_0) against the subset sum over Y_I, Y'_I plus n C(r-1, n).
IdentityCheck verify_identity_04(const DegenerationInput& input);

/// Special case d_k = 1, d_0 = d = r:
/// P_n(d) = sum_{0<=k<=n-3} (k+1) C(d,k+2) P_{n-k-2}(d) + n C(d-1, n).
IdentityCheck verify_all_ones_identity(int n, int d);

struct JordanProfile {
    /// block size -> count; zero counts are not stored
    std::map<int, BigInt> blocks;
    BigInt total_dim() const;
};

JordanProfile jordan_profile(const DegenerationInput& input);

/// k -> level of Gr^W_{n-1+k} H^{n-1}_prim (nullopt where undefined), for k in [-(n-1), n-1].
std::map<int, std::optional<int>> level_report(const DegenerationInput& input);

/// H^j(X_inf) for j != n-1: Q(-j/2) for even j, zero for odd j.
FormalSum other_degrees(const DegenerationInput& input, int j);

}  // namespace lmhs
