#pragma once

// Formal sums of pure Hodge structures: Tate classes and twisted primitive
// middle cohomology of complete intersections, with weight bookkeeping and
// the Lefschetz expansion of an N-primitive decomposition.

#include "lmhs/projective_cohomology.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace lmhs {

/// Tate(m) is Q(-m). Prim(ci, m) is the reduced primitive middle cohomology of ci twisted by Q(-m).
class Summand {
public:
    enum class Kind { tate, prim };

    static Summand tate(int twist);
    static Summand prim(const CompleteIntersection& ci, int twist);

    Kind kind() const { return kind_; }
    int twist() const { return twist_; }
    /// Only meaningful for Prim summands.
    const CompleteIntersection& variety() const { return ci_; }

    int weight() const;
    BigInt dim() const;
    Summand twisted(int m) const;

    std::string to_string() const;

    auto operator<=>(const Summand&) const = default;

private:
    Summand(Kind kind, int twist, CompleteIntersection ci);

    Kind kind_;
    int twist_;
    CompleteIntersection ci_;
};

class FormalSum {
public:
    using Terms = std::map<Summand, std::int64_t>;

    FormalSum() = default;
    explicit FormalSum(const Summand& s, std::int64_t mult = 1) { add(s, mult); }

    /// Adds mult copies; Prim summands of dimension 0 are dropped.
    void add(const Summand& s, std::int64_t mult = 1);
    FormalSum& operator+=(const FormalSum& rhs);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    BigInt total_dim() const;
    bool is_pure(int weight) const;
    /// Weight shared by every summand, if any.
    std::optional<int> pure_weight() const;
    bool has_prim() const;

    FormalSum twisted(int m) const;

    std::string to_string() const;

    bool operator==(const FormalSum&) const = default;

private:
    Terms terms_;
};

inline FormalSum twist(const FormalSum& s, int m) { return s.twisted(m); }

/// Grade w holds a FormalSum pure of weight w. Empty grades are not stored.
class GradedObject {
public:
    void add(int weight, const FormalSum& piece);
    const std::map<int, FormalSum>& grades() const { return grades_; }
    BigInt dim(int weight) const;
    BigInt total_dim() const;
    bool empty() const { return grades_.empty(); }

    bool operator==(const GradedObject&) const = default;

private:
    std::map<int, FormalSum> grades_;
};

struct PrimitiveDecomposition {
    int center_weight = 0;
    /// level k -> N-primitive classes of weight center_weight + k
    std::map<int, FormalSum> primitives;

    void add(int level, const FormalSum& piece);
    BigInt dim(int level) const;
};

/// H^j(ci)(-extra_twist) split into Tate and primitive pieces.
FormalSum cohomology_as_formal_sum(const CompleteIntersection& ci, int j, int extra_twist);

/// Grade w0+k-2i receives primitives[k] (x) Q(i), i.e. twist field lowered by i, for 0 <= i <= k.
GradedObject expand_lefschetz(const PrimitiveDecomposition& pd);

/// Hodge level (max p - min p with Gr_F^p != 0). Defined when every Prim summand
/// is a hypersurface once linear sections are stripped; std::nullopt otherwise.
std::optional<int> level(const FormalSum& s);

}  // namespace lmhs
