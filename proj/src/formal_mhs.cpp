#include "lmhs/formal_mhs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lmhs {

Summand::Summand(Kind kind, int twist, CompleteIntersection ci)
    : kind_(kind)
    , twist_(twist)
    , ci_(std::move(ci))
{
}

Summand Summand::tate(int twist)
{
    return Summand(Kind::tate, twist, CompleteIntersection(0, {}));
}

Summand Summand::prim(const CompleteIntersection& ci, int twist)
{
    return Summand(Kind::prim, twist, ci);
}

int Summand::weight() const
{
    if (kind_ == Kind::tate)
        return 2 * twist_;
    return ci_.dim() + 2 * twist_;
}

BigInt Summand::dim() const
{
    return kind_ == Kind::tate ? BigInt(1) : prim_middle_dim(ci_);
}

Summand Summand::twisted(int m) const
{
    return Summand(kind_, twist_ + m, ci_);
}

std::string Summand::to_string() const
{
    std::ostringstream os;
    if (kind_ == Kind::tate)
        os << "Q(" << -twist_ << ")";
    else
        os << "Prim" << ci_.to_string() << "(" << -twist_ << ")";
    return os.str();
}

void FormalSum::add(const Summand& s, std::int64_t mult)
{
    if (mult < 0)
        throw std::invalid_argument("FormalSum::add: negative multiplicity");
    if (mult == 0)
        return;
    if (s.kind() == Summand::Kind::prim && s.dim() == 0)
        return;
    terms_[s] += mult;
}

FormalSum& FormalSum::operator+=(const FormalSum& rhs)
{
    for (const auto& [s, mult] : rhs.terms_)
        terms_[s] += mult;
    return *this;
}

BigInt FormalSum::total_dim() const
{
    BigInt total = 0;
    for (const auto& [s, mult] : terms_)
        total += s.dim() * BigInt(static_cast<long>(mult));
    return total;
}

bool FormalSum::is_pure(int weight) const
{
    return std::all_of(terms_.begin(), terms_.end(), [weight](const auto& t) { return t.first.weight() == weight; });
}

std::optional<int> FormalSum::pure_weight() const
{
    if (terms_.empty())
        return std::nullopt;
    int w = terms_.begin()->first.weight();
    return is_pure(w) ? std::optional<int>(w) : std::nullopt;
}

bool FormalSum::has_prim() const
{
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.kind() == Summand::Kind::prim; });
}

FormalSum FormalSum::twisted(int m) const
{
    FormalSum out;
    for (const auto& [s, mult] : terms_)
        out.terms_.emplace(s.twisted(m), mult);
    return out;
}

std::string FormalSum::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, mult] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        if (mult != 1)
            os << mult << "*";
        os << s.to_string();
    }
    return os.str();
}

void GradedObject::add(int weight, const FormalSum& piece)
{
    if (piece.empty())
        return;
    if (!piece.is_pure(weight))
        throw std::logic_error("GradedObject::add: piece " + piece.to_string() + " is not pure of weight "
                               + std::to_string(weight));
    grades_[weight] += piece;
}

BigInt GradedObject::dim(int weight) const
{
    auto it = grades_.find(weight);
    return it == grades_.end() ? BigInt(0) : it->second.total_dim();
}

BigInt GradedObject::total_dim() const
{
    BigInt total = 0;
    for (const auto& [w, piece] : grades_)
        total += piece.total_dim();
    return total;
}

void PrimitiveDecomposition::add(int level, const FormalSum& piece)
{
    if (level < 0)
        throw std::invalid_argument("PrimitiveDecomposition::add: negative level");
    if (piece.empty())
        return;
    if (!piece.is_pure(center_weight + level))
        throw std::logic_error("PrimitiveDecomposition::add: piece at level " + std::to_string(level)
                               + " is not pure of weight " + std::to_string(center_weight + level));
    primitives[level] += piece;
}

BigInt PrimitiveDecomposition::dim(int level) const
{
    auto it = primitives.find(level);
    return it == primitives.end() ? BigInt(0) : it->second.total_dim();
}

FormalSum cohomology_as_formal_sum(const CompleteIntersection& ci, int j, int extra_twist)
{
    FormalSum out;
    const int m = ci.dim();
    if (m < 0 || j < 0 || j > 2 * m)
        return out;
    if (j != m) {
        if (j % 2 == 0)
            out.add(Summand::tate(j / 2 + extra_twist));
        return out;
    }
    out.add(Summand::prim(ci, extra_twist));
    if (m % 2 == 0)
        out.add(Summand::tate(m / 2 + extra_twist));
    return out;
}

GradedObject expand_lefschetz(const PrimitiveDecomposition& pd)
{
    GradedObject out;
    for (const auto& [k, piece] : pd.primitives)
        for (int i = 0; i <= k; ++i)
            out.add(pd.center_weight + k - 2 * i, piece.twisted(-i));
    return out;
}

namespace {

// Hodge p-values carried by a single summand, or nullopt when unknown.
std::optional<std::pair<int, int>> p_range(const Summand& s)
{
    if (s.kind() == Summand::Kind::tate)
        return std::pair{s.twist(), s.twist()};

    const CompleteIntersection& ci = s.variety();
    const Multidegree reduced = ci.multidegree().without_linear();
    if (reduced.size() != 1)
        return std::nullopt;
    // CI(n; 1^a, d) is a degree-d hypersurface in P^{n-a}.
    const int ambient = ci.ambient_dim() - (ci.codim() - 1);
    const int d = reduced.degrees().front();
    const auto hodge = hypersurface_hodge_numbers(ambient, d);
    int lo = 0, hi = 0;
    bool any = false;
    for (int i = 1; i <= ambient; ++i) {
        if (hodge[static_cast<std::size_t>(i - 1)] == 0)
            continue;
        const int p = ambient - i + s.twist();
        lo = any ? std::min(lo, p) : p;
        hi = any ? std::max(hi, p) : p;
        any = true;
    }
    if (!any)
        return std::nullopt;
    return std::pair{lo, hi};
}

}  // namespace

std::optional<int> level(const FormalSum& s)
{
    if (s.empty())
        return 0;
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [summand, mult] : s.terms()) {
        auto range = p_range(summand);
        if (!range)
            return std::nullopt;
        lo = first ? range->first : std::min(lo, range->first);
        hi = first ? range->second : std::max(hi, range->second);
        first = false;
    }
    return hi - lo;
}

}  // namespace lmhs
