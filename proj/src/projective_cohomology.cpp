#include "lmhs/projective_cohomology.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace lmhs {

Multidegree::Multidegree(std::initializer_list<int> degrees)
    : Multidegree(std::vector<int>(degrees))
{
}

Multidegree::Multidegree(std::vector<int> degrees)
    : degrees_(std::move(degrees))
{
    for (int d : degrees_)
        if (d < 1)
            throw std::invalid_argument("Multidegree: degrees must be >= 1, got " + std::to_string(d));
    std::sort(degrees_.begin(), degrees_.end());
}

Multidegree Multidegree::with(int degree) const
{
    auto copy = degrees_;
    copy.push_back(degree);
    return Multidegree(std::move(copy));
}

Multidegree Multidegree::without_linear() const
{
    std::vector<int> kept;
    std::copy_if(degrees_.begin(), degrees_.end(), std::back_inserter(kept), [](int d) { return d != 1; });
    return Multidegree(std::move(kept));
}

BigInt Multidegree::product() const
{
    BigInt p = 1;
    for (int d : degrees_)
        p *= d;
    return p;
}

std::string Multidegree::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        os << (i ? "," : "") << degrees_[i];
    os << ")";
    return os.str();
}

CompleteIntersection::CompleteIntersection(int ambient_dim, Multidegree multidegree)
    : ambient_(ambient_dim)
    , degrees_(std::move(multidegree))
{
    if (ambient_ < 0)
        throw std::invalid_argument("CompleteIntersection: ambient dimension must be >= 0");
    if (degrees_.size() > ambient_ + 1)
        throw std::invalid_argument("CompleteIntersection: codimension " + std::to_string(degrees_.size())
                                    + " exceeds ambient dimension + 1 = " + std::to_string(ambient_ + 1));
}

std::string CompleteIntersection::to_string() const
{
    return "CI(P^" + std::to_string(ambient_) + ", " + degrees_.to_string() + ")";
}

BigInt euler_hypersurface(int n, int d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("euler_hypersurface: need n >= 1 and d >= 1");
    BigInt numerator = ipow(BigInt(1 - d), static_cast<unsigned long>(n + 1)) - 1;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), BigInt(d).get_mpz_t());
    return n + 1 + q;
}

BigInt euler_hypersurface_recurrence(int n, int d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("euler_hypersurface_recurrence: need n >= 1 and d >= 1");
    BigInt e = 0;
    for (int k = 1; k <= n; ++k)
        e = BigInt(k) * d - BigInt(d - 1) * e;
    return e;
}

BigInt euler_hypersurface_sum(int n, int d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("euler_hypersurface_sum: need n >= 1 and d >= 1");
    BigInt s = 0;
    for (int i = 0; i <= n - 1; ++i)
        s += binomial(n + 1, i) * ipow(BigInt(-d), static_cast<unsigned long>(n - i));
    return -s;
}

namespace {

struct Invariants {
    BigInt euler;
    BigInt middle_betti;
    BigInt prim;
};

// Read-consistent memo keyed by (n, sorted multidegree). Concurrent inserts of
// the same key store identical values, so a lost race is harmless.
class InvariantCache {
public:
    Invariants get(const CompleteIntersection& ci)
    {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(ci);
            if (it != table_.end())
                return it->second;
        }
        Invariants value = compute(ci);
        std::unique_lock lock(mutex_);
        table_.emplace(ci, value);
        return value;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    static Invariants compute(const CompleteIntersection& ci)
    {
        Invariants inv;
        const int m = ci.dim();
        if (m < 0) {
            inv.euler = 0;
            inv.middle_betti = 0;
            inv.prim = 0;
            return inv;
        }
        const auto& ds = ci.multidegree().degrees();
        inv.euler = ci.multidegree().product() * series_quotient_coeff(ci.ambient_dim() + 1, ds, m);
        if (m == 0) {
            inv.middle_betti = inv.euler;
            inv.prim = inv.euler - 1;
        } else if (m % 2 == 0) {
            inv.middle_betti = inv.euler - m;
            inv.prim = inv.middle_betti - 1;
        } else {
            inv.middle_betti = m + 1 - inv.euler;
            inv.prim = inv.middle_betti;
        }
        return inv;
    }

    mutable std::shared_mutex mutex_;
    std::map<CompleteIntersection, Invariants> table_;
};

InvariantCache& cache()
{
    static InvariantCache instance;
    return instance;
}

}  // namespace

std::size_t cohomology_cache_size()
{
    return cache().size();
}

BigInt euler_complete_intersection(const CompleteIntersection& ci)
{
    return cache().get(ci).euler;
}

BigInt betti(const CompleteIntersection& ci, int j)
{
    if (ci.is_empty())
        throw std::invalid_argument("betti: " + ci.to_string() + " is empty");
    const int m = ci.dim();
    if (j < 0 || j > 2 * m)
        return 0;
    if (j != m)
        return j % 2 == 0 ? 1 : 0;
    return cache().get(ci).middle_betti;
}

BigInt prim_middle_dim(const CompleteIntersection& ci)
{
    return cache().get(ci).prim;
}

BigInt prim_hypersurface_closed_form(int n, int d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("prim_hypersurface_closed_form: need n >= 1 and d >= 1");
    BigInt numerator = BigInt(d - 1) * (ipow(BigInt(d - 1), n) - ipow(BigInt(-1), n));
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(), BigInt(d).get_mpz_t());
    if (r != 0)
        throw std::logic_error("prim_hypersurface_closed_form: non-integral P_n(d)");
    return q;
}

BigInt griffiths_coeff(int n, int d, int j)
{
    if (n < 1 || d < 2)
        throw std::invalid_argument("griffiths_coeff: need n >= 1 and d >= 2");
    BigInt sum = 0;
    for (int k = 0; k <= n + 1; ++k) {
        BigInt term = binomial(n + 1, k) * binomial(j - 1 - static_cast<long>(k) * (d - 1), n);
        if (k % 2)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

std::vector<BigInt> hypersurface_hodge_numbers(int n, int d)
{
    if (n < 1 || d < 2)
        throw std::invalid_argument("hypersurface_hodge_numbers: need n >= 1 and d >= 2");
    std::vector<BigInt> h;
    h.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        h.push_back(griffiths_coeff(n, d, d * i));
    return h;
}

}  // namespace lmhs
