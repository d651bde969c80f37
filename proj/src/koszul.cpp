#include "lmhs/koszul.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>

namespace lmhs {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , data_(rows * cols, Rational(0))
{
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("RationalMatrix: dimension mismatch in product");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

bool RationalMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

std::size_t RationalMatrix::rank() const
{
    if (rows_ == 0 || cols_ == 0)
        return 0;

    std::vector<std::vector<BigInt>> a(rows_, std::vector<BigInt>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        BigInt denom_lcm = 1;
        for (std::size_t j = 0; j < cols_; ++j)
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), (*this)(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& x = (*this)(i, j);
            a[i][j] = x.get_num() * (denom_lcm / x.get_den());
        }
    }

    // Bareiss: after step k every entry below the pivot row is divisible by the previous pivot.
    std::size_t rank = 0;
    BigInt prev_pivot = 1;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        std::swap(a[pivot], a[rank]);
        const BigInt& p = a[rank][col];
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            for (std::size_t j = col + 1; j < cols_; ++j) {
                BigInt v = p * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

ChainComplex::ChainComplex(int lo, int hi)
    : lo_(lo)
    , hi_(hi)
{
    if (lo > hi)
        throw std::invalid_argument("ChainComplex: empty degree range");
}

std::size_t ChainComplex::dim(int degree) const
{
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

void ChainComplex::set_dim(int degree, std::size_t dim)
{
    if (degree < lo_ || degree > hi_)
        throw std::out_of_range("ChainComplex::set_dim: degree outside range");
    dims_[degree] = dim;
}

RationalMatrix ChainComplex::boundary(int degree) const
{
    auto it = boundaries_.find(degree);
    if (it != boundaries_.end())
        return it->second;
    return RationalMatrix(dim(degree - 1), dim(degree));
}

void ChainComplex::set_boundary(int degree, RationalMatrix m)
{
    if (m.rows() != dim(degree - 1) || m.cols() != dim(degree))
        throw std::invalid_argument("ChainComplex::set_boundary: shape does not match dims at degree "
                                    + std::to_string(degree));
    boundaries_[degree] = std::move(m);
}

bool ChainComplex::is_complex() const
{
    for (int i = lo_ + 1; i < hi_; ++i)
        if (!(boundary(i) * boundary(i + 1)).is_zero())
            return false;
    return true;
}

std::size_t ChainComplex::homology_dim(int degree) const
{
    const std::size_t cycles = dim(degree) - boundary(degree).rank();
    return cycles - boundary(degree + 1).rank();
}

std::map<int, std::size_t> ChainComplex::homology() const
{
    std::map<int, std::size_t> out;
    for (int i = lo_; i <= hi_; ++i) {
        const std::size_t h = homology_dim(i);
        if (h != 0)
            out[i] = h;
    }
    return out;
}

BigInt ChainComplex::euler_characteristic() const
{
    BigInt chi = 0;
    for (const auto& [i, h] : homology()) {
        if (i % 2 == 0)
            chi += static_cast<unsigned long>(h);
        else
            chi -= static_cast<unsigned long>(h);
    }
    return chi;
}

ChainComplex ChainComplex::truncated(int p, int q) const
{
    ChainComplex out(lo_, hi_);
    for (int i = lo_; i <= hi_; ++i)
        if (i >= p && i <= q)
            out.set_dim(i, dim(i));
    for (int i = lo_ + 1; i <= hi_; ++i)
        if (i - 1 >= p && i <= q)
            out.set_boundary(i, boundary(i));
    return out;
}

ChainComplex koszul_identity(int r)
{
    if (r < 1)
        throw std::invalid_argument("koszul_identity: r must be >= 1");
    if (r > 20)
        throw std::invalid_argument("koszul_identity: r > 20 is not supported");

    // Basis of degree i: subsets of {0..r-1} of size i, as bitmasks in increasing order.
    std::vector<std::vector<unsigned>> basis(static_cast<std::size_t>(r) + 1);
    for (unsigned mask = 0; mask < (1u << r); ++mask)
        basis[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

    ChainComplex k(0, r);
    for (int i = 0; i <= r; ++i)
        k.set_dim(i, basis[static_cast<std::size_t>(i)].size());

    for (int i = 1; i <= r; ++i) {
        const auto& src = basis[static_cast<std::size_t>(i)];
        const auto& dst = basis[static_cast<std::size_t>(i - 1)];
        std::map<unsigned, std::size_t> row_of;
        for (std::size_t a = 0; a < dst.size(); ++a)
            row_of[dst[a]] = a;
        RationalMatrix d(dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            // d(e_{s_0} ^ ... ^ e_{s_{i-1}}) = sum_t (-1)^t e_{... omit s_t ...}
            int position = 0;
            for (int g = 0; g < r; ++g) {
                if (!(src[col] & (1u << g)))
                    continue;
                d(row_of.at(src[col] & ~(1u << g)), col) = position % 2 == 0 ? 1 : -1;
                ++position;
            }
        }
        k.set_boundary(i, std::move(d));
    }
    return k;
}

namespace {

const ChainComplex& cached_koszul(int r)
{
    static std::mutex mutex;
    static std::map<int, ChainComplex> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(r);
    if (it == cache.end())
        it = cache.emplace(r, koszul_identity(r)).first;
    return it->second;
}

}  // namespace

std::map<int, std::size_t> truncated_homology(int r, int p, int q)
{
    if (p > q)
        throw std::invalid_argument("truncated_homology: p > q");
    if (p < 0)
        throw std::invalid_argument("truncated_homology: p < 0");
    return cached_koszul(r).truncated(p, q).homology();
}

EPrimeEuler eprime_euler(int n, int r, int k)
{
    if (k < 0)
        throw std::invalid_argument("eprime_euler: k must be >= 0");
    EPrimeEuler out;
    out.euler = 0;
    out.survivor_low = 0;
    out.survivor_high = 0;
    out.expected = 0;
    if (k > n - 1 || (k + n - 1) % 2 != 0)
        return out;
    out.applicable = true;

    const int a = (n - 1 - k) / 2;
    const int b = (n + 1 + k) / 2;
    auto signed_euler = [r](int p, int q) {
        BigInt chi = 0;
        for (const auto& [i, h] : truncated_homology(r, p, q)) {
            if (i % 2 == 0)
                chi += static_cast<unsigned long>(h);
            else
                chi -= static_cast<unsigned long>(h);
        }
        return chi;
    };

    // Y-part: shift [-2l-1], p = l+1, q = l+b, 0 <= l <= a.
    for (int l = 0; l <= a; ++l)
        out.euler += kKoszulShiftSign * signed_euler(l + 1, l + b);
    // Y'-part: shift [-2l-2] (even), p = l+2, q = l+b, 0 <= l <= a-1.
    for (int l = 0; l <= a - 1; ++l)
        out.euler += signed_euler(l + 2, l + b);

    out.survivor_low = binomial(r - 1, 0);
    out.survivor_high = binomial(r - 1, n);
    const int high_sign = n % 2 == 0 ? 1 : -1;
    out.expected = kKoszulShiftSign * (-out.survivor_low + high_sign * out.survivor_high);
    return out;
}

}  // namespace lmhs
