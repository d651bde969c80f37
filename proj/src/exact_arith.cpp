#include "lmhs/exact_arith.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace lmhs {

BigInt binomial(long p, long q)
{
    if (q < 0 || p - q < 0)
        return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    return result;
}

BigInt ipow(const BigInt& base, unsigned long exp)
{
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

IntPolynomial IntPolynomial::monomial(unsigned exponent, const BigInt& coeff)
{
    IntPolynomial p;
    p.add_term(exponent, coeff);
    return p;
}

void IntPolynomial::add_term(unsigned exponent, const BigInt& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BigInt IntPolynomial::coeff(unsigned exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned IntPolynomial::degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

unsigned IntPolynomial::low_degree() const
{
    return terms_.empty() ? 0 : terms_.begin()->first;
}

BigInt IntPolynomial::value_at_one() const
{
    BigInt sum = 0;
    for (const auto& [e, c] : terms_)
        sum += c;
    return sum;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const
{
    IntPolynomial out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const
{
    IntPolynomial out = *this;
    for (const auto& [e, c] : rhs.terms_)
        out.add_term(e, c);
    return out;
}

std::string IntPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        BigInt a = abs(c);
        if (a != 1 || e == 0)
            os << a;
        if (e >= 1)
            os << "t";
        if (e > 1)
            os << "^" << e;
    }
    return os.str();
}

IntPolynomial poly_power_coeffs(int d, int e)
{
    if (d < 2)
        throw std::invalid_argument("poly_power_coeffs: d must be >= 2, got " + std::to_string(d));
    if (e < 1)
        throw std::invalid_argument("poly_power_coeffs: e must be >= 1, got " + std::to_string(e));

    IntPolynomial base;
    for (int k = 1; k <= d - 1; ++k)
        base.add_term(static_cast<unsigned>(k), 1);

    IntPolynomial result = base;
    for (int k = 1; k < e; ++k)
        result = result * base;
    return result;
}

namespace {

// In-place multiplication of a truncated series by (1 + c h)^{-1}: out_i = in_i - c out_{i-1}.
void divide_by_linear(std::vector<BigInt>& series, long c)
{
    for (std::size_t i = 1; i < series.size(); ++i)
        series[i] -= c * series[i - 1];
}

}  // namespace

BigInt series_quotient_coeff(long num_degree, std::span<const int> denominators, int m)
{
    if (m < 0)
        throw std::invalid_argument("series_quotient_coeff: m must be >= 0");

    const auto len = static_cast<std::size_t>(m) + 1;
    std::vector<BigInt> series(len, BigInt(0));
    if (num_degree >= 0) {
        for (std::size_t i = 0; i < len; ++i)
            series[i] = binomial(num_degree, static_cast<long>(i));
    } else {
        series[0] = 1;
        for (long k = 0; k < -num_degree; ++k)
            divide_by_linear(series, 1);
    }
    for (int d : denominators)
        divide_by_linear(series, d);
    return series[static_cast<std::size_t>(m)];
}

}  // namespace lmhs
