#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace lmhs {

using BigInt = mpz_class;

/// Binomial coefficient with the convention C(p,q) = 0 whenever q < 0 or p - q < 0.
BigInt binomial(long p, long q);

/// Integer-power helper: base^exp for exp >= 0.
BigInt ipow(const BigInt& base, unsigned long exp);

/// Sparse univariate polynomial with integer coefficients. Zero coefficients are never stored.
class IntPolynomial {
public:
    IntPolynomial() = default;

    static IntPolynomial monomial(unsigned exponent, const BigInt& coeff = 1);

    void add_term(unsigned exponent, const BigInt& coeff);
    BigInt coeff(unsigned exponent) const;

    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;
    unsigned low_degree() const;
    BigInt value_at_one() const;

    const std::map<unsigned, BigInt>& terms() const { return terms_; }

    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator+(const IntPolynomial& rhs) const;
    bool operator==(const IntPolynomial& rhs) const { return terms_ == rhs.terms_; }

    std::string to_string() const;

private:
    std::map<unsigned, BigInt> terms_;
};

/// Expansion of (t + t^2 + ... + t^{d-1})^e by repeated multiplication.
/// Throws std::invalid_argument unless d >= 2 and e >= 1.
IntPolynomial poly_power_coeffs(int d, int e);

/// Coefficient of h^m in (1+h)^num_degree * prod_i (1 + d_i h)^{-1}, by truncated series arithmetic.
BigInt series_quotient_coeff(long num_degree, std::span<const int> denominators, int m);

}  // namespace lmhs
