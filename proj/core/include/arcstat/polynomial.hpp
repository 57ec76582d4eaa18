#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arcstat {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial in one variable with arbitrary-precision integer
/// coefficients. Canonical form: no trailing zero coefficient; the zero
/// polynomial has an empty coefficient vector and degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(long long constant);             // NOLINT(google-explicit-constructor)
    IntPolynomial(BigInt constant);                // NOLINT(google-explicit-constructor)
    static IntPolynomial from_coeffs(std::vector<BigInt> coeffs);
    static IntPolynomial monomial(BigInt coeff, int exponent);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of q^e; zero outside the stored range.
    const BigInt& coeff(int e) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs *= rhs; }

    /// Multiplication by q^d.
    IntPolynomial shifted(int d) const;

    /// Multiplication by 1 + q + ... + q^(k-1), as a sliding-window sum.
    /// Much cheaper than a general convolution for large k.
    IntPolynomial times_q_integer(int k) const;

    /// Coefficient reversal at the given length: result[e] = coeff(length-1-e).
    /// length must be at least degree()+1.
    IntPolynomial reversed(int length) const;

    BigInt evaluate(const BigInt& x) const;

    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// "1 + 2*q^2 - q^3" style; "0" for the zero polynomial.
    std::string to_string(std::string_view var = "q") const;

    /// {"var":"q","coeffs":["1","2",...]} with decimal-string coefficients.
    std::string to_json(std::string_view var = "q") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;  // coeffs_[e] is the coefficient of q^e
};

/// Polynomial in q and t, stored as a dense grid of big-integer
/// coefficients. Canonical: no all-zero trailing row or column.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;

    /// Adds p(q) * t^texp.
    void add_t_term(const IntPolynomial& p, int texp);

    /// -1 when the polynomial has no term in the variable.
    int degree_q() const;
    int degree_t() const { return static_cast<int>(t_coeffs_.size()) - 1; }
    bool is_zero() const { return t_coeffs_.empty(); }

    /// Coefficient of t^k as a polynomial in q.
    const IntPolynomial& t_coeff(int k) const;

    /// Substitutes t = 1.
    IntPolynomial at_t_one() const;

    bool operator==(const BivariatePolynomial& rhs) const { return t_coeffs_ == rhs.t_coeffs_; }

    /// "t + q*t^2" style.
    std::string to_string(std::string_view qvar = "q", std::string_view tvar = "t") const;

    /// Row-major grid: coeffs[qe][te], both variable names included.
    std::string to_json(std::string_view qvar = "q", std::string_view tvar = "t") const;

private:
    void trim();
    std::vector<IntPolynomial> t_coeffs_;  // t_coeffs_[k] is the q-polynomial coefficient of t^k
};

}  // namespace arcstat
