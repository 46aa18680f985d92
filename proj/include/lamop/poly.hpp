#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lamop {

/// Exact rational number, always kept in lowest terms by GMP.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Sparse univariate polynomial in the formal deformation parameter L
/// (lambda) with exact rational coefficients. Zero coefficients are never
/// stored, so the zero polynomial has no terms.
class LambdaPoly {
public:
    using Exponent = std::uint64_t;
    using TermMap = std::map<Exponent, Rational>;

    LambdaPoly() = default;
    LambdaPoly(const Rational& constant);  // NOLINT: implicit by design of the algebra
    LambdaPoly(long constant) : LambdaPoly(Rational(constant)) {}  // NOLINT

    static LambdaPoly monomial(const Rational& coeff, Exponent exponent);
    /// L^k with coefficient 1.
    static LambdaPoly power(Exponent exponent) { return monomial(1, exponent); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Highest exponent; -1 for the zero polynomial.
    long degree() const;
    /// Lowest exponent; -1 for the zero polynomial.
    long valuation() const;
    Rational coefficient(Exponent exponent) const;

    Rational eval(const Rational& at) const;

    LambdaPoly& operator+=(const LambdaPoly& other);
    LambdaPoly& operator-=(const LambdaPoly& other);
    LambdaPoly& operator*=(const LambdaPoly& other);
    LambdaPoly operator-() const;

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.terms_ == b.terms_; }

    /// Terms in ascending exponent order: "1 + 2*L^3", "-L", "3/2*L^2 - 1/2*L^5".
    std::string to_string() const;
    /// Inverse of to_string; also accepts "λ" for L, "+ -" sequences and
    /// whitespace anywhere. Throws std::invalid_argument.
    static LambdaPoly parse(std::string_view text);

private:
    void add_term(Exponent exponent, const Rational& coeff);

    TermMap terms_;
};

Rational poly_eval(const LambdaPoly& p, const Rational& at);

}  // namespace lamop
