#pragma once

// Laurent polynomials t^shift * body with rational coefficients, and the
// unit normalization applied before any root computation.

#include <map>
#include <string>

#include "azk/arith/qpoly.hpp"

namespace azk {

class ExactPoly {
public:
    ExactPoly() = default;
    ExactPoly(const QPoly& p, long shift = 0, std::string var = "t");  // NOLINT: implicit from QPoly
    static ExactPoly from_terms(const std::map<long, Rational>& terms, std::string var = "t");

    bool is_zero() const { return body_.is_zero(); }
    /// Lowest and highest exponents with nonzero coefficient; zero for the
    /// zero polynomial.
    long low_exponent() const { return shift_; }
    long high_exponent() const { return is_zero() ? 0 : shift_ + body_.degree(); }
    Rational coeff(long e) const;
    bool is_laurent() const { return shift_ < 0; }
    const std::string& variable() const { return var_; }

    /// Coefficients by exponent, nonzero only.
    std::map<long, Rational> terms() const;

    /// The ordinary polynomial; throws if some exponent is negative.
    QPoly to_poly() const;

    friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
    friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
    friend bool operator==(const ExactPoly& a, const ExactPoly& b)
    {
        return a.shift_ == b.shift_ && a.body_ == b.body_;
    }

private:
    void canonicalize();

    QPoly body_;  // body_(0) != 0 unless zero
    long shift_ = 0;
    std::string var_ = "t";
};

/// t^(-low) * p(t) with a nonzero constant term; `shift` and `sign` record
/// the unit sign * t^shift that was multiplied in.
struct NormalizedPoly {
    QPoly poly;
    long shift = 0;
    int sign = 1;
};

/// Multiply by sign * t^k so the result has nonnegative exponents, nonzero
/// constant term and positive leading coefficient. Throws on zero.
NormalizedPoly normalize(const ExactPoly& p);

/// t^deg p * p(1/t) for an ordinary polynomial.
QPoly reciprocal(const QPoly& p);

std::string to_string(const ExactPoly& p);

} // namespace azk
