#pragma once

// Sparse polynomials in two named variables over Q, with division by a
// single polynomial in lex order (first variable highest). A single
// polynomial is a Groebner basis of the ideal it generates, so a zero
// remainder decides membership.

#include <map>
#include <string>
#include <utility>

#include "azk/arith/qpoly.hpp"

namespace azk {

class BiPoly {
public:
    using Exponent = std::pair<int, int>;

    BiPoly() = default;
    BiPoly(const Rational& c, std::string x = "x", std::string y = "y");
    static BiPoly var(int which, std::string x = "x", std::string y = "y");
    static BiPoly monomial(const Rational& c, int i, int j, std::string x = "x", std::string y = "y");

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int i, int j) const;
    const std::map<Exponent, Rational, std::greater<>>& terms() const { return terms_; }
    const std::string& x_name() const { return x_; }
    const std::string& y_name() const { return y_; }
    Rational evaluate(const Rational& x, const Rational& y) const;
    /// Substitute a value for the first variable, leaving a polynomial in
    /// the second.
    QPoly at_first(const Rational& x) const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Exponent& e, const Rational& c);

    std::map<Exponent, Rational, std::greater<>> terms_;
    std::string x_ = "x", y_ = "y";
};

BiPoly pow(const BiPoly& p, unsigned e);

/// Remainder of p on division by f (lex order, first variable highest).
BiPoly reduce(const BiPoly& p, const BiPoly& f);

inline bool in_ideal(const BiPoly& p, const BiPoly& f) { return reduce(p, f).is_zero(); }

/// Polynomial in one variable lifted into the first or second slot.
BiPoly lift(const QPoly& p, int which, const std::string& x, const std::string& y);

std::string to_string(const BiPoly& p);

} // namespace azk
