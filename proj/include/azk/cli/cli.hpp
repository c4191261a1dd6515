#pragma once

// Command-line front end: polynomial text, JSON reports, and dispatch.
//
// Polynomial grammar (whitespace-insensitive):
//   poly := ["+"|"-"] term (("+"|"-") term)*
//   term := int | [int]["*"] var ["^" ["-"] int]
// Coefficients are integers; "0" is the zero polynomial.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "azk/arith/laurent.hpp"
#include "azk/quaternion/quaternion.hpp"

namespace azk {

class PolyParseError : public std::invalid_argument {
public:
    PolyParseError(const std::string& what, std::size_t position);
    /// Zero-based offset into the source text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

ExactPoly parse_poly(const std::string& src, const std::string& var = "t");

/// "F" or "F / G", each side a polynomial, optionally parenthesized.
RationalFunction parse_rational_function(const std::string& src, const std::string& var = "t");

/// "n" or "n/d" with integers n, d (d != 0).
Rational parse_rational(const std::string& src);

/// Canonical text: descending exponents, no unary plus.
inline std::string print_poly(const ExactPoly& p) { return to_string(p); }

/// Runs one invocation. args excludes the program name. Exit codes: 0
/// computed with a positive outcome, 1 negative verdict or failed check,
/// 2 input error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace azk
