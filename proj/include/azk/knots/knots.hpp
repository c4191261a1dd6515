#pragma once

// Alexander polynomials of the twist, pretzel and auxiliary families, and
// root predicates used for orderability and L-space criteria.

#include <string>

#include "azk/arith/laurent.hpp"

namespace azk {

enum class Family { Twist, Pretzel237, Cyclotomic, Fa, F8, Lehmer, Custom };

struct KnotFamilySpec {
    Family family = Family::Custom;
    long param = 0;
    ExactPoly custom;
};

/// "twist", "pretzel237", "cyclotomic", "fa", "f8", "lehmer"; throws
/// std::invalid_argument otherwise.
Family parse_family(const std::string& name);
std::string to_string(Family f);

/// Normalized representative: nonnegative exponents, nonzero constant term,
/// positive leading coefficient. Throws std::invalid_argument when the
/// parameter is out of range for the family.
QPoly alexander(const KnotFamilySpec& spec);

QPoly twist_alexander(long m);       // m >= 1
QPoly pretzel237_alexander(long r);  // r >= 7 odd, 3 does not divide r
QPoly cyclotomic(long n);            // n >= 1
QPoly fa_polynomial(long a);         // a >= 7
QPoly f8_polynomial();
QPoly lehmer_polynomial();

/// (1 + t)^3 * P_r(t) against the closed-form numerator. Throws for even r
/// or r < 7.
bool pretzel_division_identity(long r);

struct UnitCircleRoots {
    bool any = false;
    bool excluding_pm1 = false;
};

/// Unit-circle roots of p via the reciprocal part gcd(p, reverse p):
/// +-1 by evaluation, the rest as real roots in (-2, 2) of the polynomial
/// in x = t + 1/t.
UnitCircleRoots has_root_on_unit_circle(const ExactPoly& p);

/// Palindromic with nonzero coefficients +-1 alternating in sign from a
/// positive top term, after normalization.
bool os_lspace_form(const ExactPoly& p);

struct PredicateReport {
    bool has_unit_circle_root = false;
    bool unit_circle_root_is_not_pm1 = false;
    bool all_roots_real_positive = false;
    bool os_form = false;
    bool all_roots_simple = false;
    bool reciprocal = false;
    /// Value at 1 of the normalized polynomial; +-1 for genuine Alexander
    /// polynomials.
    Rational delta_at_1;
};

PredicateReport predicates(const ExactPoly& p);

} // namespace azk
