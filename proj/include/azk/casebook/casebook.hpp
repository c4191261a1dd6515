#pragma once

// Exact verification of the worked examples: the figure-eight function
// field computation, the (-2,3,7)-pretzel canonical component and the m137
// data. Every check returns a report of named items; a report passes iff
// all of its items do.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "azk/arith/mat2.hpp"
#include "azk/casebook/bipoly.hpp"
#include "azk/quaternion/quaternion.hpp"

namespace azk {

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckReport {
    std::string name;
    std::vector<CheckItem> items;
    bool passed() const;
};

/// Inputs of the figure-eight checks. `standard()` holds the stored data;
/// tests mutate single fields to get negative controls.
struct Fig8Data {
    BiPoly curve;            // in (R, T)
    QPoly weierstrass_rhs;   // z^3 - 2z + 1
    QPoly alpha_prime;       // in z
    QPoly beta;              // in z
    // Coefficients of m1, m3 in Q(i)[z], as (real, imaginary) per power of z.
    std::vector<std::pair<Rational, Rational>> m1, m3;
    // alpha_inf and beta_inf as stored fractions in z.
    QPoly alpha_inf_num, alpha_inf_den, beta_inf_num, beta_inf_den;

    static Fig8Data standard();
};

BiPoly fig8_curve();

CheckReport fig8_coordinate_change_check(const Fig8Data& data = Fig8Data::standard());
CheckReport fig8_hilbert_symbol_check(const Fig8Data& data = Fig8Data::standard());
CheckReport fig8_qi_splitting_check(const Fig8Data& data = Fig8Data::standard());
CheckReport fig8_ideal_point_check(const Fig8Data& data = Fig8Data::standard());

struct Traces {
    Rational p, q, r;  // tr A, tr B, tr AB
};

struct Representation {
    FieldPtr field;
    NFElement x, y, r;
    Mat2 a, b;
};

/// A = [[x, 1], [0, 1/x]], B = [[y, 0], [r, 1/y]] with x + 1/x = P,
/// y + 1/y = Q and tr AB = R, over the compositum of the two quadratic
/// fields. Throws std::domain_error when r = 0 (reducible character).
Representation representation_from_traces(const Rational& p, const Rational& q, const Rational& r);

struct PresentationSpec {
    std::string generators = "ab";
    std::vector<std::string> relators;
};

/// A plane curve in two named variables, with the map from its points to
/// the traces (tr a, tr b, tr ab) when it charts a character variety.
struct CurveChart {
    BiPoly polynomial;
    std::string label;
    std::function<Traces(const Rational&, const Rational&)> traces;
};

struct ComponentPointResult {
    Traces traces;
    FieldPtr field;
    std::vector<std::pair<std::string, bool>> relators;
    /// The relators held only after replacing A by -A.
    bool sign_flipped = false;
    bool passed = false;
    /// First failing relator value, for inspection.
    std::string residual;
};

/// Throws std::invalid_argument when the sample is off the curve or the
/// chart has no trace map, std::domain_error when the point is reducible.
ComponentPointResult verify_component_point(const CurveChart& curve, const PresentationSpec& presentation,
                                            const std::pair<Rational, Rational>& sample);

PresentationSpec fig8_presentation();
PresentationSpec pretzel7_presentation();
CurveChart fig8_chart();
/// Chart in (Q, R) with tr a = Q / (Q^2 - 1) and tr b = Q. The stored
/// parametrization has R = (1 - 2Q^2) / (Q^2 (Q^2 - 1)); the relator does not
/// hold there. With `sign_corrected` the chart uses R = (2Q^2 - 1) / (Q^2 (Q^2 - 1)),
/// which is where the relator does hold.
CurveChart pretzel7_chart(bool sign_corrected = false);
std::pair<Rational, Rational> pretzel7_sample(const Rational& q, bool sign_corrected = false);  // (Q, R)
std::vector<std::pair<Rational, Rational>> fig8_samples();         // (R, T)

/// p(s, t) in (s, t); no trace map.
CurveChart m137_data();

std::vector<CheckReport> fig8_casebook();
std::vector<CheckReport> pretzel7_casebook();
std::vector<CheckReport> m137_casebook();

} // namespace azk
