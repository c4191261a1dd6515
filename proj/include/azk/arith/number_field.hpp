#pragma once

// Number fields Q[y]/(f(y)) and their elements.
//
// Fields are shared immutable objects (FieldPtr). An NFElement carries a
// pointer to its field; a default-constructed or rational-constructed
// element has no field and behaves as a constant of whichever field it is
// combined with.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "azk/arith/matrix.hpp"
#include "azk/arith/qpoly.hpp"

namespace azk {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
public:
    /// Checks irreducibility over Q; the stored modulus is scaled to be
    /// monic.
    static FieldPtr create(const QPoly& modulus, std::string name = "y");
    /// For moduli already known to be irreducible (e.g. minimal
    /// polynomials and irreducible factors).
    static FieldPtr create_unchecked(const QPoly& modulus, std::string name = "y");
    /// Q presented as Q[y]/(y).
    static FieldPtr rationals();

    const QPoly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }
    const std::string& name() const { return name_; }

    bool same_as(const NumberField& other) const { return this == &other || modulus_ == other.modulus_; }

private:
    NumberField(QPoly modulus, std::string name) : modulus_(std::move(modulus)), name_(std::move(name)) {}

    QPoly modulus_;
    std::string name_;
};

class NFElement {
public:
    NFElement() = default;
    NFElement(const Rational& c) : repr_(QPoly::constant(c)) {}
    NFElement(long c) : NFElement(Rational(c)) {}
    NFElement(FieldPtr field, const QPoly& repr);

    static NFElement generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const QPoly& repr() const { return repr_; }
    bool is_rational() const { return repr_.degree() <= 0; }
    Rational rational_value() const;

    /// Coordinates in the power basis 1, y, ..., y^(d-1) of the given field.
    std::vector<Rational> coordinates(int degree) const;

    NFElement with_field(const FieldPtr& field) const { return NFElement(field, repr_); }

    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend bool operator==(const NFElement& a, const NFElement& b);

private:
    FieldPtr field_;
    QPoly repr_;
};

inline bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }
NFElement operator*(const NFElement& a, long k);
NFElement operator/(const NFElement& a, const NFElement& b);
inline NFElement& operator+=(NFElement& a, const NFElement& b) { return a = a + b; }
inline NFElement& operator-=(NFElement& a, const NFElement& b) { return a = a - b; }
inline NFElement& operator*=(NFElement& a, const NFElement& b) { return a = a * b; }

bool is_zero(const NFElement& a);
NFElement inverse(const NFElement& a);
NFElement one_like(const NFElement& a);
NFElement zero_like(const NFElement& a);
NFElement pow(const NFElement& a, long e);

std::string to_string(const NFElement& a);

/// Shared field of two elements (either may be field-free); throws on a
/// mismatch.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// Monic minimal polynomial over Q, found as the first linear dependency
/// among the powers 1, e, e^2, ... in the power basis.
QPoly nf_minpoly(const NFElement& e);

struct SquareRootResult {
    bool is_square = false;
    std::optional<NFElement> root;
    /// Shift constant c for which the norm of (X - c*y)^2 - e was square-free.
    int shift = 0;
    /// Norm polynomial that was factored.
    QPoly norm;
};

/// Decide whether e is a square in its field by Trager's method: factor the
/// norm of (X - c*y)^2 - e over Q for the first shift c >= first_shift
/// making it square-free, and map factors of the right degree back via a gcd
/// over the field. Zero is reported as the square of zero.
SquareRootResult nf_is_square(const NFElement& e, const FieldPtr& field, int first_shift = 0);
SquareRootResult nf_is_square(const NFElement& e, int first_shift = 0);

/// Norm over Q of a monic polynomial with coefficients in the field, i.e.
/// the characteristic polynomial of multiplication by X on K[X]/(g).
QPoly norm_polynomial(const Poly<NFElement>& g, const FieldPtr& field);

/// Coefficients c_i (i < degree of the minimal polynomial of theta) with
/// target = sum c_i theta^i, or nullopt if target is not in Q(theta).
std::optional<std::vector<Rational>> nf_linear_expression(const FieldPtr& field, const NFElement& target,
                                                         const NFElement& theta);

/// K(sqrt(d)) presented as a simple extension Q[g]/(m), with the images of
/// the old generator and of sqrt(d). When d is already a square in K the
/// field is unchanged and `split` is true.
struct QuadraticExtension {
    FieldPtr field;
    NFElement old_generator;
    NFElement sqrt_element;
    bool split = false;
    /// Primitive element used: old generator + c * sqrt(d).
    int primitive_shift = 0;

    NFElement embed(const NFElement& x) const;
};

QuadraticExtension adjoin_sqrt(const FieldPtr& base, const NFElement& d);

} // namespace azk
