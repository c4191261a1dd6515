#pragma once

// Quaternion algebras (a, b) over Q: local Hilbert symbols and ramification.
// Tame symbols and the Hensel extension test at places of Q(t).

#include <optional>
#include <vector>

#include "azk/arith/number_field.hpp"

namespace azk {

struct QuaternionSymbol {
    Rational a, b;
};

/// -1 iff a < 0 and b < 0. Throws std::invalid_argument on zero input.
int hilbert_real(const Rational& a, const Rational& b);

/// Local symbol at the prime p. Throws std::invalid_argument on zero input
/// or composite p.
int hilbert_p(const Rational& a, const Rational& b, const Integer& p);

struct RamificationSet {
    bool includes_real_place = false;
    std::vector<Integer> finite_primes;  // sorted
    std::size_t cardinality() const { return finite_primes.size() + (includes_real_place ? 1 : 0); }
    bool empty() const { return cardinality() == 0; }
};

bool operator==(const RamificationSet& x, const RamificationSet& y);

RamificationSet ramification_set(const Rational& a, const Rational& b);
inline RamificationSet ramification_set(const QuaternionSymbol& s) { return ramification_set(s.a, s.b); }

/// num / den in lowest terms with den monic.
class RationalFunction {
public:
    RationalFunction(const QPoly& num, const QPoly& den = qpoly({1}));  // NOLINT: implicit from QPoly
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
    friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
    friend bool operator==(const RationalFunction& x, const RationalFunction& y)
    {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

private:
    QPoly num_, den_;
};

RationalFunction inverse(const RationalFunction& f);
RationalFunction pow(const RationalFunction& f, long e);

/// A place of Q(t): a monic irreducible pi(t), or the place at infinity.
class PlaceOfQt {
public:
    static PlaceOfQt infinity() { return PlaceOfQt(); }
    /// Scales pi to be monic; throws std::invalid_argument unless it is
    /// irreducible of positive degree.
    static PlaceOfQt finite(const QPoly& pi);

    bool is_infinite() const { return !pi_; }
    const QPoly& pi() const { return *pi_; }

private:
    PlaceOfQt() = default;
    std::optional<QPoly> pi_;
};

/// Valuation at the place; throws std::invalid_argument on zero.
int ord(const RationalFunction& f, const PlaceOfQt& place);

/// Element of k(P)* / (k(P)*)^2. A null field means Q.
struct SquareClass {
    FieldPtr field;
    NFElement representative;
    bool trivial = false;
};

/// Class of (-1)^(rs) beta^r / alpha^s with r = ord alpha, s = ord beta,
/// reduced in the residue field. Throws std::invalid_argument on zero input.
SquareClass tame_symbol(const RationalFunction& alpha, const RationalFunction& beta, const PlaceOfQt& place);

/// ord_P(1 - alpha) > 2 ord_P(2); for places of Q(t), ord_P(1 - alpha) > 0.
/// alpha = 1 counts as extending.
bool hensel_extends(const RationalFunction& alpha, const PlaceOfQt& place);
bool hensel_extends(const Rational& alpha, const Integer& p);

} // namespace azk
