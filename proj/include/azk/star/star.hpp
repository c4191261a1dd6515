#pragma once

// Conditions (*) and (*_l) on the roots of an Alexander-type polynomial,
// and the finite set of primes where (*_l) fails.
//
// (*):   for every root z and square root w of z, Q(w) = Q(w + 1/w).
// (*_l): the same equality of fields over an algebraic closure of F_l.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "azk/arith/laurent.hpp"

namespace azk {

enum class Verdict { Positive, Negative };

std::string to_string(Verdict v);

/// One irreducible factor m of the square-free part of D(t^2); m is the
/// minimal polynomial of a square root w of a root of D.
struct StarFactorRecord {
    QPoly factor;
    int deg_w = 0;
    QPoly trace_minpoly;  // minimal polynomial of w + 1/w
    int deg_theta = 0;
    bool holds = false;
};

struct StarReport {
    ExactPoly input;
    NormalizedPoly normalized;
    std::vector<StarFactorRecord> records;
    Verdict verdict = Verdict::Positive;
    std::vector<StarFactorRecord> witnesses;
    /// False when the normalized polynomial has a repeated root. The
    /// verdict ignores multiplicity.
    bool all_roots_simple = true;
    /// Every root is checked, not only those tied to a particular
    /// representation.
    static constexpr const char* scope = "all roots";
};

/// Throws std::invalid_argument on the zero polynomial.
StarReport star_check(const ExactPoly& delta);

struct EllFactorRecord {
    FpPoly factor;
    int multiplicity = 1;
    int deg_w = 0;
    int deg_theta = 0;
    /// The factor is t itself: w = 0 is not invertible, so (*_l) fails.
    bool zero_root = false;
    bool holds = false;
};

struct StarEllReport {
    std::uint64_t ell = 0;
    bool holds = true;
    std::vector<EllFactorRecord> factors;
};

/// (*_l) for the normalization of delta. For odd l the
/// factors of D(t^2) mod l are minimal polynomials of the w; for l = 2,
/// D(t^2) = D(t)^2 and the factors of D mod l are used directly. The degree
/// of w + 1/w is the length of its Frobenius orbit. Throws
/// std::invalid_argument if l is not prime, D vanishes mod l, or l divides
/// a coefficient denominator.
StarEllReport star_ell_check(const ExactPoly& delta, std::uint64_t ell);

/// bad_primes on an input for which (*) fails.
class AzumayaNegativeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct BadPrimesReport {
    /// Candidate primes with the reasons they were included:
    /// "always-2", "leading-coefficient", "constant-term", "discriminant",
    /// "denominator".
    std::map<long, std::set<std::string>> candidates;
    /// Primes where (*_l) fails, sorted.
    std::vector<long> failing;
    std::optional<long> scan_limit;
    /// Failing primes found by the scan that are not candidates. Empty
    /// whenever the candidate construction is sufficient.
    std::vector<long> uncovered;
};

/// Candidate primes tested directly with star_ell_check on the primitive
/// integer normalization; with a scan limit,
/// every prime up to the limit is tested too (concurrently). Throws
/// AzumayaNegativeError if (*) fails.
BadPrimesReport bad_primes(const ExactPoly& delta, std::optional<long> scan_limit = std::nullopt);

struct Classification {
    Verdict verdict = Verdict::Positive;
    std::vector<StarFactorRecord> witnesses;
};

Classification classify(const ExactPoly& delta);

} // namespace azk
