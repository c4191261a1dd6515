#pragma once

// Factorization of univariate polynomials over F_p and over Q.
//
// Over F_p: square-free decomposition, distinct-degree splitting, then
// Cantor-Zassenhaus equal-degree splitting (trace map in characteristic 2).
// Over Q: square-free decomposition, factorization modulo the smallest odd
// prime that keeps the polynomial square-free, multifactor Hensel lifting
// past a Mignotte bound, and exhaustive subset recombination.

#include <cstdint>
#include <utility>
#include <vector>

#include "azk/arith/qpoly.hpp"

namespace azk {

/// Seed for the randomized equal-degree splitting. The default reads the
/// AZK_SEED environment variable and falls back to a fixed constant.
std::uint64_t default_seed();

struct FactorOptions {
    std::uint64_t seed = default_seed();
};

using FpFactorization = std::vector<std::pair<FpPoly, int>>;

/// Monic irreducible factors of f (nonzero) with multiplicities, sorted by
/// degree and then coefficients. The product of factor^multiplicity times
/// lc(f) equals f.
FpFactorization factor_fp(const FpPoly& f, const FactorOptions& opts = {});

/// Factor p modulo the prime ell. Throws if p vanishes modulo ell or if a
/// coefficient denominator is divisible by ell.
FpFactorization factor_mod_l(const QPoly& p, std::uint64_t ell, const FactorOptions& opts = {});

bool is_irreducible_fp(const FpPoly& f);

struct QFactorization {
    /// p = unit * prod factor^multiplicity.
    Rational unit;
    /// Primitive integer irreducible factors with positive leading
    /// coefficient, sorted by degree then coefficients.
    std::vector<std::pair<QPoly, int>> factors;

    QPoly expand() const;
};

QFactorization factor_over_Q(const QPoly& p, const FactorOptions& opts = {});

bool is_irreducible_q(const QPoly& p);

/// Modular data exposed for tests: the prime used by factor_over_Q for a
/// primitive square-free integer polynomial.
std::uint64_t choose_hensel_prime(const ZPoly& f);

} // namespace azk
