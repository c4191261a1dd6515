#pragma once

// Polynomials over Q and Z: content, primitive parts, reduction modulo a
// prime, resultants, discriminants and square-free decomposition.

#include <string>
#include <utility>
#include <vector>

#include "azk/arith/integer.hpp"
#include "azk/arith/poly.hpp"
#include "azk/arith/zp.hpp"

namespace azk {

using QPoly = Poly<Rational>;
using ZPoly = Poly<Integer>;
using FpPoly = Poly<Zp>;

/// Convenience constructor from small integer coefficients, low degree first.
QPoly qpoly(std::initializer_list<long> coeffs);

/// The variable t.
QPoly q_t();

/// Write p = c * f with f a primitive integer polynomial with positive
/// leading coefficient. Returns (c, f); p must be nonzero.
std::pair<Rational, ZPoly> primitive_split(const QPoly& p);
ZPoly primitive_part(const QPoly& p);
Integer content(const ZPoly& p);

QPoly to_rational(const ZPoly& p);
FpPoly reduce_mod(const ZPoly& p, std::uint64_t prime);
FpPoly reduce_mod(const QPoly& p, std::uint64_t prime);
ZPoly lift_symmetric(const FpPoly& p);

/// Res(p, q) = lc(q)^deg(p) * prod p(b) over the roots b of q.
/// Antisymmetric: Res(p, q) = (-1)^(deg p * deg q) Res(q, p).
Rational resultant(const QPoly& p, const QPoly& q);

/// Discriminant (-1)^(n(n-1)/2) Res(f, f') / lc(f) in the usual sense.
Rational discriminant(const QPoly& p);

/// Monic gcd over Q; throws if both inputs are zero.
QPoly poly_gcd(const QPoly& p, const QPoly& q);

/// Product of the distinct monic irreducible factors of p.
QPoly squarefree_part(const QPoly& p);
bool is_squarefree(const QPoly& p);

/// Yun decomposition: monic pairwise coprime square-free a_i with
/// p = lc(p) * prod a_i^i. Entries with constant a_i are omitted.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

std::string to_string(const QPoly& p, const std::string& var = "t");
std::string to_string(const FpPoly& p, const std::string& var = "t");

bool rational_less(const Rational& a, const Rational& b);
bool zp_less(const Zp& a, const Zp& b);

} // namespace azk
