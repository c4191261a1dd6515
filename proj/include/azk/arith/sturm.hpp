#pragma once

#include <optional>
#include <vector>

#include "azk/arith/qpoly.hpp"

namespace azk {

/// An endpoint of a real interval; std::nullopt stands for -inf on the left
/// and +inf on the right.
using Endpoint = std::optional<Rational>;

std::vector<QPoly> sturm_sequence(const QPoly& p);

/// Number of distinct real roots of p in (lo, hi]. p must be nonzero and
/// square-free; a repeated factor is rejected with std::invalid_argument.
int sturm_count(const QPoly& p, const Endpoint& lo, const Endpoint& hi);

/// sturm_count applied to the square-free part of p.
int count_distinct_real_roots(const QPoly& p, const Endpoint& lo = std::nullopt, const Endpoint& hi = std::nullopt);

} // namespace azk
