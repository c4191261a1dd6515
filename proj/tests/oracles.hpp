#pragma once

// Independent reference computations used only by the tests.

#include <random>
#include <vector>

#include "azk/arith/qpoly.hpp"

namespace azk::oracle {

/// Determinant by plain Gaussian elimination over Q.
inline Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Classical Sylvester resultant: lc(f)^deg g * prod g(alpha) over roots of f.
inline Rational sylvester(const QPoly& f, const QPoly& g)
{
    const int m = f.degree(), n = g.degree();
    const int s = m + n;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(s), std::vector<Rational>(static_cast<std::size_t>(s)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f[static_cast<std::size_t>(m - i)];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            a[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g[static_cast<std::size_t>(n - i)];
    return determinant(a);
}

inline QPoly random_qpoly(std::mt19937_64& rng, int degree, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c)
        x = d(rng);
    if (c.back() == 0)
        c.back() = 1;
    return QPoly(std::move(c));
}

/// Cyclotomic polynomial by repeated exact division of t^n - 1.
inline QPoly cyclotomic(int n)
{
    QPoly p = QPoly::monomial(Rational(1), static_cast<std::size_t>(n)) - QPoly::constant(Rational(1));
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            p = p / cyclotomic(d);
    return p;
}

} // namespace azk::oracle

#include <map>
#include <set>
#include <tuple>

namespace azk::oracle {

/// Squarefree kernel of a nonzero integer by trial division.
inline long squarefree_kernel(long n)
{
    long sign = n < 0 ? -1 : 1, m = n < 0 ? -n : n, out = 1;
    for (long q = 2; q * q <= m; ++q) {
        int e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        if (e % 2)
            out *= q;
    }
    return sign * out * m;
}

inline long mod(long x, long m) { return ((x % m) + m) % m; }

inline int val(long x, long p, int cap)
{
    if (x == 0)
        return cap;
    int v = 0;
    while (x % p == 0 && v < cap) {
        x /= p;
        ++v;
    }
    return v;
}

/// Square class of a squarefree integer in Q_p^* / (Q_p^*)^2: (v mod 2,
/// smallest residue of the unit part in its coset of unit squares), with
/// squares found by enumeration mod p (odd p) or mod 8.
inline std::pair<int, long> square_class(long a, long p)
{
    const int v = val(a, p, 64);
    long u = a;
    for (int i = 0; i < v; ++i)
        u /= p;
    const long m = p == 2 ? 8 : p;
    std::set<long> squares;
    for (long x = 1; x < m; ++x)
        if (x % p != 0)
            squares.insert(mod(x * x, m));
    long best = m;
    for (long s : squares)
        best = std::min(best, mod(u * s, m));
    return {v % 2, best};
}

/// Whether z^2 = a x^2 + b y^2 has a nontrivial p-adic solution, for
/// squarefree integers a, b: search primitive solutions mod p^k (k = 3 for
/// odd p, 6 for p = 2) that satisfy the Hensel lifting criterion
/// v(f) >= 2e + 1 in some variable, e = v(partial derivative).
inline bool locally_solvable(long a, long b, long p)
{
    const int k = p == 2 ? 6 : 3;
    long pk = 1;
    for (int i = 0; i < k; ++i)
        pk *= p;
    auto liftable = [&](long x, long y, long z) {
        const long f = mod(z * z - a * x * x - b * y * y, pk);
        const int vf = val(f, p, k);
        for (long d : {2 * z, 2 * a * x, 2 * b * y}) {
            const int e = val(mod(d, pk), p, k);
            if (2 * e + 1 <= k && vf >= 2 * e + 1)
                return true;
        }
        return false;
    };
    for (long s = 0; s < pk; ++s)
        for (long t = 0; t < pk; ++t)
            if (liftable(1, s, t) || liftable(s, 1, t) || liftable(s, t, 1))
                return true;
    return false;
}

/// Cached brute-force Hilbert symbol for integers a, b.
inline int brute_hilbert(long a, long b, long p)
{
    static std::map<std::tuple<long, int, long, int, long>, int> cache;
    const long sa = squarefree_kernel(a), sb = squarefree_kernel(b);
    const auto ca = square_class(sa, p), cb = square_class(sb, p);
    const auto key = std::make_tuple(p, ca.first, ca.second, cb.first, cb.second);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    const int h = locally_solvable(sa, sb, p) ? 1 : -1;
    cache.emplace(key, h);
    return h;
}

} // namespace azk::oracle
