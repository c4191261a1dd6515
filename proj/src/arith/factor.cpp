#include "azk/arith/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

namespace azk {

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("AZK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
        }
    }
    return 0x5eed2017ULL;
}

namespace {

FpPoly fp_x(std::uint64_t p) { return FpPoly({Zp(0, p), Zp(1, p)}); }
FpPoly fp_one(std::uint64_t p) { return FpPoly({Zp(1, p)}); }

FpPoly pth_root(const FpPoly& f, std::uint64_t p)
{
    std::vector<Zp> c;
    for (std::size_t i = 0; i < f.size(); i += p)
        c.push_back(f[i]);
    return FpPoly(std::move(c));
}

// Monic square-free decomposition over F_p.
void sqf_fp(const FpPoly& f_in, int mult, std::vector<std::pair<FpPoly, int>>& out)
{
    FpPoly f = monic(f_in);
    if (f.degree() < 1)
        return;
    const std::uint64_t p = f.leading().prime;
    FpPoly fd = derivative(f);
    if (fd.is_zero()) {
        sqf_fp(pth_root(f, p), mult * static_cast<int>(p), out);
        return;
    }
    FpPoly c = gcd(f, fd);
    FpPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly z = w / y;
        if (z.degree() > 0)
            out.emplace_back(z, i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0)
        sqf_fp(pth_root(c, p), mult * static_cast<int>(p), out);
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<FpPoly, int>> ddf(FpPoly f)
{
    const std::uint64_t p = f.leading().prime;
    std::vector<std::pair<FpPoly, int>> out;
    const FpPoly x = fp_x(p);
    FpPoly h = x % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
        FpPoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0)
        out.emplace_back(f, f.degree());
    return out;
}

FpPoly random_poly(std::uint64_t p, int below_degree, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::vector<Zp> c;
    for (int i = 0; i < below_degree; ++i)
        c.push_back(Zp(static_cast<long>(dist(rng)), p));
    return FpPoly(std::move(c));
}

// Equal-degree splitting of a monic square-free product of degree-d
// irreducibles.
void edf(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out)
{
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const std::uint64_t p = g.leading().prime;
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
    while (true) {
        FpPoly a = random_poly(p, g.degree(), rng);
        if (a.degree() < 1)
            continue;
        FpPoly b;
        if (p == 2) {
            FpPoly term = a % g;
            b = term;
            for (int i = 1; i < d; ++i) {
                term = (term * term) % g;
                b = b + term;
            }
        } else {
            b = powmod(a, (q - 1) / 2, g) - fp_one(p);
        }
        if (b.is_zero())
            continue;
        FpPoly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            edf(h, d, rng, out);
            edf(g / h, d, rng, out);
            return;
        }
    }
}

bool fp_poly_less(const std::pair<FpPoly, int>& a, const std::pair<FpPoly, int>& b)
{
    if (a.first != b.first)
        return lex_less(a.first, b.first, zp_less);
    return a.second < b.second;
}

} // namespace

FpFactorization factor_fp(const FpPoly& f, const FactorOptions& opts)
{
    if (f.is_zero())
        throw std::invalid_argument("factor_fp: zero polynomial");
    std::mt19937_64 rng(opts.seed);
    std::vector<std::pair<FpPoly, int>> sqf;
    sqf_fp(f, 1, sqf);
    FpFactorization out;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : ddf(part)) {
            std::vector<FpPoly> irr;
            edf(block, d, rng, irr);
            for (auto& g : irr)
                out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end(), fp_poly_less);
    return out;
}

FpFactorization factor_mod_l(const QPoly& p, std::uint64_t ell, const FactorOptions& opts)
{
    if (!is_prime(static_cast<long>(ell)))
        throw std::invalid_argument("factor_mod_l: modulus " + std::to_string(ell) + " is not prime");
    FpPoly f = reduce_mod(p, ell);
    if (f.is_zero())
        throw std::invalid_argument("factor_mod_l: polynomial vanishes modulo " + std::to_string(ell));
    return factor_fp(f, opts);
}

bool is_irreducible_fp(const FpPoly& f)
{
    if (f.degree() < 1)
        return false;
    auto fac = factor_fp(f);
    return fac.size() == 1 && fac[0].second == 1;
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z / m

namespace {

Integer mod_nonneg(const Integer& a, const Integer& m)
{
    Integer r = a % m;
    if (sgn(r) < 0)
        r += m;
    return r;
}

ZPoly zmod(const ZPoly& a, const Integer& m)
{
    std::vector<Integer> c;
    c.reserve(a.size());
    for (const auto& v : a.coefficients())
        c.push_back(mod_nonneg(v, m));
    return ZPoly(std::move(c));
}

ZPoly zsym(const ZPoly& a, const Integer& m)
{
    Integer half = m / 2;
    std::vector<Integer> c;
    c.reserve(a.size());
    for (const auto& v : a.coefficients()) {
        Integer r = mod_nonneg(v, m);
        if (r > half)
            r -= m;
        c.push_back(r);
    }
    return ZPoly(std::move(c));
}

Integer inv_mod(const Integer& a, const Integer& m)
{
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("inv_mod: not invertible");
    return r;
}

// Division with remainder by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a_in, const ZPoly& b, const Integer& m)
{
    ZPoly a = zmod(a_in, m);
    if (a.degree() < b.degree())
        return {ZPoly(), a};
    std::vector<Integer> r = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<Integer> q(r.size() - db, Integer(0));
    for (std::size_t k = r.size(); k-- > db;) {
        Integer f = mod_nonneg(r[k], m);
        if (sgn(f) == 0)
            continue;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j)
            r[k - db + j] = mod_nonneg(r[k - db + j] - f * bc[j], m);
    }
    r.resize(db);
    return {zmod(ZPoly(std::move(q)), m), zmod(ZPoly(std::move(r)), m)};
}

ZPoly mulmod(const ZPoly& a, const ZPoly& b, const Integer& m) { return zmod(a * b, m); }

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic.
// Produces the same relations modulo m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m)
{
    const Integer m2 = m * m;
    ZPoly e = zmod(f - g * h, m2);
    auto [q, r] = divmod_monic(s * e, h, m2);
    ZPoly g2 = zmod(g + t * e + q * g, m2);
    ZPoly h2 = zmod(h + r, m2);
    ZPoly b = zmod(s * g2 + t * h2 - ZPoly({Integer(1)}), m2);
    auto [c, d] = divmod_monic(s * b, h2, m2);
    ZPoly s2 = zmod(s - d, m2);
    ZPoly t2 = zmod(t - t * b - c * g2, m2);
    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
}

FpPoly fp_product(const std::vector<FpPoly>& fs, std::size_t lo, std::size_t hi, std::uint64_t p)
{
    FpPoly acc = fp_one(p);
    for (std::size_t i = lo; i < hi; ++i)
        acc = acc * fs[i];
    return acc;
}

// Lift f = lc(f) * prod u_i (mod p), u_i monic, to modulus target = p^k.
void multi_lift(const ZPoly& f, const std::vector<FpPoly>& u, std::uint64_t p, const Integer& target,
                std::vector<ZPoly>& out)
{
    if (u.size() == 1) {
        Integer inv = inv_mod(mod_nonneg(f.leading(), target), target);
        out.push_back(zmod(f * inv, target));
        return;
    }
    const std::size_t mid = u.size() / 2;
    FpPoly g0 = fp_product(u, 0, mid, p) * Zp::from_integer(f.leading(), p);
    FpPoly h0 = fp_product(u, mid, u.size(), p);
    auto x = xgcd(g0, h0);
    if (x.g.degree() != 0)
        throw std::logic_error("multi_lift: modular factors not coprime");
    ZPoly g = lift_symmetric(g0), h = lift_symmetric(h0), s = lift_symmetric(x.s), t = lift_symmetric(x.t);
    Integer m = static_cast<unsigned long>(p);
    while (m < target) {
        hensel_step(f, g, h, s, t, m);
        m *= m;
    }
    g = zmod(g, target);
    h = zmod(h, target);
    std::vector<FpPoly> left(u.begin(), u.begin() + static_cast<long>(mid));
    std::vector<FpPoly> right(u.begin() + static_cast<long>(mid), u.end());
    multi_lift(g, left, p, target, out);
    multi_lift(h, right, p, target, out);
}

// Exact division over Z; returns false if b does not divide a.
bool z_exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& quotient)
{
    if (a.degree() < b.degree())
        return false;
    std::vector<Integer> r = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<Integer> q(r.size() - db);
    const Integer& lb = bc.back();
    for (std::size_t k = r.size(); k-- > db;) {
        if (sgn(r[k]) == 0)
            continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t()))
            return false;
        Integer f = r[k] / lb;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j)
            r[k - db + j] -= f * bc[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (sgn(r[i]) != 0)
            return false;
    quotient = ZPoly(std::move(q));
    return true;
}

ZPoly z_primitive(const ZPoly& a)
{
    Integer g = content(a);
    if (sgn(a.leading()) < 0)
        g = -g;
    std::vector<Integer> c = a.coefficients();
    for (auto& v : c)
        v /= g;
    return ZPoly(std::move(c));
}

// Advance an increasing index combination; false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n)
{
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Factor a primitive square-free integer polynomial of positive degree.
std::vector<ZPoly> factor_squarefree_z(ZPoly f, const FactorOptions& opts)
{
    if (f.degree() <= 1)
        return {f};
    const std::uint64_t p = choose_hensel_prime(f);
    FpPoly fbar = reduce_mod(f, p);
    auto modular = factor_fp(fbar, opts);
    if (modular.size() == 1)
        return {f};
    std::vector<FpPoly> u;
    for (auto& [g, e] : modular)
        u.push_back(g);

    // Mignotte-type bound on coefficients of lc(f) * (any factor of f).
    Integer norm2 = 0;
    for (const auto& c : f.coefficients())
        norm2 += c * c;
    Integer bound = (isqrt(norm2) + 1) * abs(f.leading());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
    bound *= 2;
    Integer modulus = static_cast<unsigned long>(p);
    while (modulus <= bound)
        modulus *= static_cast<unsigned long>(p);

    std::vector<ZPoly> lifted;
    multi_lift(f, u, p, modulus, lifted);

    std::vector<ZPoly> found;
    std::vector<ZPoly> remaining = lifted;
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i)
            idx[i] = i;
        do {
            ZPoly g = ZPoly({f.leading()});
            for (std::size_t i : idx)
                g = mulmod(g, remaining[i], modulus);
            g = zsym(g, modulus);
            if (g.degree() < 1)
                continue;
            if (sgn(f[0]) != 0 && sgn(g[0]) != 0) {
                Integer lc0 = f.leading() * f[0];
                if (!mpz_divisible_p(lc0.get_mpz_t(), g[0].get_mpz_t()))
                    continue;
            }
            g = z_primitive(g);
            ZPoly q;
            if (!z_exact_divide(f, g, q))
                continue;
            found.push_back(g);
            f = q;
            std::vector<ZPoly> rest;
            for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
                if (j < idx.size() && idx[j] == i) {
                    ++j;
                    continue;
                }
                rest.push_back(remaining[i]);
            }
            remaining = std::move(rest);
            hit = true;
            break;
        } while (next_combination(idx, remaining.size()));
        if (!hit)
            ++s;
    }
    if (f.degree() > 0)
        found.push_back(z_primitive(f));
    return found;
}

bool q_factor_less(const std::pair<QPoly, int>& a, const std::pair<QPoly, int>& b)
{
    if (a.first != b.first)
        return lex_less(a.first, b.first, rational_less);
    return a.second < b.second;
}

} // namespace

std::uint64_t choose_hensel_prime(const ZPoly& f)
{
    for (long p = 3;; p = next_prime(p)) {
        const auto up = static_cast<std::uint64_t>(p);
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), up))
            continue;
        FpPoly fb = reduce_mod(f, up);
        if (gcd(fb, derivative(fb)).degree() == 0)
            return up;
    }
}

QPoly QFactorization::expand() const
{
    QPoly acc = QPoly::constant(unit);
    for (const auto& [g, e] : factors)
        acc = acc * pow(g, static_cast<unsigned>(e));
    return acc;
}

QFactorization factor_over_Q(const QPoly& p, const FactorOptions& opts)
{
    if (p.is_zero())
        throw std::invalid_argument("factor_over_Q: zero polynomial");
    QFactorization out;
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        for (auto& g : factor_squarefree_z(primitive_part(part), opts))
            out.factors.emplace_back(to_rational(g), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), q_factor_less);
    Rational lc = 1;
    for (const auto& [g, e] : out.factors)
        for (int i = 0; i < e; ++i)
            lc *= g.leading();
    out.unit = p.leading() / lc;
    return out;
}

bool is_irreducible_q(const QPoly& p)
{
    if (p.degree() < 1)
        return false;
    auto fac = factor_over_Q(p);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace azk
