#include "azk/arith/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace azk {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (sgn(den) == 0)
        throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0)
        return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<long> primes_up_to(long limit)
{
    std::vector<long> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (long i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        out.push_back(i);
        for (long j = i * i; j <= limit; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

long next_prime(long n)
{
    long c = std::max(2L, n + 1);
    while (!is_prime(c))
        ++c;
    return c;
}

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    Integer y = seed % n, c = (seed * 7 + 1) % n, g = 1, q = 1, x, ys;
    if (c == 0)
        c = 1;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto step = [&](const Integer& v) {
        Integer w = (v * v + c) % n;
        return w;
    };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i)
            y = step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = step(y);
                Integer d = abs(x - y);
                q = (q * d) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            ys = step(ys);
            Integer d = abs(x - ys);
            g = gcd(d, n);
        } while (g == 1);
    }
    return g;
}

void factor_into(const Integer& n, std::vector<Integer>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    for (unsigned long seed = 2;; ++seed) {
        Integer d = pollard_brent(n, seed);
        if (d != n && d != 1) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n_in)
{
    if (sgn(n_in) == 0)
        throw std::invalid_argument("factor_integer: zero");
    Integer n = abs(n_in);
    std::vector<Integer> primes;
    for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > n)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.push_back(Integer(p));
            n /= p;
        }
    }
    if (n > 1)
        factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, int>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::vector<Integer> prime_divisors(const Integer& n)
{
    std::vector<Integer> out;
    for (auto& [p, e] : factor_integer(n))
        out.push_back(p);
    return out;
}

int valuation(const Integer& n, const Integer& p)
{
    if (sgn(n) == 0)
        throw std::domain_error("valuation of zero");
    Integer m = n;
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

int valuation(const Rational& x, const Integer& p)
{
    return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

int legendre(const Integer& a, const Integer& p)
{
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Integer isqrt(const Integer& n)
{
    if (sgn(n) < 0)
        throw std::domain_error("isqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& x)
{
    if (sgn(x) < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(x.get_num().get_mpz_t()) || !mpz_perfect_square_p(x.get_den().get_mpz_t()))
        return std::nullopt;
    return make_rational(isqrt(x.get_num()), isqrt(x.get_den()));
}

bool is_rational_square(const Rational& x) { return rational_sqrt(x).has_value(); }

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace azk
