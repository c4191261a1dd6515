#include "azk/quaternion/quaternion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "azk/arith/factor.hpp"

namespace azk {

namespace {

void require_nonzero(const Rational& a, const Rational& b)
{
    if (sgn(a) == 0 || sgn(b) == 0)
        throw std::invalid_argument("Hilbert symbol of zero");
}

// Residue mod 8 of a 2-adic unit n/d (n, d odd): d^-1 = d mod 8.
unsigned long unit_mod8(const Integer& n, const Integer& d)
{
    Integer prod = n * d;
    return mpz_fdiv_ui(prod.get_mpz_t(), 8);
}

int legendre_rational(const Integer& n, const Integer& d, const Integer& p) { return legendre(n, p) * legendre(d, p); }

// a = p^v * n/d with p not dividing n, d.
struct Split {
    int v;
    Integer n, d;
};

Split split(const Rational& a, const Integer& p)
{
    Split s{0, a.get_num(), a.get_den()};
    while (mpz_divisible_p(s.n.get_mpz_t(), p.get_mpz_t())) {
        s.n /= p;
        ++s.v;
    }
    while (mpz_divisible_p(s.d.get_mpz_t(), p.get_mpz_t())) {
        s.d /= p;
        --s.v;
    }
    return s;
}

} // namespace

int hilbert_real(const Rational& a, const Rational& b)
{
    require_nonzero(a, b);
    return sgn(a) < 0 && sgn(b) < 0 ? -1 : 1;
}

int hilbert_p(const Rational& a, const Rational& b, const Integer& p)
{
    require_nonzero(a, b);
    if (p < 2 || !is_prime(p))
        throw std::invalid_argument("hilbert_p: " + to_string(p) + " is not prime");
    const Split x = split(a, p), y = split(b, p);
    if (p == 2) {
        const unsigned long u = unit_mod8(x.n, x.d), v = unit_mod8(y.n, y.d);
        auto eps = [](unsigned long w) { return static_cast<int>(((w - 1) / 2) % 2); };
        auto omega = [](unsigned long w) { return static_cast<int>(((w * w - 1) / 8) % 2); };
        const int e = eps(u) * eps(v) + x.v * omega(v) + y.v * omega(u);
        return e % 2 == 0 ? 1 : -1;
    }
    int s = 1;
    const Integer half = (p - 1) / 2;
    if ((x.v * y.v) % 2 != 0 && mpz_odd_p(half.get_mpz_t()))
        s = -s;
    if (y.v % 2 != 0)
        s *= legendre_rational(x.n, x.d, p);
    if (x.v % 2 != 0)
        s *= legendre_rational(y.n, y.d, p);
    return s;
}

bool operator==(const RamificationSet& x, const RamificationSet& y)
{
    return x.includes_real_place == y.includes_real_place && x.finite_primes == y.finite_primes;
}

RamificationSet ramification_set(const Rational& a, const Rational& b)
{
    require_nonzero(a, b);
    std::set<Integer> places{Integer(2)};
    for (const Integer& n : {Integer(a.get_num()), Integer(a.get_den()), Integer(b.get_num()), Integer(b.get_den())})
        for (const Integer& q : prime_divisors(n))
            places.insert(q);
    RamificationSet r;
    r.includes_real_place = hilbert_real(a, b) == -1;
    for (const Integer& q : places)
        if (hilbert_p(a, b, q) == -1)
            r.finite_primes.push_back(q);
    return r;
}

RationalFunction::RationalFunction(const QPoly& num, const QPoly& den)
{
    if (den.is_zero())
        throw std::invalid_argument("RationalFunction: zero denominator");
    if (num.is_zero()) {
        den_ = qpoly({1});
        return;
    }
    QPoly g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    const Rational lc = den_.leading();
    num_ = num_ * inverse(lc);
    den_ = den_ * inverse(lc);
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y)
{
    return RationalFunction(x.num_ * y.num_, x.den_ * y.den_);
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y)
{
    return RationalFunction(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

RationalFunction inverse(const RationalFunction& f)
{
    if (f.is_zero())
        throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(f.den(), f.num());
}

RationalFunction pow(const RationalFunction& f, long e)
{
    if (e < 0)
        return pow(inverse(f), -e);
    return RationalFunction(pow(f.num(), static_cast<unsigned>(e)), pow(f.den(), static_cast<unsigned>(e)));
}

PlaceOfQt PlaceOfQt::finite(const QPoly& pi)
{
    if (pi.degree() < 1 || !is_irreducible_q(pi))
        throw std::invalid_argument("PlaceOfQt: " + to_string(pi) + " is not irreducible of positive degree");
    PlaceOfQt p;
    p.pi_ = monic(pi);
    return p;
}

namespace {

int poly_ord(QPoly f, const QPoly& pi)
{
    int k = 0;
    while (true) {
        auto [q, r] = divmod(f, pi);
        if (!r.is_zero())
            return k;
        f = q;
        ++k;
    }
}

} // namespace

int ord(const RationalFunction& f, const PlaceOfQt& place)
{
    if (f.is_zero())
        throw std::invalid_argument("ord of zero");
    if (place.is_infinite())
        return f.den().degree() - f.num().degree();
    return poly_ord(f.num(), place.pi()) - poly_ord(f.den(), place.pi());
}

SquareClass tame_symbol(const RationalFunction& alpha, const RationalFunction& beta, const PlaceOfQt& place)
{
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("tame_symbol: zero argument");
    const int r = ord(alpha, place), s = ord(beta, place);
    RationalFunction u = pow(beta, r) * pow(alpha, -s);
    if ((r * s) % 2 != 0)
        u = u * RationalFunction(qpoly({-1}));
    SquareClass out;
    if (place.is_infinite()) {
        const Rational c = u.num().leading() / u.den().leading();
        out.representative = NFElement(c);
        out.trivial = is_rational_square(c);
        return out;
    }
    out.field = NumberField::create_unchecked(place.pi(), "y");
    out.representative = NFElement(out.field, u.num()) / NFElement(out.field, u.den());
    out.trivial = nf_is_square(out.representative, out.field).is_square;
    return out;
}

bool hensel_extends(const RationalFunction& alpha, const PlaceOfQt& place)
{
    if (alpha.is_zero())
        throw std::invalid_argument("hensel_extends: zero argument");
    RationalFunction d = RationalFunction(qpoly({1})) - alpha;
    if (d.is_zero())
        return true;
    return ord(d, place) > 0;
}

bool hensel_extends(const Rational& alpha, const Integer& p)
{
    if (sgn(alpha) == 0)
        throw std::invalid_argument("hensel_extends: zero argument");
    if (p < 2 || !is_prime(p))
        throw std::invalid_argument("hensel_extends: " + to_string(p) + " is not prime");
    const Rational d = 1 - alpha;
    if (sgn(d) == 0)
        return true;
    return valuation(d, p) > 2 * valuation(Integer(2), p);
}

} // namespace azk
