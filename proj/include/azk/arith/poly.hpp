#pragma once

// Dense univariate polynomials templated on the coefficient scalar.
//
// The scalar type must be a value type with +, -, *, unary -, scaling by a
// long, a default-constructed zero, and the free functions is_zero(s),
// one_like(s) and (for field operations) inverse(s). Rational, Zp and
// NFElement all qualify; Integer qualifies for the ring operations.
//
// Coefficients are stored low degree first with no trailing zeros, so the
// zero polynomial is the empty vector and degree() is -1.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "azk/arith/integer.hpp"

namespace azk {

namespace detail {
// Unqualified call: finds the GMP overloads by ordinary lookup and the
// field types (Zp, NFElement) by ADL at instantiation.
template <class Scalar>
bool scalar_is_zero(const Scalar& s) { return is_zero(s); }
} // namespace detail

template <class Scalar>
class Poly {
public:
    using scalar_type = Scalar;

    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }
    static Poly monomial(const Scalar& c, std::size_t k)
    {
        std::vector<Scalar> v(k + 1, zero_like(c));
        v[k] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::size_t size() const { return c_.size(); }

    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar{}; }
    const Scalar& operator[](std::size_t i) const { return c_.at(i); }
    const Scalar& leading() const
    {
        if (c_.empty())
            throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<Scalar>& coefficients() const { return c_; }

    void set_coeff(std::size_t i, const Scalar& v)
    {
        if (i >= c_.size()) {
            if (detail::scalar_is_zero(v))
                return;
            c_.resize(i + 1, zero_like(v));
        }
        c_[i] = v;
        trim();
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Scalar{});
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Scalar{});
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Scalar& s)
    {
        for (auto& x : c_)
            x = x * s;
        trim();
        return *this;
    }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        if (a.c_.size() != b.c_.size())
            return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i]))
                return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim()
    {
        while (!c_.empty() && detail::scalar_is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<Scalar> c_;
};

template <class Scalar>
bool is_zero(const Poly<Scalar>& p) { return p.is_zero(); }

template <class Scalar>
Poly<Scalar> operator+(Poly<Scalar> a, const Poly<Scalar>& b) { return a += b; }
template <class Scalar>
Poly<Scalar> operator-(Poly<Scalar> a, const Poly<Scalar>& b) { return a -= b; }
template <class Scalar>
Poly<Scalar> operator-(const Poly<Scalar>& a) { return Poly<Scalar>() - a; }
template <class Scalar>
Poly<Scalar> operator*(Poly<Scalar> a, const Scalar& s) { return a *= s; }
template <class Scalar>
Poly<Scalar> operator*(const Scalar& s, Poly<Scalar> a) { return a *= s; }

template <class Scalar>
Poly<Scalar> operator*(const Poly<Scalar>& a, const Poly<Scalar>& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    std::vector<Scalar> out(ac.size() + bc.size() - 1, zero_like(ac.back()));
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (is_zero(ac[i]))
            continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            out[i + j] = out[i + j] + ac[i] * bc[j];
    }
    return Poly<Scalar>(std::move(out));
}

template <class Scalar>
Poly<Scalar>& operator*=(Poly<Scalar>& a, const Poly<Scalar>& b) { return a = a * b; }

template <class Scalar>
Poly<Scalar> pow(const Poly<Scalar>& base, unsigned e)
{
    Poly<Scalar> r = Poly<Scalar>::constant(one_like(base.is_zero() ? Scalar{} : base.leading()));
    Poly<Scalar> b = base;
    while (e) {
        if (e & 1u)
            r = r * b;
        e >>= 1u;
        if (e)
            b = b * b;
    }
    return r;
}

/// Quotient and remainder over a field.
template <class Scalar>
std::pair<Poly<Scalar>, Poly<Scalar>> divmod(const Poly<Scalar>& a, const Poly<Scalar>& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly<Scalar>(), a};
    const Scalar inv = inverse(b.leading());
    std::vector<Scalar> r = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<Scalar> q(r.size() - db, zero_like(b.leading()));
    for (std::size_t k = r.size(); k-- > db;) {
        if (is_zero(r[k]))
            continue;
        Scalar f = r[k] * inv;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j)
            r[k - db + j] = r[k - db + j] - f * bc[j];
    }
    r.resize(db);
    return {Poly<Scalar>(std::move(q)), Poly<Scalar>(std::move(r))};
}

template <class Scalar>
Poly<Scalar> operator/(const Poly<Scalar>& a, const Poly<Scalar>& b) { return divmod(a, b).first; }
template <class Scalar>
Poly<Scalar> operator%(const Poly<Scalar>& a, const Poly<Scalar>& b) { return divmod(a, b).second; }

template <class Scalar>
bool divides(const Poly<Scalar>& d, const Poly<Scalar>& a) { return (a % d).is_zero(); }

template <class Scalar>
Poly<Scalar> monic(const Poly<Scalar>& p)
{
    if (p.is_zero())
        return p;
    return p * inverse(p.leading());
}

template <class Scalar>
Poly<Scalar> gcd(Poly<Scalar> a, Poly<Scalar> b)
{
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly<Scalar> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class Scalar>
struct XGcd {
    Poly<Scalar> g, s, t;
};

template <class Scalar>
XGcd<Scalar> xgcd(const Poly<Scalar>& a, const Poly<Scalar>& b)
{
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("xgcd of two zero polynomials");
    const Scalar one = one_like(a.is_zero() ? b.leading() : a.leading());
    Poly<Scalar> r0 = a, r1 = b;
    Poly<Scalar> s0 = Poly<Scalar>::constant(one), s1;
    Poly<Scalar> t0, t1 = Poly<Scalar>::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<Scalar> s2 = s0 - q * s1;
        Poly<Scalar> t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Scalar inv = inverse(r0.leading());
    return {r0 * inv, s0 * inv, t0 * inv};
}

template <class Scalar>
Poly<Scalar> derivative(const Poly<Scalar>& p)
{
    if (p.degree() < 1)
        return {};
    std::vector<Scalar> d;
    d.reserve(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<long>(i));
    return Poly<Scalar>(std::move(d));
}

template <class Scalar, class Point>
Point evaluate(const Poly<Scalar>& p, const Point& x)
{
    Point acc{};
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

/// p(q(t)).
template <class Scalar>
Poly<Scalar> compose(const Poly<Scalar>& p, const Poly<Scalar>& q)
{
    Poly<Scalar> acc;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * q + Poly<Scalar>::constant(p[i]);
    return acc;
}

/// t^deg(p) * p(1/t).
template <class Scalar>
Poly<Scalar> reverse(const Poly<Scalar>& p)
{
    std::vector<Scalar> c = p.coefficients();
    std::reverse(c.begin(), c.end());
    return Poly<Scalar>(std::move(c));
}

/// p(t^k).
template <class Scalar>
Poly<Scalar> inflate(const Poly<Scalar>& p, std::size_t k)
{
    if (p.is_zero())
        return p;
    std::vector<Scalar> c((p.size() - 1) * k + 1, zero_like(p.leading()));
    for (std::size_t i = 0; i < p.size(); ++i)
        c[i * k] = p[i];
    return Poly<Scalar>(std::move(c));
}

/// p(-t).
template <class Scalar>
Poly<Scalar> negate_variable(const Poly<Scalar>& p)
{
    std::vector<Scalar> c = p.coefficients();
    for (std::size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return Poly<Scalar>(std::move(c));
}

/// base^e mod m, exponent given as a big integer.
template <class Scalar>
Poly<Scalar> powmod(const Poly<Scalar>& base, const Integer& e, const Poly<Scalar>& m)
{
    if (sgn(e) < 0)
        throw std::invalid_argument("powmod: negative exponent");
    Poly<Scalar> r = Poly<Scalar>::constant(one_like(m.leading())) % m;
    Poly<Scalar> b = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = (r * b) % m;
    }
    return r;
}

/// Coefficient-vector ordering: by degree, then coefficients from the
/// constant term upwards.
template <class Scalar, class Less>
bool lex_less(const Poly<Scalar>& a, const Poly<Scalar>& b, Less less)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (less(a[i], b[i]))
            return true;
        if (less(b[i], a[i]))
            return false;
    }
    return false;
}

} // namespace azk
