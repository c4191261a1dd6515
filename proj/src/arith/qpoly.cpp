#include "azk/arith/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace azk {

QPoly qpoly(std::initializer_list<long> coeffs)
{
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs)
        c.emplace_back(v);
    return QPoly(std::move(c));
}

QPoly q_t() { return qpoly({0, 1}); }

Integer content(const ZPoly& p)
{
    Integer g = 0;
    for (const auto& c : p.coefficients())
        g = gcd(g, c);
    return g;
}

std::pair<Rational, ZPoly> primitive_split(const QPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("primitive part of zero polynomial");
    Integer den = 1;
    for (const auto& c : p.coefficients())
        den = lcm(den, c.get_den());
    std::vector<Integer> z;
    z.reserve(p.size());
    for (const auto& c : p.coefficients()) {
        Integer v = c.get_num() * (den / c.get_den());
        z.push_back(v);
    }
    Integer g = 0;
    for (const auto& v : z)
        g = gcd(g, v);
    if (sgn(z.back()) < 0)
        g = -g;
    for (auto& v : z)
        v /= g;
    return {make_rational(g, den), ZPoly(std::move(z))};
}

ZPoly primitive_part(const QPoly& p) { return primitive_split(p).second; }

QPoly to_rational(const ZPoly& p)
{
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& v : p.coefficients())
        c.emplace_back(v);
    return QPoly(std::move(c));
}

FpPoly reduce_mod(const ZPoly& p, std::uint64_t prime)
{
    std::vector<Zp> c;
    c.reserve(p.size());
    for (const auto& v : p.coefficients())
        c.push_back(Zp::from_integer(v, prime));
    return FpPoly(std::move(c));
}

FpPoly reduce_mod(const QPoly& p, std::uint64_t prime)
{
    std::vector<Zp> c;
    c.reserve(p.size());
    for (const auto& v : p.coefficients()) {
        Zp den = Zp::from_integer(v.get_den(), prime);
        if (is_zero(den))
            throw std::invalid_argument("reduce_mod: denominator divisible by the prime");
        c.push_back(Zp::from_integer(v.get_num(), prime) * inverse(den));
    }
    return FpPoly(std::move(c));
}

ZPoly lift_symmetric(const FpPoly& p)
{
    std::vector<Integer> c;
    c.reserve(p.size());
    for (const auto& v : p.coefficients()) {
        long x = static_cast<long>(v.value);
        if (static_cast<std::uint64_t>(2 * x) > v.prime)
            x -= static_cast<long>(v.prime);
        c.emplace_back(x);
    }
    return ZPoly(std::move(c));
}

namespace {

// Sylvester-matrix resultant via the Euclidean remainder sequence.
Rational sylvester_resultant(QPoly a, QPoly b)
{
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("resultant of zero polynomial");
    Rational acc = 1;
    while (true) {
        const int da = a.degree(), db = b.degree();
        if (db == 0) {
            Rational lb = b.leading(), r = 1;
            for (int i = 0; i < da; ++i)
                r *= lb;
            return acc * r;
        }
        if (da == 0) {
            Rational la = a.leading(), r = 1;
            for (int i = 0; i < db; ++i)
                r *= la;
            return acc * r;
        }
        QPoly r = a % b;
        if (r.is_zero())
            return 0;
        if ((da % 2 == 1) && (db % 2 == 1))
            acc = -acc;
        Rational lb = b.leading();
        for (int i = 0; i < da - r.degree(); ++i)
            acc *= lb;
        a = std::move(b);
        b = std::move(r);
    }
}

} // namespace

Rational resultant(const QPoly& p, const QPoly& q)
{
    // Sylvester res(q, p) = lc(q)^deg p * prod_{q(b)=0} p(b).
    return sylvester_resultant(q, p);
}

Rational discriminant(const QPoly& p)
{
    const int n = p.degree();
    if (n < 1)
        throw std::invalid_argument("discriminant of constant polynomial");
    Rational r = sylvester_resultant(p, derivative(p)) / p.leading();
    if ((n * (n - 1) / 2) % 2 == 1)
        r = -r;
    return r;
}

QPoly poly_gcd(const QPoly& p, const QPoly& q) { return gcd(p, q); }

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("square-free decomposition of zero");
    std::vector<std::pair<QPoly, int>> out;
    if (p.degree() == 0)
        return out;
    QPoly f = monic(p);
    QPoly fp = derivative(f);
    QPoly a = gcd(f, fp);
    QPoly b = f / a;
    QPoly c = fp / a;
    QPoly d = c - derivative(b);
    for (int i = 1; b.degree() > 0; ++i) {
        QPoly g = gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - derivative(b);
    }
    return out;
}

QPoly squarefree_part(const QPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("square-free part of zero");
    if (p.degree() == 0)
        return qpoly({1});
    QPoly f = monic(p);
    return monic(f / gcd(f, derivative(f)));
}

bool is_squarefree(const QPoly& p)
{
    if (p.degree() < 1)
        return true;
    return gcd(p, derivative(p)).degree() == 0;
}

namespace {

template <class Scalar, class CoeffText>
std::string poly_text(const Poly<Scalar>& p, const std::string& var, CoeffText text)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        auto [negative, magnitude] = text(p[i]);
        if (magnitude.empty())
            continue;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const bool unit = magnitude == "1";
        if (i == 0) {
            os << magnitude;
            continue;
        }
        if (!unit) {
            if (magnitude.find('/') != std::string::npos)
                os << "(" << magnitude << ")";
            else
                os << magnitude;
        }
        os << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

} // namespace

std::string to_string(const QPoly& p, const std::string& var)
{
    return poly_text(p, var, [](const Rational& c) {
        if (sgn(c) == 0)
            return std::pair<bool, std::string>{false, ""};
        Rational a = abs(c);
        return std::pair<bool, std::string>{sgn(c) < 0, azk::to_string(a)};
    });
}

std::string to_string(const FpPoly& p, const std::string& var)
{
    return poly_text(p, var, [](const Zp& c) {
        if (c.value == 0)
            return std::pair<bool, std::string>{false, ""};
        return std::pair<bool, std::string>{false, std::to_string(c.value)};
    });
}

bool rational_less(const Rational& a, const Rational& b) { return a < b; }
bool zp_less(const Zp& a, const Zp& b) { return a.value < b.value; }

} // namespace azk
