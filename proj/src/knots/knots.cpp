#include "azk/knots/knots.hpp"

#include <map>
#include <stdexcept>

#include "azk/arith/sturm.hpp"

namespace azk {

Family parse_family(const std::string& name)
{
    static const std::map<std::string, Family> names{{"twist", Family::Twist},     {"pretzel237", Family::Pretzel237},
                                                     {"cyclotomic", Family::Cyclotomic}, {"fa", Family::Fa},
                                                     {"f8", Family::F8},           {"lehmer", Family::Lehmer}};
    auto it = names.find(name);
    if (it == names.end())
        throw std::invalid_argument("unknown family '" + name + "'");
    return it->second;
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::Twist: return "twist";
    case Family::Pretzel237: return "pretzel237";
    case Family::Cyclotomic: return "cyclotomic";
    case Family::Fa: return "fa";
    case Family::F8: return "f8";
    case Family::Lehmer: return "lehmer";
    case Family::Custom: return "custom";
    }
    return "custom";
}

QPoly twist_alexander(long m)
{
    if (m < 1)
        throw std::invalid_argument("twist: m must be >= 1");
    if (m % 2 == 1) {
        const long h = (m + 1) / 2;
        return qpoly({h, -m, h});
    }
    const long h = m / 2;
    return qpoly({h, -(m + 1), h});
}

namespace {

// P_r without the 3 | r restriction.
QPoly pretzel_poly(long r)
{
    std::vector<Rational> c(static_cast<std::size_t>(r + 4));
    c[0] = 1;
    c[1] = -1;
    for (long j = 3; j <= r; ++j)
        c[static_cast<std::size_t>(j)] = (r - j) % 2 == 0 ? 1 : -1;
    c[static_cast<std::size_t>(r + 2)] = -1;
    c[static_cast<std::size_t>(r + 3)] = 1;
    return QPoly(std::move(c));
}

QPoly monomial(long e) { return QPoly::monomial(Rational(1), static_cast<std::size_t>(e)); }

} // namespace

QPoly pretzel237_alexander(long r)
{
    if (r < 7 || r % 2 == 0 || r % 3 == 0)
        throw std::invalid_argument("pretzel237: need r >= 7 odd and not divisible by 3");
    return pretzel_poly(r);
}

QPoly cyclotomic(long n)
{
    if (n < 1)
        throw std::invalid_argument("cyclotomic: n must be >= 1");
    QPoly p = monomial(n) - qpoly({1});
    for (long d = 1; d < n; ++d)
        if (n % d == 0)
            p = p / cyclotomic(d);
    return p;
}

QPoly fa_polynomial(long a)
{
    if (a < 7)
        throw std::invalid_argument("fa: a must be >= 7");
    return qpoly({1, -a, 2 * a - 1, -a, 1});
}

QPoly f8_polynomial() { return qpoly({1, -3, 5, -7, 9, -7, 5, -3, 1}); }

QPoly lehmer_polynomial() { return qpoly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}); }

QPoly alexander(const KnotFamilySpec& spec)
{
    switch (spec.family) {
    case Family::Twist: return twist_alexander(spec.param);
    case Family::Pretzel237: return pretzel237_alexander(spec.param);
    case Family::Cyclotomic:
        if (spec.param < 3)
            throw std::invalid_argument("cyclotomic: n must be >= 3");
        return cyclotomic(spec.param);
    case Family::Fa: return fa_polynomial(spec.param);
    case Family::F8: return f8_polynomial();
    case Family::Lehmer: return lehmer_polynomial();
    case Family::Custom:
        if (spec.custom.is_zero())
            throw std::invalid_argument("custom family: zero polynomial");
        return normalize(spec.custom).poly;
    }
    throw std::invalid_argument("unknown family");
}

bool pretzel_division_identity(long r)
{
    if (r < 7 || r % 2 == 0)
        throw std::invalid_argument("pretzel_division_identity: need odd r >= 7");
    QPoly numerator = qpoly({1, 2}) + monomial(4) + monomial(1 + r) - monomial(3) - monomial(3 + r) + monomial(5) +
                      monomial(2 + r) + monomial(5 + r) * Rational(2) + monomial(6 + r);
    return pow(qpoly({1, 1}), 3) * pretzel_poly(r) == numerator;
}

UnitCircleRoots has_root_on_unit_circle(const ExactPoly& in)
{
    if (in.is_zero())
        throw std::invalid_argument("has_root_on_unit_circle: zero polynomial");
    const QPoly p = normalize(in).poly;
    UnitCircleRoots out;
    if (p.degree() < 1)
        return out;
    const bool pm1 = is_zero(evaluate(p, Rational(1))) || is_zero(evaluate(p, Rational(-1)));
    QPoly g = gcd(p, reverse(p));
    for (const QPoly& lin : {qpoly({-1, 1}), qpoly({1, 1})})
        while (g.degree() >= 1 && divides(lin, g))
            g = g / lin;
    if (g.degree() >= 1) {
        g = monic(g);
        if (g.degree() % 2 != 0 || reverse(g) != g * g[0])
            throw std::logic_error("has_root_on_unit_circle: reciprocal part is not palindromic");
        // g(t) / t^k = c_k + sum_j c_{k+j} (t^j + t^-j),  t^j + t^-j = s_j(x).
        const std::size_t k = static_cast<std::size_t>(g.degree() / 2);
        const QPoly x = q_t();
        QPoly s_prev = qpoly({2}), s = x;
        QPoly h = QPoly::constant(g[k]);
        for (std::size_t j = 1; j <= k; ++j) {
            h = h + s * g[k + j];
            QPoly next = x * s - s_prev;
            s_prev = s;
            s = next;
        }
        out.excluding_pm1 = count_distinct_real_roots(h, Rational(-2), Rational(2)) > 0;
    }
    out.any = pm1 || out.excluding_pm1;
    return out;
}

bool os_lspace_form(const ExactPoly& in)
{
    if (in.is_zero())
        throw std::invalid_argument("os_lspace_form: zero polynomial");
    const QPoly p = normalize(in).poly;
    if (p.degree() % 2 != 0 || reverse(p) != p)
        return false;
    if (is_zero(p[static_cast<std::size_t>(p.degree() / 2)]))
        return false;
    int expected = 1;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (is_zero(p[i]))
            continue;
        if (p[i] != expected)
            return false;
        expected = -expected;
    }
    return true;
}

PredicateReport predicates(const ExactPoly& in)
{
    if (in.is_zero())
        throw std::invalid_argument("predicates: zero polynomial");
    const QPoly p = normalize(in).poly;
    PredicateReport r;
    auto uc = has_root_on_unit_circle(in);
    r.has_unit_circle_root = uc.any;
    r.unit_circle_root_is_not_pm1 = uc.excluding_pm1;
    const QPoly sqf = squarefree_part(p);
    r.all_roots_real_positive = count_distinct_real_roots(sqf, Rational(0), std::nullopt) == sqf.degree();
    r.os_form = os_lspace_form(in);
    r.all_roots_simple = is_squarefree(p);
    r.reciprocal = reverse(p) == p || reverse(p) == -p;
    r.delta_at_1 = evaluate(p, Rational(1));
    return r;
}

} // namespace azk
