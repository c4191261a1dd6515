#include "azk/casebook/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace azk {

BiPoly::BiPoly(const Rational& c, std::string x, std::string y) : x_(std::move(x)), y_(std::move(y))
{
    add_term({0, 0}, c);
}

BiPoly BiPoly::var(int which, std::string x, std::string y)
{
    if (which != 0 && which != 1)
        throw std::invalid_argument("BiPoly::var: index must be 0 or 1");
    return monomial(Rational(1), which == 0 ? 1 : 0, which == 1 ? 1 : 0, std::move(x), std::move(y));
}

BiPoly BiPoly::monomial(const Rational& c, int i, int j, std::string x, std::string y)
{
    BiPoly p(Rational(0), std::move(x), std::move(y));
    p.add_term({i, j}, c);
    return p;
}

void BiPoly::add_term(const Exponent& e, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Rational BiPoly::coeff(int i, int j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational BiPoly::evaluate(const Rational& x, const Rational& y) const
{
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational xi, yj;
        mpq_set_ui(xi.get_mpq_t(), 1, 1);
        mpq_set_ui(yj.get_mpq_t(), 1, 1);
        for (int k = 0; k < e.first; ++k)
            xi *= x;
        for (int k = 0; k < e.second; ++k)
            yj *= y;
        s += c * xi * yj;
    }
    return s;
}

QPoly BiPoly::at_first(const Rational& x) const
{
    QPoly out;
    for (const auto& [e, c] : terms_) {
        Rational xi = 1;
        for (int k = 0; k < e.first; ++k)
            xi *= x;
        out += QPoly::monomial(Rational(c * xi), static_cast<std::size_t>(e.second));
    }
    return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b)
{
    BiPoly r = a;
    for (const auto& [e, c] : b.terms_)
        r.add_term(e, c);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b)
{
    BiPoly r = a;
    for (const auto& [e, c] : b.terms_)
        r.add_term(e, -c);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    BiPoly r(Rational(0), a.x_, a.y_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
}

BiPoly pow(const BiPoly& p, unsigned e)
{
    BiPoly r(Rational(1), p.x_name(), p.y_name());
    for (unsigned i = 0; i < e; ++i)
        r = r * p;
    return r;
}

BiPoly reduce(const BiPoly& p, const BiPoly& f)
{
    if (f.is_zero())
        throw std::invalid_argument("reduce: division by zero polynomial");
    const auto [lead_e, lead_c] = *f.terms().begin();
    BiPoly rest = p, rem(Rational(0), p.x_name(), p.y_name());
    while (!rest.is_zero()) {
        const auto [e, c] = *rest.terms().begin();
        if (e.first >= lead_e.first && e.second >= lead_e.second) {
            BiPoly q = BiPoly::monomial(c / lead_c, e.first - lead_e.first, e.second - lead_e.second, p.x_name(),
                                        p.y_name());
            rest = rest - q * f;
        } else {
            BiPoly t = BiPoly::monomial(c, e.first, e.second, p.x_name(), p.y_name());
            rem = rem + t;
            rest = rest - t;
        }
    }
    return rem;
}

BiPoly lift(const QPoly& p, int which, const std::string& x, const std::string& y)
{
    BiPoly r(Rational(0), x, y);
    for (std::size_t i = 0; i < p.size(); ++i)
        r = r + BiPoly::monomial(p[i], which == 0 ? static_cast<int>(i) : 0, which == 1 ? static_cast<int>(i) : 0, x,
                                 y);
    return r;
}

std::string to_string(const BiPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        Rational a = abs(c);
        std::string mag = to_string(a);
        const bool constant = e.first == 0 && e.second == 0;
        if (constant || mag != "1")
            os << (mag.find('/') != std::string::npos && !constant ? "(" + mag + ")" : mag);
        auto put = [&os](const std::string& v, int k) {
            if (k == 0)
                return;
            os << v;
            if (k > 1)
                os << "^" << k;
        };
        put(p.x_name(), e.first);
        put(p.y_name(), e.second);
    }
    return os.str();
}

} // namespace azk
