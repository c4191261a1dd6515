#include "azk/arith/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace azk {

ExactPoly::ExactPoly(const QPoly& p, long shift, std::string var) : body_(p), shift_(shift), var_(std::move(var))
{
    canonicalize();
}

ExactPoly ExactPoly::from_terms(const std::map<long, Rational>& terms, std::string var)
{
    if (terms.empty())
        return ExactPoly(QPoly(), 0, std::move(var));
    const long low = terms.begin()->first;
    std::vector<Rational> c(static_cast<std::size_t>(terms.rbegin()->first - low) + 1);
    for (const auto& [e, v] : terms)
        c[static_cast<std::size_t>(e - low)] += v;
    return ExactPoly(QPoly(std::move(c)), low, std::move(var));
}

void ExactPoly::canonicalize()
{
    if (body_.is_zero()) {
        shift_ = 0;
        return;
    }
    std::size_t k = 0;
    while (azk::is_zero(body_[k]))
        ++k;
    if (k > 0) {
        std::vector<Rational> c(body_.coefficients().begin() + static_cast<long>(k), body_.coefficients().end());
        body_ = QPoly(std::move(c));
        shift_ += static_cast<long>(k);
    }
}

Rational ExactPoly::coeff(long e) const
{
    if (is_zero() || e < shift_ || e > high_exponent())
        return 0;
    return body_[static_cast<std::size_t>(e - shift_)];
}

std::map<long, Rational> ExactPoly::terms() const
{
    std::map<long, Rational> out;
    for (std::size_t i = 0; i < body_.size(); ++i)
        if (!azk::is_zero(body_[i]))
            out[shift_ + static_cast<long>(i)] = body_[i];
    return out;
}

QPoly ExactPoly::to_poly() const
{
    if (is_zero())
        return QPoly();
    if (shift_ < 0)
        throw std::invalid_argument("ExactPoly::to_poly: negative exponent present");
    return body_ * QPoly::monomial(Rational(1), static_cast<std::size_t>(shift_));
}

namespace {

// Align both operands to the smaller shift.
std::pair<QPoly, QPoly> aligned(const ExactPoly& a, const ExactPoly& b, long& low)
{
    low = std::min(a.is_zero() ? b.low_exponent() : a.low_exponent(), b.is_zero() ? a.low_exponent() : b.low_exponent());
    auto lift = [low](const ExactPoly& p) {
        if (p.is_zero())
            return QPoly();
        std::map<long, Rational> t = p.terms();
        std::vector<Rational> c(static_cast<std::size_t>(p.high_exponent() - low) + 1);
        for (const auto& [e, v] : t)
            c[static_cast<std::size_t>(e - low)] = v;
        return QPoly(std::move(c));
    };
    return {lift(a), lift(b)};
}

} // namespace

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b)
{
    long low = 0;
    auto [x, y] = aligned(a, b, low);
    return ExactPoly(x + y, low, a.var_);
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b)
{
    long low = 0;
    auto [x, y] = aligned(a, b, low);
    return ExactPoly(x - y, low, a.var_);
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b)
{
    return ExactPoly(a.body_ * b.body_, a.shift_ + b.shift_, a.var_);
}

NormalizedPoly normalize(const ExactPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("normalize: zero polynomial");
    NormalizedPoly out;
    out.shift = -p.low_exponent();
    ExactPoly shifted = p * ExactPoly(qpoly({1}), out.shift);
    out.poly = shifted.to_poly();
    if (sgn(out.poly.leading()) < 0) {
        out.sign = -1;
        out.poly = -out.poly;
    }
    return out;
}

QPoly reciprocal(const QPoly& p) { return reverse(p); }

std::string to_string(const ExactPoly& p)
{
    if (p.is_zero())
        return "0";
    const std::string& var = p.variable();
    std::ostringstream os;
    auto t = p.terms();
    bool first = true;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = sgn(c) < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        Rational a = abs(c);
        std::string mag = to_string(a);
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != "1")
            os << (mag.find('/') != std::string::npos ? "(" + mag + ")" : mag);
        os << var;
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

} // namespace azk
