#include "azk/arith/number_field.hpp"

#include <stdexcept>

#include "azk/arith/factor.hpp"

namespace azk {

FieldPtr NumberField::create(const QPoly& modulus, std::string name)
{
    if (modulus.degree() < 1)
        throw std::invalid_argument("NumberField: modulus must have positive degree");
    if (!is_irreducible_q(modulus))
        throw std::invalid_argument("NumberField: modulus " + to_string(modulus) + " is reducible over Q");
    return create_unchecked(modulus, std::move(name));
}

FieldPtr NumberField::create_unchecked(const QPoly& modulus, std::string name)
{
    if (modulus.degree() < 1)
        throw std::invalid_argument("NumberField: modulus must have positive degree");
    return FieldPtr(new NumberField(monic(modulus), std::move(name)));
}

FieldPtr NumberField::rationals()
{
    static const FieldPtr q = create_unchecked(q_t(), "y");
    return q;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b)
{
    if (!a)
        return b;
    if (!b)
        return a;
    if (!a->same_as(*b))
        throw std::invalid_argument("number field elements from different fields");
    return a;
}

NFElement::NFElement(FieldPtr field, const QPoly& repr) : field_(std::move(field)), repr_(repr)
{
    if (field_ && repr_.degree() >= field_->degree())
        repr_ = repr_ % field_->modulus();
}

NFElement NFElement::generator(const FieldPtr& field) { return NFElement(field, q_t()); }

Rational NFElement::rational_value() const
{
    if (!is_rational())
        throw std::domain_error("NFElement is not rational");
    return repr_.is_zero() ? Rational(0) : repr_[0];
}

std::vector<Rational> NFElement::coordinates(int degree) const
{
    std::vector<Rational> c(static_cast<std::size_t>(degree));
    for (std::size_t i = 0; i < repr_.size(); ++i) {
        if (i >= c.size())
            throw std::logic_error("NFElement::coordinates: representative not reduced");
        c[i] = repr_[i];
    }
    return c;
}

NFElement operator+(const NFElement& a, const NFElement& b)
{
    NFElement r;
    r.field_ = common_field(a.field_, b.field_);
    r.repr_ = a.repr_ + b.repr_;
    return r;
}

NFElement operator-(const NFElement& a, const NFElement& b)
{
    NFElement r;
    r.field_ = common_field(a.field_, b.field_);
    r.repr_ = a.repr_ - b.repr_;
    return r;
}

NFElement operator-(const NFElement& a)
{
    NFElement r = a;
    r.repr_ = -a.repr_;
    return r;
}

NFElement operator*(const NFElement& a, const NFElement& b)
{
    FieldPtr f = common_field(a.field_, b.field_);
    return NFElement(f, a.repr_ * b.repr_);
}

bool operator==(const NFElement& a, const NFElement& b)
{
    common_field(a.field_, b.field_);
    return a.repr_ == b.repr_;
}

NFElement operator*(const NFElement& a, long k) { return a * NFElement(Rational(k)); }
NFElement operator/(const NFElement& a, const NFElement& b) { return a * inverse(b); }

bool is_zero(const NFElement& a) { return a.repr().is_zero(); }

NFElement inverse(const NFElement& a)
{
    if (is_zero(a))
        throw std::domain_error("NFElement: inverse of zero");
    if (a.is_rational())
        return NFElement(a.field(), QPoly::constant(inverse(a.repr()[0])));
    auto x = xgcd(a.repr(), a.field()->modulus());
    if (x.g.degree() != 0)
        throw std::logic_error("NFElement: modulus not irreducible");
    return NFElement(a.field(), x.s);
}

NFElement one_like(const NFElement& a) { return NFElement(a.field(), qpoly({1})); }
NFElement zero_like(const NFElement& a) { return NFElement(a.field(), QPoly()); }

NFElement pow(const NFElement& a, long e)
{
    if (e < 0)
        return pow(inverse(a), -e);
    NFElement r = one_like(a), b = a;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

std::string to_string(const NFElement& a)
{
    return to_string(a.repr(), a.field() ? a.field()->name() : "y");
}

namespace {

// Monic minimal polynomial of an element given by a callback producing the
// coordinates of its k-th power in a dim-dimensional Q-algebra.
template <class PowerCoords>
QPoly minpoly_from_powers(int dim, PowerCoords power_coords)
{
    std::vector<std::vector<Rational>> powers;
    powers.push_back(power_coords(0));
    for (int k = 1; k <= dim; ++k) {
        std::vector<Rational> v = power_coords(k);
        Matrix<Rational> m(static_cast<std::size_t>(dim), static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            m.set_column(static_cast<std::size_t>(j), powers[static_cast<std::size_t>(j)]);
        if (auto c = solve(m, v)) {
            std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
            for (int j = 0; j < k; ++j)
                coeffs[static_cast<std::size_t>(j)] = -(*c)[static_cast<std::size_t>(j)];
            coeffs[static_cast<std::size_t>(k)] = 1;
            return QPoly(std::move(coeffs));
        }
        powers.push_back(std::move(v));
    }
    throw std::logic_error("minimal polynomial search exceeded the algebra dimension");
}

} // namespace

QPoly nf_minpoly(const NFElement& e)
{
    if (!e.field() || e.is_rational())
        return QPoly({Rational(-e.rational_value()), Rational(1)});
    const int d = e.field()->degree();
    NFElement power = one_like(e);
    return minpoly_from_powers(d, [&](int k) {
        if (k > 0)
            power = power * e;
        return power.coordinates(d);
    });
}

QPoly norm_polynomial(const Poly<NFElement>& g_in, const FieldPtr& field)
{
    if (g_in.degree() < 1)
        throw std::invalid_argument("norm_polynomial: need positive degree");
    Poly<NFElement> g = monic(g_in);
    const int d = field ? field->degree() : 1;
    const int n = g.degree();
    const auto dim = static_cast<std::size_t>(n * d);
    Matrix<Rational> m(dim, dim);
    NFElement y = field ? NFElement::generator(field) : NFElement(Rational(0));
    for (int j = 0; j < n; ++j) {
        NFElement yi = field ? one_like(y) : NFElement(Rational(1));
        for (int i = 0; i < d; ++i) {
            const auto col = static_cast<std::size_t>(j * d + i);
            if (j + 1 < n) {
                m(static_cast<std::size_t>((j + 1) * d + i), col) = 1;
            } else {
                for (int k = 0; k < n; ++k) {
                    NFElement v = -(yi * g.coeff(static_cast<std::size_t>(k)));
                    if (field)
                        v = v.with_field(field);
                    auto coords = v.coordinates(d);
                    for (int r = 0; r < d; ++r)
                        m(static_cast<std::size_t>(k * d + r), col) = coords[static_cast<std::size_t>(r)];
                }
            }
            if (field)
                yi = yi * y;
        }
    }
    return charpoly(m);
}

SquareRootResult nf_is_square(const NFElement& e, const FieldPtr& field_in, int first_shift)
{
    FieldPtr field = common_field(e.field(), field_in);
    SquareRootResult out;
    out.shift = first_shift;
    if (is_zero(e)) {
        out.is_square = true;
        out.root = field ? zero_like(e.with_field(field)) : NFElement();
        return out;
    }
    if (!field)
        field = NumberField::rationals();
    const NFElement elem = e.with_field(field);
    const int d = field->degree();
    const NFElement y = NFElement::generator(field);
    for (int c = first_shift; c < first_shift + 64 + 4 * d; ++c) {
        const NFElement cy = y * static_cast<long>(c);
        // (X - c y)^2 - e
        Poly<NFElement> g({cy * cy - elem, -(cy * 2L), one_like(elem)});
        QPoly norm = norm_polynomial(g, field);
        if (!is_squarefree(norm))
            continue;
        out.shift = c;
        out.norm = norm;
        auto fac = factor_over_Q(norm);
        for (const auto& [ni, mult] : fac.factors) {
            if (ni.degree() != d)
                continue;
            std::vector<NFElement> coeffs;
            for (const auto& q : ni.coefficients())
                coeffs.push_back(NFElement(field, QPoly::constant(q)));
            Poly<NFElement> h = gcd(g, Poly<NFElement>(std::move(coeffs)));
            if (h.degree() != 1)
                continue;
            NFElement s = -h[0] - cy;
            if (s * s == elem) {
                out.is_square = true;
                out.root = s;
                return out;
            }
        }
        return out;
    }
    throw std::logic_error("nf_is_square: no square-free norm found");
}

SquareRootResult nf_is_square(const NFElement& e, int first_shift) { return nf_is_square(e, e.field(), first_shift); }

std::optional<std::vector<Rational>> nf_linear_expression(const FieldPtr& field_in, const NFElement& target,
                                                         const NFElement& theta)
{
    FieldPtr field = common_field(common_field(field_in, target.field()), theta.field());
    const int d = field ? field->degree() : 1;
    const int r = nf_minpoly(theta).degree();
    Matrix<Rational> m(static_cast<std::size_t>(d), static_cast<std::size_t>(r));
    NFElement power = field ? one_like(theta.with_field(field)) : NFElement(Rational(1));
    for (int i = 0; i < r; ++i) {
        m.set_column(static_cast<std::size_t>(i), power.coordinates(d));
        power = power * theta;
    }
    return solve(m, target.coordinates(d));
}

namespace {

// a + b sqrt(D) over the base field.
struct QuadPair {
    NFElement a, b;
};

QuadPair quad_mul(const QuadPair& x, const QuadPair& y, const NFElement& disc)
{
    return {x.a * y.a + x.b * y.b * disc, x.a * y.b + x.b * y.a};
}

std::vector<Rational> quad_coords(const QuadPair& x, int d)
{
    std::vector<Rational> c = x.a.coordinates(d);
    auto cb = x.b.coordinates(d);
    c.insert(c.end(), cb.begin(), cb.end());
    return c;
}

} // namespace

NFElement QuadraticExtension::embed(const NFElement& x) const
{
    return evaluate(x.repr(), old_generator).with_field(field);
}

QuadraticExtension adjoin_sqrt(const FieldPtr& base, const NFElement& disc_in)
{
    const NFElement disc = disc_in.with_field(base);
    auto sq = nf_is_square(disc, base);
    const NFElement x = NFElement::generator(base);
    if (sq.is_square)
        return {base, x, *sq.root, true, 0};
    const int d = base->degree();
    const int dim = 2 * d;
    const NFElement zero = zero_like(x), one = one_like(x);
    for (int c = 1;; ++c) {
        const QuadPair gamma{x, one * static_cast<long>(c)};
        QuadPair power{one, zero};
        std::vector<std::vector<Rational>> cols;
        QPoly mp = minpoly_from_powers(dim, [&](int k) {
            if (k > 0)
                power = quad_mul(power, gamma, disc);
            auto v = quad_coords(power, d);
            if (static_cast<int>(cols.size()) < dim)
                cols.push_back(v);
            return v;
        });
        if (mp.degree() != dim)
            continue;
        FieldPtr field = NumberField::create_unchecked(mp, "g");
        Matrix<Rational> m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j)
            m.set_column(static_cast<std::size_t>(j), cols[static_cast<std::size_t>(j)]);
        auto xs = solve(m, quad_coords({x, zero}, d));
        auto ss = solve(m, quad_coords({zero, one}, d));
        if (!xs || !ss)
            throw std::logic_error("adjoin_sqrt: primitive element does not span");
        return {field, NFElement(field, QPoly(*xs)), NFElement(field, QPoly(*ss)), false, c};
    }
}

} // namespace azk
