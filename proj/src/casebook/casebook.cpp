#include "azk/casebook/casebook.hpp"

#include <algorithm>
#include <stdexcept>

#include "azk/knots/knots.hpp"
#include "azk/star/star.hpp"

namespace azk {

bool CheckReport::passed() const
{
    return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

namespace {

const std::string kR = "R", kT = "T", kY = "y", kZ = "z";

BiPoly rt(const Rational& c) { return BiPoly(c, kR, kT); }
BiPoly rvar() { return BiPoly::var(0, kR, kT); }
BiPoly tvar() { return BiPoly::var(1, kR, kT); }

// q(z) with z = R - 1, as a polynomial in (R, T).
BiPoly at_r_minus_1(const QPoly& q) { return lift(compose(q, qpoly({-1, 1})), 0, kR, kT); }

QPoly qi_modulus() { return qpoly({1, 0, 1}); }

Poly<NFElement> qi_poly(const FieldPtr& k, const std::vector<std::pair<Rational, Rational>>& coeffs)
{
    std::vector<NFElement> out;
    for (const auto& [re, im] : coeffs)
        out.push_back(NFElement(k, QPoly({re, im})));
    return Poly<NFElement>(std::move(out));
}

Poly<NFElement> as_constants(const FieldPtr& k, const QPoly& p)
{
    std::vector<NFElement> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        out.push_back(NFElement(k, QPoly::constant(p[i])));
    return Poly<NFElement>(std::move(out));
}

std::string poly_string(const Poly<NFElement>& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        if (is_zero(p[static_cast<std::size_t>(i)]))
            continue;
        if (!s.empty())
            s += " + ";
        s += "(" + to_string(p[static_cast<std::size_t>(i)]) + ")";
        if (i > 0)
            s += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    return s;
}

// Value of num/den at the infinite place of Q(z), if finite.
std::optional<Rational> value_at_infinity(const QPoly& num, const QPoly& den)
{
    if (num.is_zero())
        return Rational(0);
    if (num.degree() > den.degree())
        return std::nullopt;
    if (num.degree() < den.degree())
        return Rational(0);
    return Rational(num.leading() / den.leading());
}

CheckItem item(std::string name, bool passed, std::string detail = {})
{
    return CheckItem{std::move(name), passed, std::move(detail)};
}

} // namespace

BiPoly fig8_curve()
{
    // R T^2 - 2 T^2 - R^2 + R + 1
    return BiPoly::monomial(1, 1, 2, kR, kT) - BiPoly::monomial(2, 0, 2, kR, kT) - BiPoly::monomial(1, 2, 0, kR, kT) +
           rvar() + rt(1);
}

Fig8Data Fig8Data::standard()
{
    Fig8Data d;
    d.curve = fig8_curve();
    d.weierstrass_rhs = qpoly({1, -2, 0, 1});
    d.alpha_prime = qpoly({-3, 6, -4, 1});
    d.beta = qpoly({-2, 1});
    d.m1 = {{-2, -1}, {1, 1}};
    d.m3 = {{1, -1}, {-1, 0}};
    d.alpha_inf_num = qpoly({-3, 6, -4, 1});
    d.alpha_inf_den = qpoly({1, -2, 0, 1});
    d.beta_inf_num = qpoly({0, 0, -2, 1});
    d.beta_inf_den = qpoly({1, -2, 0, 1});
    return d;
}

CheckReport fig8_coordinate_change_check(const Fig8Data& data)
{
    CheckReport rep{"fig8_coordinate_change", {}};
    // y = T(R - 2), z = R - 1.
    const BiPoly y = tvar() * (rvar() - rt(2));
    const BiPoly residue = reduce(y * y - at_r_minus_1(data.weierstrass_rhs), data.curve);
    rep.items.push_back(item("weierstrass_in_ideal", residue.is_zero(), "remainder " + to_string(residue)));

    const QPoly z = q_t();
    const QPoly partial = (z * z + z - QPoly::constant(1)) * (z - QPoly::constant(1));
    rep.items.push_back(item("partial_identity", partial == data.weierstrass_rhs,
                             "(z^2 + z - 1)(z - 1) = " + to_string(partial, "z")));
    return rep;
}

CheckReport fig8_hilbert_symbol_check(const Fig8Data& data)
{
    CheckReport rep{"fig8_hilbert_symbol", {}};
    const BiPoly r = rvar(), t = tvar();
    const BiPoly t2 = t * t;

    // tr[a,b] - 2 with tr a = tr b = T, tr ab = R.
    const BiPoly alpha = rt(2) * t2 + r * r - r * t2 - rt(4);
    const BiPoly trace_res = reduce(alpha - at_r_minus_1(data.beta), data.curve);
    rep.items.push_back(item("trace_identity", trace_res.is_zero(), "remainder " + to_string(trace_res)));

    const BiPoly alpha_prime = (t2 - rt(4)) * pow(r - rt(2), 2);
    const BiPoly ap_res = reduce(alpha_prime - at_r_minus_1(data.alpha_prime), data.curve);
    rep.items.push_back(item("alpha_prime_identity", ap_res.is_zero(), "remainder " + to_string(ap_res)));

    const bool beta_ok = r - rt(3) == at_r_minus_1(data.beta);
    rep.items.push_back(item("beta_identity", beta_ok, "R - 3 = " + to_string(data.beta, "z") + " at z = R - 1"));

    const Rational a0 = data.alpha_prime.coeff(0), b0 = data.beta.coeff(0);
    const bool nonzero = sgn(a0) != 0 && sgn(b0) != 0;
    rep.items.push_back(item("specialization", a0 == -3 && b0 == -2,
                             "(" + to_string(a0) + ", " + to_string(b0) + ") at z = 0"));
    if (nonzero) {
        const RamificationSet ram = ramification_set(a0, b0);
        const bool expected = ram.includes_real_place && ram.finite_primes == std::vector<Integer>{Integer(2)};
        std::string places = ram.includes_real_place ? "inf" : "";
        for (const Integer& p : ram.finite_primes)
            places += (places.empty() ? "" : ",") + to_string(p);
        rep.items.push_back(item("ramification", expected, "{" + places + "}"));
        rep.items.push_back(item("division_algebra", !ram.empty()));
    } else {
        rep.items.push_back(item("ramification", false, "zero specialization"));
    }
    return rep;
}

CheckReport fig8_qi_splitting_check(const Fig8Data& data)
{
    CheckReport rep{"fig8_qi_splitting", {}};
    const FieldPtr k = NumberField::create_unchecked(qi_modulus(), "i");
    const Poly<NFElement> m1 = qi_poly(k, data.m1), m3 = qi_poly(k, data.m3);
    const Poly<NFElement> ap = as_constants(k, data.alpha_prime), b = as_constants(k, data.beta);

    const Poly<NFElement> norm = m1 * m1 + ap - m3 * m3 * b;
    rep.items.push_back(item("reduced_norm_zero", norm.is_zero(), poly_string(norm)));

    // Same element read through the norm form m1^2 - a' m2^2 - b m3^2, m2 = i.
    const Poly<NFElement> m2 = Poly<NFElement>::constant(NFElement::generator(k));
    const Poly<NFElement> form = m1 * m1 - ap * m2 * m2 - b * m3 * m3;
    rep.items.push_back(item("norm_form_consistent", form == norm && form.is_zero(), poly_string(form)));
    return rep;
}

CheckReport fig8_ideal_point_check(const Fig8Data& data)
{
    CheckReport rep{"fig8_ideal_point", {}};
    // E = y^2 - (z^3 - 2z + 1) in (y, z), lex with y first.
    const BiPoly y = BiPoly::var(0, kY, kZ);
    const BiPoly e = y * y - lift(data.weierstrass_rhs, 1, kY, kZ);
    const BiPoly z = BiPoly::var(1, kY, kZ);
    auto l = [](const QPoly& p) { return lift(p, 1, kY, kZ); };

    // alpha_inf = alpha' / y^2 and beta_inf = z^2 beta / y^2, cross-multiplied.
    const BiPoly a_res = reduce(l(data.alpha_inf_num) * y * y - l(data.alpha_prime) * l(data.alpha_inf_den), e);
    rep.items.push_back(item("alpha_inf_identity", a_res.is_zero(), "remainder " + to_string(a_res)));
    const BiPoly b_res = reduce(l(data.beta_inf_num) * y * y - z * z * l(data.beta) * l(data.beta_inf_den), e);
    rep.items.push_back(item("beta_inf_identity", b_res.is_zero(), "remainder " + to_string(b_res)));

    const auto av = value_at_infinity(data.alpha_inf_num, data.alpha_inf_den);
    const auto bv = value_at_infinity(data.beta_inf_num, data.beta_inf_den);
    rep.items.push_back(item("alpha_inf_at_infinity", av && *av == 1, av ? to_string(*av) : "pole"));
    rep.items.push_back(item("beta_inf_at_infinity", bv && *bv == 1, bv ? to_string(*bv) : "pole"));
    if (av && bv && sgn(*av) != 0 && sgn(*bv) != 0) {
        const RamificationSet ram = ramification_set(*av, *bv);
        rep.items.push_back(item("specialized_splits", ram.empty()));
    } else {
        rep.items.push_back(item("specialized_splits", false, "specialization not a unit"));
    }
    return rep;
}

Representation representation_from_traces(const Rational& p, const Rational& q, const Rational& r)
{
    const FieldPtr base = NumberField::rationals();
    const QuadraticExtension e1 = adjoin_sqrt(base, NFElement(base, QPoly::constant(p * p - 4)));
    const NFElement half(Rational(1, 2));
    const NFElement x1 = (NFElement(e1.field, QPoly::constant(p)) + e1.sqrt_element) * half;
    const QuadraticExtension e2 = adjoin_sqrt(e1.field, NFElement(e1.field, QPoly::constant(q * q - 4)));

    Representation rep;
    rep.field = e2.field;
    rep.x = e2.embed(x1);
    rep.y = (NFElement(rep.field, QPoly::constant(q)) + e2.sqrt_element) * half;
    const NFElement xy = rep.x * rep.y;
    rep.r = NFElement(rep.field, QPoly::constant(r)) - xy - inverse(xy);
    if (is_zero(rep.r))
        throw std::domain_error("representation_from_traces: r = 0, the character is reducible");
    const NFElement one(rep.field, QPoly::constant(1)), zero(rep.field, QPoly());
    rep.a = Mat2{rep.x, one, zero, inverse(rep.x)};
    rep.b = Mat2{rep.y, zero, rep.r, inverse(rep.y)};
    return rep;
}

PresentationSpec fig8_presentation()
{
    // w a w^-1 b^-1 with w = a^-1 b a b^-1.
    return {"ab", {"AbaBabABaB"}};
}

PresentationSpec pretzel7_presentation() { return {"ab", {"aaBaabbabb"}}; }

CurveChart fig8_chart()
{
    return {fig8_curve(), "fig8 (R, T)", [](const Rational& r, const Rational& t) { return Traces{t, t, r}; }};
}

CurveChart pretzel7_chart(bool sign_corrected)
{
    // R Q^2 (Q^2 - 1) -+ (1 - 2 Q^2)
    const BiPoly q = BiPoly::var(0, "Q", "R"), r = BiPoly::var(1, "Q", "R");
    const BiPoly q2 = q * q, one(Rational(1), "Q", "R");
    const BiPoly num = one - BiPoly(Rational(2), "Q", "R") * q2;
    const BiPoly poly = sign_corrected ? r * q2 * (q2 - one) + num : r * q2 * (q2 - one) - num;
    return {poly, sign_corrected ? "pretzel7 (Q, R), sign-corrected R" : "pretzel7 (Q, R)",
            [](const Rational& qv, const Rational& rv) {
                const Rational d = qv * qv - 1;
                if (sgn(d) == 0)
                    throw std::invalid_argument("pretzel7 chart: Q = +-1 is outside the parametrization");
                return Traces{qv / d, qv, rv};
            }};
}

std::pair<Rational, Rational> pretzel7_sample(const Rational& q, bool sign_corrected)
{
    const Rational q2 = q * q;
    if (sgn(q) == 0 || q2 == 1)
        throw std::invalid_argument("pretzel7_sample: Q must avoid 0 and +-1");
    const Rational r = (1 - 2 * q2) / (q2 * (q2 - 1));
    return {q, sign_corrected ? Rational(-r) : r};
}

std::vector<std::pair<Rational, Rational>> fig8_samples()
{
    // Torsion points (y, z) = (+-1, 0); z = 1 would need R = 2, outside the chart.
    return {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
}

ComponentPointResult verify_component_point(const CurveChart& curve, const PresentationSpec& presentation,
                                            const std::pair<Rational, Rational>& sample)
{
    if (curve.polynomial.is_zero())
        throw std::invalid_argument("verify_component_point: zero chart polynomial");
    if (presentation.relators.empty())
        throw std::invalid_argument("verify_component_point: no relators");
    if (!curve.traces)
        throw std::invalid_argument("verify_component_point: chart " + curve.label + " has no trace map");
    if (sgn(curve.polynomial.evaluate(sample.first, sample.second)) != 0)
        throw std::invalid_argument("verify_component_point: (" + to_string(sample.first) + ", " +
                                    to_string(sample.second) + ") is not on " + curve.label);

    ComponentPointResult res;
    res.traces = curve.traces(sample.first, sample.second);
    const Representation rep = representation_from_traces(res.traces.p, res.traces.q, res.traces.r);
    res.field = rep.field;

    auto attempt = [&](const Mat2& a, std::vector<std::pair<std::string, bool>>& out, bool& any_minus) {
        const std::map<char, Mat2> assignment{{presentation.generators.at(0), a},
                                              {presentation.generators.at(1), rep.b}};
        bool all = true;
        for (const std::string& w : presentation.relators) {
            const Mat2 v = mat2_word_eval(assignment, w);
            const bool ok = v.is_identity();
            any_minus = any_minus || v.is_minus_identity();
            if (!ok && res.residual.empty())
                res.residual = w + " -> " + to_string(v);
            out.emplace_back(w, ok);
            all = all && ok;
        }
        return all;
    };

    bool minus = false;
    res.passed = attempt(rep.a, res.relators, minus);
    if (!res.passed && minus) {
        std::vector<std::pair<std::string, bool>> flipped;
        const std::string first_residual = res.residual;
        res.residual.clear();
        bool ignored = false;
        if (attempt(-rep.a, flipped, ignored)) {
            res.relators = std::move(flipped);
            res.sign_flipped = true;
            res.passed = true;
        } else {
            res.residual = first_residual;
        }
    }
    return res;
}

CurveChart m137_data()
{
    // (-2 - 3s + s^2) t^4 + (4 + 4s - s^2 - s^3) t^2 - 1
    auto m = [](long c, int i, int j) { return BiPoly::monomial(Rational(c), i, j, "s", "t"); };
    BiPoly p = m(-2, 0, 4) + m(-3, 1, 4) + m(1, 2, 4) + m(4, 0, 2) + m(4, 1, 2) + m(-1, 2, 2) + m(-1, 3, 2) + m(-1, 0, 0);
    return {p, "m137 (s, t)", nullptr};
}

std::vector<CheckReport> fig8_casebook()
{
    std::vector<CheckReport> out{fig8_coordinate_change_check(), fig8_hilbert_symbol_check(),
                                 fig8_qi_splitting_check(), fig8_ideal_point_check()};
    CheckReport points{"fig8_component_points", {}};
    for (const auto& s : fig8_samples()) {
        const auto res = verify_component_point(fig8_chart(), fig8_presentation(), s);
        points.items.push_back(item("(T,R) = (" + to_string(s.second) + ", " + to_string(s.first) + ")", res.passed,
                                    res.sign_flipped ? "after sign flip" : res.residual));
    }
    out.push_back(points);
    return out;
}

std::vector<CheckReport> pretzel7_casebook()
{
    auto sweep = [](const std::string& name, bool corrected) {
        CheckReport points{name, {}};
        for (const Rational& q : {Rational(2), Rational(3), Rational(4), Rational(5), Rational(1, 2)}) {
            const auto res = verify_component_point(pretzel7_chart(corrected), pretzel7_presentation(),
                                                    pretzel7_sample(q, corrected));
            points.items.push_back(item("Q = " + to_string(q), res.passed,
                                        "P = " + to_string(res.traces.p) + ", R = " + to_string(res.traces.r) +
                                            (res.sign_flipped ? ", after sign flip" : "") +
                                            (res.residual.empty() ? "" : ", " + res.residual)));
        }
        return points;
    };
    CheckReport points = sweep("pretzel7_component_points", false);
    CheckReport corrected = sweep("pretzel7_component_points_sign_corrected", true);
    CheckReport alex{"pretzel7_alexander", {}};
    const ExactPoly delta(pretzel237_alexander(7));
    alex.items.push_back(item("lehmer_relation", pretzel237_alexander(7) == negate_variable(lehmer_polynomial())));
    alex.items.push_back(item("unit_circle_root", has_root_on_unit_circle(delta).excluding_pm1));
    alex.items.push_back(item("star_fails", classify(delta).verdict == Verdict::Negative));
    alex.items.push_back(item("os_form", os_lspace_form(delta)));
    return {points, corrected, alex};
}

std::vector<CheckReport> m137_casebook()
{
    CheckReport rep{"m137", {}};
    const CurveChart c = m137_data();
    const BiPoly& p = c.polynomial;
    const bool coeffs = p.coeff(0, 4) == -2 && p.coeff(1, 4) == -3 && p.coeff(2, 4) == 1 && p.coeff(0, 2) == 4 &&
                        p.coeff(1, 2) == 4 && p.coeff(2, 2) == -1 && p.coeff(3, 2) == -1 && p.coeff(0, 0) == -1 &&
                        p.terms().size() == 8;
    rep.items.push_back(item("stored_coefficients", coeffs, to_string(p)));
    const Rational v = p.evaluate(0, 1);
    rep.items.push_back(item("value_at_(0,1)", v == 1, to_string(v)));
    rep.items.push_back(item("trivial_alexander_positive", classify(ExactPoly(qpoly({1}))).verdict == Verdict::Positive));
    return {rep};
}

} // namespace azk
