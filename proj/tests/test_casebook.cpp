#include <doctest.h>

#include "azk/casebook/casebook.hpp"

using namespace azk;

namespace {

void check_traces(const Representation& rep, const Rational& p, const Rational& q, const Rational& r)
{
    CHECK(rep.a.trace() == NFElement(p));
    CHECK(rep.b.trace() == NFElement(q));
    CHECK((rep.a * rep.b).trace() == NFElement(r));
    CHECK(rep.a.det() == NFElement(1));
    CHECK(rep.b.det() == NFElement(1));
    const Mat2 comm = rep.a * rep.b * inverse(rep.a) * inverse(rep.b);
    CHECK(comm.trace() == NFElement(p * p + q * q + r * r - p * q * r - 2));
}

} // namespace

TEST_CASE("bivariate reduction decides membership in a principal ideal")
{
    const BiPoly f = fig8_curve();
    const BiPoly r = BiPoly::var(0, "R", "T"), t = BiPoly::var(1, "R", "T");
    CHECK(in_ideal(f * (r * t + BiPoly(Rational(3), "R", "T")), f));
    CHECK_FALSE(in_ideal(r, f));
    CHECK_FALSE(reduce(f + BiPoly(Rational(1), "R", "T"), f).is_zero());
    CHECK(reduce(pow(r, 2), f) == r + BiPoly(Rational(1), "R", "T") + (r - BiPoly(Rational(2), "R", "T")) * t * t);
    CHECK_THROWS_AS(reduce(r, BiPoly()), std::invalid_argument);
    CHECK(f.evaluate(1, 1) == 0);
    CHECK(f.evaluate(2, 1) != 0);
}

TEST_CASE("figure-eight checks pass on the stored data")
{
    for (const CheckReport& rep : fig8_casebook()) {
        INFO(rep.name);
        for (const CheckItem& i : rep.items) {
            INFO(i.name << ": " << i.detail);
            CHECK(i.passed);
        }
    }
}

TEST_CASE("figure-eight negative controls")
{
    Fig8Data d = Fig8Data::standard();

    Fig8Data perturbed_curve = d;
    perturbed_curve.curve = d.curve + BiPoly(Rational(1), "R", "T");
    CHECK_FALSE(fig8_coordinate_change_check(perturbed_curve).passed());
    CHECK_FALSE(fig8_hilbert_symbol_check(perturbed_curve).passed());

    Fig8Data rhs = d;
    rhs.weierstrass_rhs.set_coeff(1, -3);
    CHECK_FALSE(fig8_coordinate_change_check(rhs).passed());
    CHECK_FALSE(fig8_ideal_point_check(rhs).passed());

    Fig8Data ap = d;
    ap.alpha_prime.set_coeff(2, -5);
    CHECK_FALSE(fig8_hilbert_symbol_check(ap).passed());
    CHECK_FALSE(fig8_qi_splitting_check(ap).passed());

    Fig8Data m1 = d;
    m1.m1[0].first += 1;
    auto split = fig8_qi_splitting_check(m1);
    CHECK_FALSE(split.passed());
    CHECK_FALSE(split.items[0].passed);

    Fig8Data m3 = d;
    m3.m3[1].second = 1;
    CHECK_FALSE(fig8_qi_splitting_check(m3).passed());

    Fig8Data lead = d;
    lead.alpha_inf_num.set_coeff(3, 2);
    auto ip = fig8_ideal_point_check(lead);
    CHECK_FALSE(ip.passed());

    Fig8Data aden = d;
    aden.alpha_inf_den.set_coeff(0, 2);
    CHECK_FALSE(fig8_ideal_point_check(aden).passed());

    Fig8Data bnum = d;
    bnum.beta_inf_num.set_coeff(0, 1);
    CHECK_FALSE(fig8_ideal_point_check(bnum).passed());

    Fig8Data beta = d;
    beta.beta.set_coeff(0, -3);
    CHECK_FALSE(fig8_hilbert_symbol_check(beta).passed());
}

TEST_CASE("figure-eight specialization at z = 0")
{
    const RamificationSet ram = ramification_set(Rational(-3), Rational(-2));
    CHECK(ram.includes_real_place);
    CHECK(ram.finite_primes == std::vector<Integer>{Integer(2)});
}

TEST_CASE("representations from traces reproduce the traces")
{
    check_traces(representation_from_traces(1, 1, 1), 1, 1, 1);
    check_traces(representation_from_traces(Rational(3, 8), 3, Rational(-17, 72)), Rational(3, 8), 3,
                 Rational(-17, 72));
    // P^2 - 4 a square: the first extension splits.
    auto split = representation_from_traces(Rational(5, 2), 3, 7);
    check_traces(split, Rational(5, 2), 3, 7);
    CHECK(split.field->degree() == 2);
    for (long p = -3; p <= 3; ++p)
        for (long q = -2; q <= 2; ++q) {
            Rational r(2 * p - q + 1, 3);
            r.canonicalize();
            try {
                check_traces(representation_from_traces(p, q, r), p, q, r);
            } catch (const std::domain_error&) {
                // r = 0: the commutator trace is 2.
                CHECK(Rational(p * p + q * q) + r * r - p * q * r - 2 == 2);
            }
        }
}

TEST_CASE("reducible characters are rejected")
{
    // tr[A,B] = 2 at (P, Q, R) = (3, 3, 7): x y + 1/(x y) = R.
    CHECK_THROWS_AS(representation_from_traces(3, 3, 7), std::domain_error);
    CHECK_THROWS_AS(representation_from_traces(2, 2, 2), std::domain_error);
}

TEST_CASE("figure-eight component points")
{
    for (const auto& s : fig8_samples()) {
        auto res = verify_component_point(fig8_chart(), fig8_presentation(), s);
        CHECK(res.passed);
    }
    CHECK_THROWS_AS(verify_component_point(fig8_chart(), fig8_presentation(), {Rational(2), Rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_component_point(fig8_chart(), PresentationSpec{"ab", {}}, fig8_samples()[0]),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_component_point(m137_data(), fig8_presentation(), {Rational(0), Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("pretzel component points")
{
    auto s = pretzel7_sample(3);
    CHECK(s.second == Rational(-17, 72));
    CHECK(pretzel7_sample(3, true).second == Rational(17, 72));
    for (const Rational& q : {Rational(2), Rational(3), Rational(4), Rational(-5), Rational(1, 2), Rational(7, 3)}) {
        // The stored R has the opposite sign to the component cut out by the relator.
        auto stored = verify_component_point(pretzel7_chart(), pretzel7_presentation(), pretzel7_sample(q));
        CHECK_FALSE(stored.passed);
        CHECK_FALSE(stored.residual.empty());
        auto res =
            verify_component_point(pretzel7_chart(true), pretzel7_presentation(), pretzel7_sample(q, true));
        INFO("Q = " << to_string(q) << " " << res.residual);
        CHECK(res.passed);
        CHECK(res.traces.p == q / (q * q - 1));
    }
    CHECK_THROWS_AS(
        verify_component_point(pretzel7_chart(true), pretzel7_presentation(), pretzel7_sample(3)),
        std::invalid_argument);
    // A point off the parametrized curve.
    CHECK_THROWS_AS(verify_component_point(pretzel7_chart(), pretzel7_presentation(), {Rational(3), Rational(1)}),
                    std::invalid_argument);
    // On the fig8 chart but checked against the wrong relator.
    auto wrong = verify_component_point(fig8_chart(), pretzel7_presentation(), fig8_samples()[0]);
    CHECK_FALSE(wrong.passed);
    CHECK_FALSE(wrong.residual.empty());
    CHECK_THROWS_AS(pretzel7_sample(1), std::invalid_argument);
}

TEST_CASE("m137 data")
{
    for (const CheckReport& rep : m137_casebook())
        CHECK(rep.passed());
    CHECK(m137_data().polynomial.evaluate(0, 1) == 1);
}

TEST_CASE("pretzel casebook")
{
    auto reps = pretzel7_casebook();
    REQUIRE(reps.size() == 3);
    CHECK_FALSE(reps[0].passed());
    CHECK(reps[1].passed());
    CHECK(reps[2].passed());
}
