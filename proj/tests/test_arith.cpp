#include <doctest.h>

#include <random>

#include "azk/arith/factor.hpp"
#include "azk/arith/number_field.hpp"
#include "azk/arith/sturm.hpp"
#include "oracles.hpp"

using namespace azk;

TEST_CASE("integer factorization and valuations")
{
    auto f = factor_integer(Integer("600851475143"));
    REQUIRE(f.size() == 4);
    CHECK(f[0].first == 71);
    CHECK(f[3].first == 6857);
    // Semiprime beyond trial division.
    auto g = factor_integer(Integer(1000003) * Integer(1000033));
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == 1000003);
    CHECK(valuation(Rational(-24, 5), Integer(2)) == 3);
    CHECK(valuation(Rational(-24, 5), Integer(5)) == -1);
    CHECK_THROWS_AS(valuation(Integer(0), Integer(3)), std::domain_error);
    CHECK(legendre(Integer(2), Integer(7)) == 1);
    CHECK(legendre(Integer(3), Integer(7)) == -1);
    CHECK(*rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK_FALSE(rational_sqrt(Rational(2)));
    CHECK_FALSE(rational_sqrt(Rational(-4)));
}

TEST_CASE("resultant sign convention against the Sylvester determinant")
{
    const QPoly a = qpoly({-2, 1}), b = qpoly({-3, 1});
    CHECK(resultant(a, b) == 1);
    CHECK(resultant(b, a) == -1);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly p = oracle::random_qpoly(rng, 1 + trial % 4, 5);
        QPoly q = oracle::random_qpoly(rng, 1 + trial % 3, 5);
        CHECK(resultant(p, q) == oracle::sylvester(q, p));
    }
}

TEST_CASE("discriminant of quadratics and cubics")
{
    CHECK(discriminant(qpoly({1, -3, 1})) == 5);
    CHECK(discriminant(qpoly({2, 0, 3})) == -24);
    // t^3 + p t + q  ->  -4p^3 - 27q^2
    CHECK(discriminant(qpoly({1, -2, 0, 1})) == Rational(-4 * -8 - 27));
    CHECK(discriminant(qpoly({-1, 1}) * qpoly({-1, 1})) == 0);
}

TEST_CASE("square-free decomposition reassembles")
{
    QPoly p = pow(qpoly({1, 1}), 3) * pow(qpoly({-2, 0, 1}), 2) * qpoly({5, 3});
    auto parts = squarefree_decomposition(p);
    QPoly prod = QPoly::constant(p.leading());
    for (auto& [f, k] : parts)
        prod = prod * pow(f, static_cast<unsigned>(k));
    CHECK(prod == p);
    CHECK_FALSE(is_squarefree(p));
    CHECK(squarefree_part(p).degree() == 4);
}

TEST_CASE("factorization over F_p: product and irreducibility by brute force")
{
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        for (int trial = 0; trial < 20; ++trial) {
            QPoly q = oracle::random_qpoly(rng, 1 + trial % 5, 6);
            FpPoly f = reduce_mod(q, p);
            if (f.degree() < 1)
                continue;
            auto fac = factor_fp(f);
            FpPoly prod = FpPoly::constant(f.leading());
            for (auto& [g, k] : fac) {
                prod = prod * pow(g, static_cast<unsigned>(k));
                // Any factor of degree <= 5 that is reducible has a monic
                // divisor of degree 1 or 2.
                for (std::uint64_t a = 0; a < p; ++a) {
                    FpPoly lin({Zp(static_cast<long>(a), p), Zp(1, p)});
                    if (g.degree() > 1)
                        CHECK_FALSE(divides(lin, g));
                    for (std::uint64_t b = 0; b < p; ++b) {
                        FpPoly quad({Zp(static_cast<long>(b), p), Zp(static_cast<long>(a), p), Zp(1, p)});
                        if (g.degree() > 2)
                            CHECK_FALSE(divides(quad, g));
                    }
                }
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("factor_mod_l rejects bad input")
{
    CHECK_THROWS_AS(factor_mod_l(qpoly({1, 1}), 4), std::invalid_argument);
    CHECK_THROWS_AS(factor_mod_l(qpoly({3, 3}), 3), std::invalid_argument);
    CHECK_THROWS_AS(factor_mod_l(QPoly({Rational(1, 3), Rational(1)}), 3), std::invalid_argument);
}

TEST_CASE("factorization over Q recovers cyclotomic pieces")
{
    for (int n : {6, 12, 15, 30}) {
        QPoly f = QPoly::monomial(Rational(1), static_cast<std::size_t>(n)) - QPoly::constant(Rational(1));
        auto fac = factor_over_Q(f);
        int divisors = 0;
        for (int d = 1; d <= n; ++d)
            divisors += n % d == 0;
        CHECK(static_cast<int>(fac.factors.size()) == divisors);
        for (auto& [g, k] : fac.factors) {
            CHECK(k == 1);
            bool found = false;
            for (int d = 1; d <= n; ++d)
                if (n % d == 0 && g == oracle::cyclotomic(d))
                    found = true;
            CHECK(found);
        }
        CHECK(fac.expand() == f);
    }
}

TEST_CASE("factorization over Q: hard irreducibles")
{
    // Swinnerton-Dyer: reducible modulo every prime.
    CHECK(is_irreducible_q(qpoly({1, 0, -10, 0, 1})));
    // Lehmer's polynomial.
    CHECK(is_irreducible_q(qpoly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})));
    CHECK_FALSE(is_irreducible_q(qpoly({-1, 0, 0, 0, 1})));
}

TEST_CASE("factorization over Q: random products round-trip")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        QPoly a = oracle::random_qpoly(rng, 1 + trial % 3, 9);
        QPoly b = oracle::random_qpoly(rng, 2 + trial % 4, 9);
        QPoly c = oracle::random_qpoly(rng, 1, 4);
        QPoly f = a * b * c * c * Rational(3, 7);
        auto fac = factor_over_Q(f);
        CHECK(fac.expand() == f);
        std::size_t total = 0;
        for (auto& [g, k] : fac.factors) {
            CHECK(g.leading() > 0);
            total += static_cast<std::size_t>(k) * static_cast<std::size_t>(g.degree());
        }
        CHECK(static_cast<int>(total) == f.degree());
    }
}

TEST_CASE("factorization is deterministic under a fixed seed")
{
    QPoly f = qpoly({1, 0, -10, 0, 1}) * qpoly({2, -1, 0, 0, 1});
    auto a = factor_over_Q(f, {1}), b = factor_over_Q(f, {99});
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        CHECK(a.factors[i].first == b.factors[i].first);
}

TEST_CASE("Sturm counts")
{
    QPoly p = qpoly({-1, 1}) * qpoly({-2, 1}) * qpoly({3, 1}) * qpoly({1, 0, 1});
    CHECK(sturm_count(p, std::nullopt, std::nullopt) == 3);
    CHECK(sturm_count(p, Rational(0), Rational(2)) == 2);
    CHECK(sturm_count(p, Rational(1), Rational(2)) == 1);  // half-open (1, 2]
    CHECK(sturm_count(p, Rational(-10), Rational(0)) == 1);
    CHECK_THROWS_AS(sturm_count(p * qpoly({-1, 1}), std::nullopt, std::nullopt), std::invalid_argument);
    CHECK(count_distinct_real_roots(p * qpoly({-1, 1})) == 3);
    CHECK_THROWS_AS(sturm_count(p, Rational(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("charpoly and solve")
{
    Matrix<Rational> m(3, 3);
    int v = 1;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m(i, j) = (v++ * 7) % 5;
    QPoly cp = charpoly(m);
    // Cayley-Hamilton through the determinant: cp(0) = -det(m) for 3x3.
    std::vector<std::vector<Rational>> rows(3, std::vector<Rational>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            rows[i][j] = m(i, j);
    CHECK(cp[0] == -oracle::determinant(rows));
    Matrix<Rational> sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 2;
    sing(1, 0) = 2;
    sing(1, 1) = 4;
    CHECK_FALSE(solve(sing, {Rational(1), Rational(1)}));
    CHECK(solve(sing, {Rational(1), Rational(2)}));
}

TEST_CASE("number field arithmetic and square roots")
{
    auto qi = NumberField::create(qpoly({1, 0, 1}), "i");
    NFElement i = NFElement::generator(qi);
    CHECK(i * i == NFElement(-1L).with_field(qi));
    CHECK(inverse(i) == -i);
    auto r = nf_is_square(i * 2L, qi);
    REQUIRE(r.is_square);
    CHECK(*r.root * *r.root == i * 2L);
    CHECK_FALSE(nf_is_square(NFElement(3L).with_field(qi), qi).is_square);
    CHECK(nf_is_square(NFElement(-4L).with_field(qi), qi).is_square);
    CHECK_THROWS_AS(NumberField::create(qpoly({-1, 0, 1})), std::invalid_argument);

    auto q2 = NumberField::create(qpoly({-2, 0, 1}));
    CHECK_FALSE(nf_is_square(NFElement(3L).with_field(q2), q2).is_square);
    CHECK_THROWS_AS(NFElement::generator(q2) + i, std::invalid_argument);
}

TEST_CASE("square detection is sound on random squares")
{
    // Cubic field: a negated nonzero square has negative norm, so it can
    // never be a square.
    auto k = NumberField::create(qpoly({-1, -1, 0, 1}));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        NFElement e(k, oracle::random_qpoly(rng, 2, 4));
        if (is_zero(e))
            continue;
        auto r = nf_is_square(e * e, k);
        REQUIRE(r.is_square);
        CHECK((*r.root == e || *r.root == -e));
        CHECK_FALSE(nf_is_square(-(e * e), k).is_square);
    }
}

TEST_CASE("adjoin_sqrt presents a primitive element")
{
    auto q2 = NumberField::create(qpoly({-2, 0, 1}), "a");
    auto ext = adjoin_sqrt(q2, NFElement(3L));
    CHECK_FALSE(ext.split);
    CHECK(ext.field->degree() == 4);
    CHECK(ext.sqrt_element * ext.sqrt_element == NFElement(3L).with_field(ext.field));
    CHECK(ext.old_generator * ext.old_generator == NFElement(2L).with_field(ext.field));
    auto same = adjoin_sqrt(q2, NFElement(8L));
    CHECK(same.split);
    CHECK(same.field->degree() == 2);
}
