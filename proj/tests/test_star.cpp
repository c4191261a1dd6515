#include <doctest.h>

#include <random>

#include "azk/arith/factor.hpp"
#include "azk/knots/knots.hpp"
#include "azk/star/star.hpp"
#include "oracles.hpp"

using namespace azk;

TEST_CASE("trivial polynomial is positive with no records")
{
    auto r = star_check(ExactPoly(qpoly({1})));
    CHECK(r.verdict == Verdict::Positive);
    CHECK(r.records.empty());
    CHECK_THROWS_AS(star_check(ExactPoly()), std::invalid_argument);
}

TEST_CASE("figure-eight: both square-root factors have quadratic trace fields")
{
    auto r = star_check(ExactPoly(qpoly({1, -3, 1})));
    CHECK(r.verdict == Verdict::Positive);
    REQUIRE(r.records.size() == 2);
    CHECK(r.records[0].factor == qpoly({-1, -1, 1}));
    CHECK(r.records[1].factor == qpoly({-1, 1, 1}));
    for (const auto& rec : r.records) {
        CHECK(rec.holds);
        // w + 1/w = +-sqrt(5)
        CHECK(rec.trace_minpoly == qpoly({-5, 0, 1}));
    }
    CHECK(r.all_roots_simple);
}

TEST_CASE("negative examples carry witnesses")
{
    auto phi5 = star_check(ExactPoly(cyclotomic(5)));
    CHECK(phi5.verdict == Verdict::Negative);
    CHECK_FALSE(phi5.witnesses.empty());
    for (const auto& w : phi5.witnesses)
        CHECK(2 * w.deg_theta == w.deg_w);
    CHECK(classify(ExactPoly(qpoly({2, -3, 2}))).verdict == Verdict::Negative);
}

TEST_CASE("repeated roots are flagged but do not change the verdict")
{
    QPoly f = qpoly({1, -3, 1});
    auto r = star_check(ExactPoly(f * f));
    CHECK(r.verdict == Verdict::Positive);
    CHECK_FALSE(r.all_roots_simple);
    CHECK(r.records.size() == 2);
}

TEST_CASE("record degrees are deg_w or half of it")
{
    for (long m = 1; m <= 12; ++m)
        for (const auto& rec : star_check(ExactPoly(twist_alexander(m))).records)
            CHECK((rec.deg_theta == rec.deg_w || 2 * rec.deg_theta == rec.deg_w));
}

TEST_CASE("(*_l) for the figure-eight")
{
    const ExactPoly d(qpoly({1, -3, 1}));
    auto two = star_ell_check(d, 2);
    CHECK_FALSE(two.holds);
    REQUIRE(two.factors.size() == 1);
    CHECK(two.factors[0].deg_w == 2);
    CHECK(two.factors[0].deg_theta == 1);
    CHECK(star_ell_check(d, 5).holds);
    CHECK(star_ell_check(d, 7).holds);
    CHECK_THROWS_AS(star_ell_check(d, 9), std::invalid_argument);
    CHECK_THROWS_AS(star_ell_check(ExactPoly(qpoly({3, 6, 3})), 3), std::invalid_argument);
}

TEST_CASE("a root at zero modulo l is a failure")
{
    // 3 divides the constant term: t is a factor mod 3.
    auto r = star_ell_check(ExactPoly(qpoly({3, -1, 1})), 3);
    CHECK_FALSE(r.holds);
    bool saw_zero = false;
    for (const auto& f : r.factors)
        saw_zero = saw_zero || f.zero_root;
    CHECK(saw_zero);
}

TEST_CASE("characteristic 2: D(t^2) factors as the squares of the factors of D")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        QPoly d = oracle::random_qpoly(rng, 1 + trial % 8, 5);
        FpPoly f = reduce_mod(d, 2);
        if (f.degree() < 1)
            continue;
        auto base = factor_fp(f);
        auto inflated = factor_fp(reduce_mod(inflate(d, 2), 2));
        REQUIRE(base.size() == inflated.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(base[i].first == inflated[i].first);
            CHECK(2 * base[i].second == inflated[i].second);
        }
    }
}

TEST_CASE("unit invariance of the verdict")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> shift(-6, 6);
    for (long m = 1; m <= 20; ++m) {
        QPoly p = twist_alexander(m);
        Verdict v = star_check(ExactPoly(p)).verdict;
        CHECK(star_check(ExactPoly(-p, shift(rng))).verdict == v);
        CHECK(star_check(ExactPoly(reverse(p * qpoly({0, 0, 1})))).verdict == v);
    }
}

TEST_CASE("bad primes")
{
    auto fig8 = bad_primes(ExactPoly(qpoly({1, -3, 1})), 200);
    CHECK(fig8.failing == std::vector<long>{2});
    CHECK(fig8.candidates.count(5));
    CHECK(fig8.candidates.at(2).count("always-2"));
    CHECK(fig8.uncovered.empty());

    auto trivial = bad_primes(ExactPoly(qpoly({1})));
    CHECK(trivial.failing.empty());

    CHECK_THROWS_AS(bad_primes(ExactPoly(cyclotomic(5))), AzumayaNegativeError);
    CHECK_THROWS_AS(bad_primes(ExactPoly(qpoly({1, -3, 1})), -1), std::invalid_argument);
}

TEST_CASE("bad primes of f_11: candidates agree with a direct scan")
{
    auto r = bad_primes(ExactPoly(fa_polynomial(11)), 500);
    CHECK(r.uncovered.empty());
    for (long q : r.failing)
        CHECK(r.candidates.count(q));
}
