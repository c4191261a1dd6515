#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "azk/cli/cli.hpp"

using namespace azk;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args)
{
    args.insert(args.begin(), "--json");
    Json j = Json::parse(run(args).out);
    j.erase("timing_ms");
    return j;
}

Json golden(const std::string& name)
{
    std::ifstream in(std::string(AZK_GOLDEN_DIR) + "/" + name);
    REQUIRE(in);
    return Json::parse(in);
}

} // namespace

TEST_CASE("parse_poly accepts the documented forms")
{
    const ExactPoly fig8(qpoly({1, -3, 1}));
    CHECK(parse_poly("t^2 - 3t + 1") == fig8);
    CHECK(parse_poly("  t^2-3*t+1 ") == fig8);
    CHECK(parse_poly("1 - 3 t + t ^ 2") == fig8);
    CHECK(parse_poly("t^-1 - 3 + t") == ExactPoly(qpoly({1, -3, 1}), -1));
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("t - t").is_zero());
    CHECK(parse_poly("-t") == ExactPoly(qpoly({0, -1})));
    CHECK(parse_poly("+2*t^3") == ExactPoly(qpoly({0, 0, 0, 2})));
    CHECK(parse_poly("t + t") == ExactPoly(qpoly({0, 2})));
    CHECK(parse_poly("x^2 + 1", "x") == ExactPoly(qpoly({1, 0, 1}), 0, "x"));
    CHECK(parse_poly("123456789012345678901234567890").coeff(0) ==
          Rational(Integer("123456789012345678901234567890")));
}

TEST_CASE("parse_poly reports errors with positions")
{
    auto position = [](const std::string& s) -> long {
        try {
            parse_poly(s);
        } catch (const PolyParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position("t^2 - 3/2t") == 6);
    CHECK(position("1.5t") == 0);
    CHECK(position("t^") == 2);
    CHECK(position("t t") == 2);
    CHECK(position("3*") == 2);
    CHECK(position("") == 0);
    CHECK(position("t + x") == 4);
    CHECK(position("t^x") == 2);
    CHECK_THROWS_AS(parse_poly("t^2", ""), std::invalid_argument);
}

TEST_CASE("printing then parsing is the identity on canonical text")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coef(-20, 20), len(1, 6), shift(-4, 4);
    for (int i = 0; i < 300; ++i) {
        std::map<long, Rational> terms;
        const int n = len(rng), s = shift(rng);
        for (int k = 0; k < n; ++k)
            terms[s + k] = coef(rng);
        const ExactPoly p = ExactPoly::from_terms(terms);
        const std::string text = print_poly(p);
        CHECK(parse_poly(text) == p);
        CHECK(print_poly(parse_poly(text)) == text);
    }
}

TEST_CASE("rational and rational-function arguments")
{
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("+1/-2") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    const RationalFunction f = parse_rational_function("(t^2 - 1)/(2t - 2)");
    CHECK(f.num() == QPoly({Rational(1, 2), Rational(1, 2)}));
    CHECK(f.den() == qpoly({1}));
    CHECK_THROWS_AS(parse_rational_function("t/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational_function("t^-1"), std::invalid_argument);
}

TEST_CASE("exit codes")
{
    CHECK(run({"star", "check", "t^2-3t+1"}).code == 0);
    CHECK(run({"star", "check", "t^4-t^3+t^2-t+1"}).code == 1);
    CHECK(run({"star", "check", "0"}).code == 2);
    CHECK(run({"star", "check", "t^2 - 3/2t"}).code == 2);
    CHECK(run({"star", "mod", "t^2-3t+1", "--prime", "5"}).code == 0);
    CHECK(run({"star", "mod", "t^2-3t+1", "--prime", "2"}).code == 1);
    CHECK(run({"star", "mod", "t^2-3t+1", "--prime", "9"}).code == 2);
    CHECK(run({"star", "mod", "t^2-3t+1"}).code == 2);
    CHECK(run({"star", "mod", "5t^2-10t+5", "--prime", "5"}).code == 2);
    CHECK(run({"star", "bad-primes", "t^2-3t+1"}).code == 0);
    CHECK(run({"star", "bad-primes", "t^4-t^3+t^2-t+1"}).code == 1);
    CHECK(run({"star", "bad-primes", "t^2-3t+1", "--scan", "-5"}).code == 2);
    CHECK(run({"knot", "classify", "--family", "twist", "--param", "6"}).code == 1);
    CHECK(run({"knot", "classify", "--family", "twist", "--param", "2"}).code == 0);
    CHECK(run({"knot", "classify", "--family", "f8"}).code == 0);
    CHECK(run({"knot", "classify", "--poly", "t^2-3t+1"}).code == 0);
    CHECK(run({"knot", "classify"}).code == 2);
    CHECK(run({"knot", "classify", "--family", "twist"}).code == 2);
    CHECK(run({"knot", "classify", "--family", "torus", "--param", "3"}).code == 2);
    CHECK(run({"knot", "classify", "--family", "twist", "--param", "2", "--poly", "t"}).code == 2);
    CHECK(run({"quat", "ramify", "--a", "-3", "--b", "-2"}).code == 0);
    CHECK(run({"quat", "ramify", "--a", "0", "--b", "-2"}).code == 2);
    CHECK(run({"quat", "ramify", "--a", "1/2"}).code == 2);
    CHECK(run({"quat", "tame", "--alpha", "1+4t", "--beta", "t", "--place", "inf"}).code == 0);
    CHECK(run({"quat", "tame", "--alpha", "t", "--beta", "t", "--place", "t^2-1"}).code == 2);
    CHECK(run({"casebook", "fig8"}).code == 0);
    CHECK(run({"casebook", "m137"}).code == 0);
    CHECK(run({"casebook", "pretzel7"}).code == 1);
    CHECK(run({"casebook", "trefoil"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);

    const Run unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("unknown subcommand 'frobnicate'") != std::string::npos);
    CHECK(unknown.err.find("Usage") != std::string::npos);
}

TEST_CASE("leading minus signs pass after a separator")
{
    const Run r = run({"--json", "star", "check", "--", "-t^2+3t-1"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["normalized"] == "t^2 - 3t + 1");
}

TEST_CASE("--json may follow the subcommand")
{
    const Run r = run({"quat", "ramify", "--a", "-3", "--b", "-2", "--json"});
    CHECK(Json::parse(r.out)["real"] == true);
}

TEST_CASE("JSON reports match the golden files")
{
    CHECK(run_json({"star", "check", "t^2-3t+1"}) == golden("star_check_fig8.json"));
    CHECK(run_json({"star", "bad-primes", "t^2-3t+1", "--scan", "1000"}) == golden("star_bad_primes_fig8.json"));
    CHECK(run_json({"star", "mod", "t^2-3t+1", "--prime", "2"}) == golden("star_mod_fig8_2.json"));
    CHECK(run_json({"knot", "classify", "--family", "twist", "--param", "6"}) == golden("knot_classify_twist6.json"));
    CHECK(run_json({"quat", "ramify", "--a", "-3", "--b", "-2"}) == golden("quat_ramify.json"));
    CHECK(run_json({"casebook", "m137"}) == golden("casebook_m137.json"));
}

TEST_CASE("JSON reports carry the documented fields")
{
    const Json bp = run_json({"star", "bad-primes", "t^2-3t+1", "--scan", "1000"});
    CHECK(bp["schema"] == 1);
    CHECK(bp["verdict"] == "positive");
    CHECK(bp["bad_primes"] == Json::array({2}));
    CHECK(bp["uncovered"].empty());

    const Json q = run_json({"quat", "ramify", "--a", "-3", "--b", "-2"});
    CHECK(q["real"] == true);
    CHECK(q["finite"] == Json::array({2}));

    // Every report re-parses and keeps its key order.
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"star", "check", "t^2-3t+1"}, {"casebook", "fig8"}, {"knot", "classify", "--family", "fa", "--param", "7"}}) {
        const Json j = run_json(args);
        CHECK(Json::parse(j.dump()) == j);
        CHECK(j.begin().key() == "schema");
        CHECK(std::next(j.begin()).key() == "command");
    }

    // Large coefficients stay exact strings.
    const Json big = run_json({"star", "check", "123456789012345678901t^2 - t + 123456789012345678901"});
    CHECK(big["normalized"].get<std::string>().find("123456789012345678901") != std::string::npos);
}
