#include "azk/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <chrono>
#include <set>
#include <json.hpp>
#include <ostream>

#include "azk/casebook/casebook.hpp"
#include "azk/knots/knots.hpp"
#include "azk/star/star.hpp"

namespace azk {

using Json = nlohmann::ordered_json;

PolyParseError::PolyParseError(const std::string& what, std::size_t position)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what), position_(position)
{
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& src, const std::string& var) : s_(src), var_(var) {}

    ExactPoly parse()
    {
        if (var_.empty())
            throw std::invalid_argument("parse_poly: empty variable name");
        skip();
        if (at_end())
            throw PolyParseError("empty input", pos_);
        std::map<long, Rational> terms;
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw PolyParseError("expected '+' or '-'", pos_);
            }
            first = false;
            auto [e, c] = term();
            terms[e] += sign * c;
            skip();
        }
        return ExactPoly::from_terms(terms, var_);
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_var() const { return s_.compare(pos_, var_.size(), var_) == 0; }

    std::optional<Integer> integer()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            return std::nullopt;
        if (!at_end() && (peek() == '/' || peek() == '.'))
            throw PolyParseError("non-integer coefficient", start);
        return Integer(s_.substr(start, pos_ - start));
    }

    std::pair<long, Rational> term()
    {
        std::optional<Integer> c = integer();
        skip();
        bool star = false;
        if (c && !at_end() && peek() == '*') {
            star = true;
            ++pos_;
            skip();
        }
        if (at_end() || !at_var()) {
            if (star || !c)
                throw PolyParseError(at_end() ? "unexpected end of input" : "expected '" + var_ + "' or a coefficient",
                                     pos_);
            return {0, Rational(*c)};
        }
        pos_ += var_.size();
        skip();
        long e = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip();
            bool negative = false;
            if (!at_end() && peek() == '-') {
                negative = true;
                ++pos_;
                skip();
            }
            const std::size_t epos = pos_;
            auto v = integer();
            if (!v)
                throw PolyParseError("expected an exponent", epos);
            if (!v->fits_slong_p() || *v > 1000000)
                throw PolyParseError("exponent too large", epos);
            e = negative ? -v->get_si() : v->get_si();
        }
        return {e, c ? Rational(*c) : Rational(1)};
    }

    const std::string& s_;
    const std::string& var_;
    std::size_t pos_ = 0;
};

std::string strip_parens(std::string s)
{
    auto trim = [](std::string& x) {
        const auto b = x.find_first_not_of(" \t");
        const auto e = x.find_last_not_of(" \t");
        x = b == std::string::npos ? "" : x.substr(b, e - b + 1);
    };
    trim(s);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
        trim(s);
    }
    return s;
}

} // namespace

ExactPoly parse_poly(const std::string& src, const std::string& var) { return PolyParser(src, var).parse(); }

RationalFunction parse_rational_function(const std::string& src, const std::string& var)
{
    const auto slash = src.find('/');
    auto part = [&](const std::string& s) {
        const ExactPoly p = parse_poly(strip_parens(s), var);
        if (p.is_laurent())
            throw std::invalid_argument("rational function: negative exponent in " + s);
        return p.to_poly();
    };
    if (slash == std::string::npos)
        return RationalFunction(part(src));
    const QPoly den = part(src.substr(slash + 1));
    if (den.is_zero())
        throw std::invalid_argument("rational function: zero denominator");
    return RationalFunction(part(src.substr(0, slash)), den);
}

Rational parse_rational(const std::string& src)
{
    static const std::string digits = "0123456789";
    const std::string s = strip_parens(src);
    const auto slash = s.find('/');
    auto is_int = [](const std::string& x) {
        const std::size_t start = !x.empty() && (x[0] == '-' || x[0] == '+') ? 1 : 0;
        return x.size() > start && x.find_first_not_of(digits, start) == std::string::npos;
    };
    const std::string n = s.substr(0, slash), d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(n) || !is_int(d))
        throw std::invalid_argument("not a rational number: '" + src + "'");
    Rational r(Integer(n[0] == '+' ? n.substr(1) : n), Integer(d[0] == '+' ? d.substr(1) : d));
    if (sgn(r.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + src + "'");
    r.canonicalize();
    return r;
}

namespace {

Json integer_json(const Integer& n)
{
    if (n.fits_slong_p())
        return n.get_si();
    return to_string(n);
}

Json factor_json(const StarFactorRecord& r)
{
    return Json{{"factor", to_string(r.factor)},
                {"deg_w", r.deg_w},
                {"trace_minpoly", to_string(r.trace_minpoly)},
                {"deg_theta", r.deg_theta},
                {"holds", r.holds}};
}

Json witnesses_json(const std::vector<StarFactorRecord>& ws)
{
    Json out = Json::array();
    for (const auto& w : ws)
        out.push_back(to_string(w.factor));
    return out;
}

struct Outcome {
    Json body;
    int code = 0;
};

Outcome star_check_cmd(const std::string& src)
{
    const ExactPoly p = parse_poly(src);
    const StarReport rep = star_check(p);
    Json records = Json::array();
    for (const auto& r : rep.records)
        records.push_back(factor_json(r));
    Json body{{"inputs", {{"poly", src}}},
              {"normalized", to_string(rep.normalized.poly)},
              {"verdict", to_string(rep.verdict)},
              {"witnesses", witnesses_json(rep.witnesses)},
              {"all_roots_simple", rep.all_roots_simple},
              {"scope", StarReport::scope},
              {"records", records}};
    return {body, rep.verdict == Verdict::Positive ? 0 : 1};
}

Outcome star_mod_cmd(const std::string& src, long prime)
{
    if (prime < 2)
        throw std::invalid_argument("--prime must be a prime");
    const StarEllReport rep = star_ell_check(parse_poly(src), static_cast<std::uint64_t>(prime));
    Json factors = Json::array();
    for (const auto& f : rep.factors)
        factors.push_back(Json{{"factor", to_string(f.factor)},
                               {"multiplicity", f.multiplicity},
                               {"deg_w", f.deg_w},
                               {"deg_theta", f.deg_theta},
                               {"zero_root", f.zero_root},
                               {"holds", f.holds}});
    Json body{{"inputs", {{"poly", src}, {"prime", prime}}},
              {"verdict", rep.holds ? "positive" : "negative"},
              {"holds", rep.holds},
              {"factors", factors}};
    return {body, rep.holds ? 0 : 1};
}

Outcome bad_primes_cmd(const std::string& src, std::optional<long> scan)
{
    if (scan && *scan < 0)
        throw std::invalid_argument("--scan must be nonnegative");
    const ExactPoly p = parse_poly(src);
    Json inputs{{"poly", src}};
    if (scan)
        inputs["scan"] = *scan;
    try {
        const BadPrimesReport rep = bad_primes(p, scan);
        Json candidates = Json::object();
        for (const auto& [q, why] : rep.candidates)
            candidates[std::to_string(q)] = Json(std::vector<std::string>(why.begin(), why.end()));
        Json body{{"inputs", inputs},
                  {"verdict", "positive"},
                  {"bad_primes", rep.failing},
                  {"candidates", candidates},
                  {"scan_limit", rep.scan_limit ? Json(*rep.scan_limit) : Json(nullptr)},
                  {"uncovered", rep.uncovered}};
        return {body, 0};
    } catch (const AzumayaNegativeError& e) {
        const StarReport rep = star_check(p);
        return {Json{{"inputs", inputs},
                     {"verdict", "negative"},
                     {"witnesses", witnesses_json(rep.witnesses)},
                     {"message", e.what()}},
                1};
    }
}

Outcome classify_cmd(const std::optional<std::string>& family, const std::optional<long>& param,
                     const std::optional<std::string>& poly)
{
    if (family.has_value() == poly.has_value())
        throw std::invalid_argument("knot classify needs exactly one of --family or --poly");
    Json inputs = Json::object();
    ExactPoly delta;
    if (family) {
        const Family f = parse_family(*family);
        if (!param && f != Family::F8 && f != Family::Lehmer)
            throw std::invalid_argument("--family " + *family + " needs --param");
        inputs["family"] = *family;
        if (param)
            inputs["param"] = *param;
        delta = ExactPoly(alexander({f, param.value_or(0), {}}));
    } else {
        inputs["poly"] = *poly;
        delta = parse_poly(*poly);
    }
    const Classification c = classify(delta);
    const PredicateReport pr = predicates(delta);
    const UnitCircleRoots uc = has_root_on_unit_circle(delta);
    Json body{{"inputs", inputs},
              {"alexander", to_string(delta)},
              {"verdict", to_string(c.verdict)},
              {"witnesses", witnesses_json(c.witnesses)},
              {"predicates",
               {{"unit_circle_root", uc.any},
                {"unit_circle_root_not_pm1", uc.excluding_pm1},
                {"all_roots_real_positive", pr.all_roots_real_positive},
                {"os_form", pr.os_form},
                {"all_roots_simple", pr.all_roots_simple},
                {"reciprocal", pr.reciprocal},
                {"delta_at_1", to_string(pr.delta_at_1)}}}};
    return {body, c.verdict == Verdict::Positive ? 0 : 1};
}

Outcome ramify_cmd(const std::string& a_src, const std::string& b_src)
{
    const Rational a = parse_rational(a_src), b = parse_rational(b_src);
    const RamificationSet r = ramification_set(a, b);
    Json finite = Json::array();
    for (const Integer& p : r.finite_primes)
        finite.push_back(integer_json(p));
    Json body{{"inputs", {{"a", to_string(a)}, {"b", to_string(b)}}},
              {"real", r.includes_real_place},
              {"finite", finite},
              {"division_algebra", !r.empty()}};
    return {body, 0};
}

Outcome tame_cmd(const std::string& alpha_src, const std::string& beta_src, const std::string& place_src)
{
    const RationalFunction alpha = parse_rational_function(alpha_src), beta = parse_rational_function(beta_src);
    const bool infinite = strip_parens(place_src) == "inf";
    const PlaceOfQt place = infinite ? PlaceOfQt::infinity() : PlaceOfQt::finite(parse_poly(place_src).to_poly());
    const SquareClass sc = tame_symbol(alpha, beta, place);
    Json body{{"inputs", {{"alpha", alpha_src}, {"beta", beta_src}, {"place", place_src}}},
              {"ord_alpha", ord(alpha, place)},
              {"ord_beta", ord(beta, place)},
              {"residue_field", infinite ? "Q" : "Q[y]/(" + to_string(place.pi(), "y") + ")"},
              {"value", to_string(sc.representative)},
              {"trivial", sc.trivial}};
    return {body, 0};
}

Outcome casebook_cmd(const std::string& name)
{
    std::vector<CheckReport> reps;
    if (name == "fig8")
        reps = fig8_casebook();
    else if (name == "pretzel7")
        reps = pretzel7_casebook();
    else if (name == "m137")
        reps = m137_casebook();
    else
        throw std::invalid_argument("unknown casebook entry '" + name + "' (expected fig8, pretzel7 or m137)");
    Json checks = Json::array();
    bool all = true;
    for (const CheckReport& r : reps) {
        Json items = Json::array();
        for (const CheckItem& i : r.items)
            items.push_back(Json{{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
        checks.push_back(Json{{"name", r.name}, {"passed", r.passed()}, {"items", items}});
        all = all && r.passed();
    }
    Json body{{"inputs", {{"entry", name}}}, {"passed", all}, {"checks", checks}};
    return {body, all ? 0 : 1};
}

void render_text(const Json& j, std::ostream& out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : j.items()) {
        if (key == "schema" || key == "timing_ms")
            continue;
        if (value.is_object()) {
            out << pad << key << ":\n";
            render_text(value, out, indent + 2);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << pad << key << ":\n";
            for (const Json& v : value) {
                out << pad << "  -\n";
                render_text(v, out, indent + 4);
            }
        } else {
            out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    }
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Azumaya conditions on Alexander polynomials, Hilbert symbols and worked examples", "azk"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit a JSON report");

    std::string poly, family_name, a, b, alpha, beta, place, entry;
    long prime = 0, param = 0, scan = 0;

    auto* star = app.add_subcommand("star", "Conditions (*) and (*_l)");
    star->require_subcommand(1);
    auto* s_check = star->add_subcommand("check", "Decide (*) over Q");
    s_check->add_option("poly", poly, "Polynomial in t")->required();
    auto* s_mod = star->add_subcommand("mod", "Decide (*_l) for one prime");
    s_mod->add_option("poly", poly, "Polynomial in t")->required();
    s_mod->add_option("--prime", prime, "The prime l")->required();
    auto* s_bad = star->add_subcommand("bad-primes", "Primes where (*_l) fails");
    s_bad->add_option("poly", poly, "Polynomial in t")->required();
    auto* scan_opt = s_bad->add_option("--scan", scan, "Also test every prime up to N");

    auto* knot = app.add_subcommand("knot", "Knot families");
    knot->require_subcommand(1);
    auto* k_classify = knot->add_subcommand("classify", "Azumaya positive or negative");
    auto* fam_opt = k_classify->add_option("--family", family_name, "twist, pretzel237, cyclotomic, fa, f8, lehmer");
    auto* param_opt = k_classify->add_option("--param", param, "Family parameter");
    auto* kpoly_opt = k_classify->add_option("--poly", poly, "Alexander polynomial");

    auto* quat = app.add_subcommand("quat", "Quaternion algebras");
    quat->require_subcommand(1);
    auto* q_ramify = quat->add_subcommand("ramify", "Ramification of (a, b) over Q");
    q_ramify->add_option("--a", a, "Rational a")->required();
    q_ramify->add_option("--b", b, "Rational b")->required();
    auto* q_tame = quat->add_subcommand("tame", "Tame symbol at a place of Q(t)");
    q_tame->add_option("--alpha", alpha, "Rational function F or F/G")->required();
    q_tame->add_option("--beta", beta, "Rational function F or F/G")->required();
    q_tame->add_option("--place", place, "Irreducible P(t) or inf")->required();

    auto* casebook = app.add_subcommand("casebook", "Worked examples");
    casebook->add_option("entry", entry, "fig8, pretzel7 or m137")->required();

    // A polynomial with a leading '-' reads as a flag; pass it after "--".
    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        const auto first = std::find_if(args.begin(), args.end(), [](const std::string& x) { return x != "--json"; });
        static const std::set<std::string> known{"star", "knot", "quat", "casebook"};
        if (first != args.end() && first->rfind("-", 0) != 0 && !known.count(*first))
            err << "error: unknown subcommand '" << *first << "'\n\n" << app.help();
        else
            err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    Outcome res;
    std::string command;
    try {
        if (*s_check) {
            command = "star check";
            res = star_check_cmd(poly);
        } else if (*s_mod) {
            command = "star mod";
            res = star_mod_cmd(poly, prime);
        } else if (*s_bad) {
            command = "star bad-primes";
            res = bad_primes_cmd(poly, *scan_opt ? std::optional<long>(scan) : std::nullopt);
        } else if (*k_classify) {
            command = "knot classify";
            res = classify_cmd(*fam_opt ? std::optional<std::string>(family_name) : std::nullopt,
                               *param_opt ? std::optional<long>(param) : std::nullopt,
                               *kpoly_opt ? std::optional<std::string>(poly) : std::nullopt);
        } else if (*q_ramify) {
            command = "quat ramify";
            res = ramify_cmd(a, b);
        } else if (*q_tame) {
            command = "quat tame";
            res = tame_cmd(alpha, beta, place);
        } else if (*casebook) {
            command = "casebook";
            res = casebook_cmd(entry);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    Json report{{"schema", 1}, {"command", command}};
    for (const auto& [k, v] : res.body.items())
        report[k] = v;
    report["timing_ms"] = ms;
    if (json)
        out << report.dump(2) << "\n";
    else
        render_text(report, out, 0);
    return res.code;
}

} // namespace azk
