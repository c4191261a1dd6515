#include "azk/star/star.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "azk/arith/factor.hpp"
#include "azk/arith/ff.hpp"
#include "azk/arith/number_field.hpp"

namespace azk {

std::string to_string(Verdict v) { return v == Verdict::Positive ? "positive" : "negative"; }

namespace {

// Irreducible factors of the square-free part of p(t^2), factoring each
// irreducible factor f of p separately: f(t^2) is square-free when f(0) != 0.
std::vector<QPoly> square_root_factors(const QPoly& p)
{
    std::vector<QPoly> out;
    for (const auto& [f, k] : factor_over_Q(p).factors) {
        (void)k;
        for (const auto& [g, j] : factor_over_Q(inflate(f, 2)).factors) {
            (void)j;
            out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) { return lex_less(a, b, rational_less); });
    return out;
}

StarFactorRecord make_record(const QPoly& m)
{
    StarFactorRecord r;
    r.factor = m;
    r.deg_w = m.degree();
    FieldPtr k = NumberField::create_unchecked(m, "w");
    NFElement w = NFElement::generator(k);
    r.trace_minpoly = nf_minpoly(w + inverse(w));
    r.deg_theta = r.trace_minpoly.degree();
    r.holds = r.deg_theta == r.deg_w;
    return r;
}

} // namespace

StarReport star_check(const ExactPoly& delta)
{
    if (delta.is_zero())
        throw std::invalid_argument("star_check: zero polynomial");
    StarReport rep;
    rep.input = delta;
    rep.normalized = normalize(delta);
    const QPoly& p = rep.normalized.poly;
    if (is_zero(p[0]))
        throw std::invalid_argument("star_check: vanishes at 0 after normalization");
    if (p.degree() < 1)
        return rep;
    rep.all_roots_simple = is_squarefree(p);
    for (const QPoly& m : square_root_factors(p)) {
        StarFactorRecord r = make_record(m);
        if (!r.holds) {
            rep.verdict = Verdict::Negative;
            rep.witnesses.push_back(r);
        }
        rep.records.push_back(std::move(r));
    }
    return rep;
}

StarEllReport star_ell_check(const ExactPoly& delta, std::uint64_t ell)
{
    if (!is_prime(static_cast<long>(ell)))
        throw std::invalid_argument("star_ell_check: " + std::to_string(ell) + " is not prime");
    if (delta.is_zero())
        throw std::invalid_argument("star_ell_check: zero polynomial");
    const QPoly p = normalize(delta).poly;
    FpPoly d = reduce_mod(p, ell);
    if (d.is_zero())
        throw std::invalid_argument("star_ell_check: polynomial vanishes modulo " + std::to_string(ell));
    StarEllReport rep;
    rep.ell = ell;
    if (d.degree() < 1)
        return rep;
    const FpPoly target = ell == 2 ? d : reduce_mod(inflate(p, 2), ell);
    for (const auto& [g, k] : factor_fp(target)) {
        EllFactorRecord r;
        r.factor = g;
        r.multiplicity = k;
        r.deg_w = g.degree();
        if (g.degree() == 1 && g[0].value == 0) {
            r.zero_root = true;
        } else {
            FFElement w = FFElement::generator(g);
            r.deg_theta = (w + inverse(w)).degree_over_prime_field();
            r.holds = r.deg_theta == r.deg_w;
        }
        rep.holds = rep.holds && r.holds;
        rep.factors.push_back(std::move(r));
    }
    return rep;
}

namespace {

void add_prime_divisors(std::map<long, std::set<std::string>>& out, const Integer& n, const std::string& tag)
{
    if (n == 0)
        return;
    for (const Integer& q : prime_divisors(n)) {
        if (!q.fits_slong_p())
            throw std::overflow_error("bad_primes: candidate prime exceeds machine range");
        out[q.get_si()].insert(tag);
    }
}

std::vector<long> failing_among(const ExactPoly& delta, const std::vector<long>& primes)
{
    const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    const std::size_t chunk = (primes.size() + workers - 1) / workers;
    std::vector<std::future<std::vector<long>>> jobs;
    for (std::size_t start = 0; start < primes.size(); start += chunk) {
        const std::size_t stop = std::min(primes.size(), start + chunk);
        jobs.push_back(std::async(std::launch::async, [&delta, &primes, start, stop] {
            std::vector<long> bad;
            for (std::size_t i = start; i < stop; ++i)
                if (!star_ell_check(delta, static_cast<std::uint64_t>(primes[i])).holds)
                    bad.push_back(primes[i]);
            return bad;
        }));
    }
    std::vector<long> out;
    for (auto& j : jobs) {
        auto part = j.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

BadPrimesReport bad_primes(const ExactPoly& delta, std::optional<long> scan_limit)
{
    StarReport star = star_check(delta);
    if (star.verdict == Verdict::Negative)
        throw AzumayaNegativeError("bad_primes: condition (*) fails, so no finite bad set exists");
    BadPrimesReport rep;
    rep.scan_limit = scan_limit;
    rep.candidates[2].insert("always-2");
    const ZPoly p = primitive_part(star.normalized.poly);
    add_prime_divisors(rep.candidates, p.leading(), "leading-coefficient");
    add_prime_divisors(rep.candidates, p[0], "constant-term");
    for (const auto& r : star.records) {
        const Rational disc = discriminant(r.factor);
        add_prime_divisors(rep.candidates, disc.get_num(), "discriminant");
        add_prime_divisors(rep.candidates, disc.get_den(), "discriminant");
        FieldPtr k = NumberField::create_unchecked(r.factor, "w");
        NFElement w = NFElement::generator(k);
        auto coeffs = nf_linear_expression(k, w, w + inverse(w));
        if (!coeffs)
            throw std::logic_error("bad_primes: w is not a polynomial in w + 1/w");
        for (const Rational& c : *coeffs)
            add_prime_divisors(rep.candidates, c.get_den(), "denominator");
    }
    std::vector<long> cand;
    for (const auto& [q, tags] : rep.candidates)
        cand.push_back(q);
    const ExactPoly integral(to_rational(p));
    rep.failing = failing_among(integral, cand);
    if (scan_limit) {
        if (*scan_limit < 0)
            throw std::invalid_argument("bad_primes: negative scan limit");
        for (long q : failing_among(integral, primes_up_to(*scan_limit)))
            if (!rep.candidates.count(q)) {
                rep.uncovered.push_back(q);
                rep.failing.push_back(q);
            }
        std::sort(rep.failing.begin(), rep.failing.end());
    }
    return rep;
}

Classification classify(const ExactPoly& delta)
{
    StarReport r = star_check(delta);
    return {r.verdict, r.witnesses};
}

} // namespace azk
