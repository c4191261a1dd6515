#include "azk/arith/sturm.hpp"

#include <stdexcept>

namespace azk {

std::vector<QPoly> sturm_sequence(const QPoly& p)
{
    std::vector<QPoly> seq{p};
    QPoly d = derivative(p);
    if (d.is_zero())
        return seq;
    seq.push_back(d);
    while (true) {
        QPoly r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero())
            break;
        seq.push_back(std::move(r));
    }
    return seq;
}

namespace {

int sign_at(const QPoly& q, const Endpoint& x, bool at_minus_infinity)
{
    if (x)
        return sgn(evaluate(q, *x));
    int s = sgn(q.leading());
    if (at_minus_infinity && q.degree() % 2 == 1)
        s = -s;
    return s;
}

int variations(const std::vector<QPoly>& seq, const Endpoint& x, bool at_minus_infinity)
{
    int count = 0, last = 0;
    for (const auto& q : seq) {
        int s = sign_at(q, x, at_minus_infinity);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++count;
        last = s;
    }
    return count;
}

} // namespace

int sturm_count(const QPoly& p, const Endpoint& lo, const Endpoint& hi)
{
    if (p.is_zero())
        throw std::invalid_argument("sturm_count: zero polynomial");
    if (lo && hi && !(*lo < *hi))
        throw std::invalid_argument("sturm_count: empty interval");
    if (!is_squarefree(p))
        throw std::invalid_argument("sturm_count: polynomial is not square-free");
    if (p.degree() < 1)
        return 0;
    auto seq = sturm_sequence(p);
    return variations(seq, lo, true) - variations(seq, hi, false);
}

int count_distinct_real_roots(const QPoly& p, const Endpoint& lo, const Endpoint& hi)
{
    if (p.is_zero())
        throw std::invalid_argument("count_distinct_real_roots: zero polynomial");
    return sturm_count(squarefree_part(p), lo, hi);
}

} // namespace azk
