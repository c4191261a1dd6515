#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "azk/arith/integer.hpp"

namespace azk {

/// Element of the prime field F_p, p < 2^31. The element carries its
/// modulus; a default-constructed Zp is the context-free zero and adopts
/// the modulus of whatever it is combined with.
struct Zp {
    std::uint64_t value = 0;
    std::uint64_t prime = 0;

    Zp() = default;
    Zp(long v, std::uint64_t p) : prime(p)
    {
        if (p == 0) {
            if (v != 0)
                throw std::invalid_argument("Zp: nonzero value without modulus");
            return;
        }
        long r = v % static_cast<long>(p);
        value = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(p) : r);
    }
    static Zp from_integer(const Integer& v, std::uint64_t p)
    {
        Integer r = v % static_cast<unsigned long>(p);
        if (r < 0)
            r += static_cast<unsigned long>(p);
        Zp z;
        z.prime = p;
        z.value = r.get_ui();
        return z;
    }
};

namespace detail {
inline std::uint64_t common_prime(const Zp& a, const Zp& b)
{
    if (a.prime == 0)
        return b.prime;
    if (b.prime != 0 && b.prime != a.prime)
        throw std::invalid_argument("Zp: mixed characteristics");
    return a.prime;
}
} // namespace detail

inline bool is_zero(const Zp& a) { return a.value == 0; }
inline bool operator==(const Zp& a, const Zp& b) { return a.value == b.value; }

inline Zp operator+(const Zp& a, const Zp& b)
{
    Zp r;
    r.prime = detail::common_prime(a, b);
    r.value = r.prime ? (a.value + b.value) % r.prime : 0;
    return r;
}
inline Zp operator-(const Zp& a)
{
    Zp r = a;
    r.value = (a.value == 0) ? 0 : a.prime - a.value;
    return r;
}
inline Zp operator-(const Zp& a, const Zp& b) { return a + (-b); }
inline Zp operator*(const Zp& a, const Zp& b)
{
    Zp r;
    r.prime = detail::common_prime(a, b);
    r.value = r.prime ? (a.value * b.value) % r.prime : 0;
    return r;
}
inline Zp operator*(const Zp& a, long k)
{
    if (a.prime == 0)
        return a;
    return a * Zp(k, a.prime);
}
inline Zp& operator+=(Zp& a, const Zp& b) { return a = a + b; }
inline Zp& operator-=(Zp& a, const Zp& b) { return a = a - b; }
inline Zp& operator*=(Zp& a, const Zp& b) { return a = a * b; }

inline Zp pow(Zp base, std::uint64_t e)
{
    Zp r(1, base.prime);
    while (e) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

inline Zp inverse(const Zp& a)
{
    if (a.value == 0)
        throw std::domain_error("Zp: inverse of zero");
    return pow(a, a.prime - 2);
}

inline Zp one_like(const Zp& a) { return Zp(1, a.prime); }
inline Zp zero_like(const Zp& a) { return Zp(0, a.prime); }

inline std::ostream& operator<<(std::ostream& os, const Zp& a) { return os << a.value; }

} // namespace azk
