#include "azk/arith/ff.hpp"

#include <stdexcept>

#include "azk/arith/factor.hpp"

namespace azk {

FFElement::FFElement(std::shared_ptr<const FpPoly> modulus, FpPoly repr) : modulus_(std::move(modulus))
{
    repr_ = repr % *modulus_;
}

FFElement FFElement::generator(const FpPoly& modulus)
{
    if (modulus.degree() < 1 || modulus.leading().value != 1)
        throw std::invalid_argument("FFElement: modulus must be monic of positive degree");
    if (!is_irreducible_fp(modulus))
        throw std::invalid_argument("FFElement: modulus " + to_string(modulus) + " is reducible");
    const std::uint64_t p = modulus.leading().prime;
    return FFElement(std::make_shared<const FpPoly>(modulus), FpPoly({Zp(0, p), Zp(1, p)}));
}

FFElement FFElement::frobenius() const
{
    return FFElement(modulus_, powmod(repr_, Integer(static_cast<unsigned long>(characteristic())), *modulus_));
}

int FFElement::degree_over_prime_field() const
{
    FFElement x = frobenius();
    int k = 1;
    while (!(x == *this)) {
        x = x.frobenius();
        ++k;
    }
    return k;
}

FFElement operator+(const FFElement& a, const FFElement& b) { return FFElement(a.modulus_, a.repr_ + b.repr_); }

FFElement operator*(const FFElement& a, const FFElement& b) { return FFElement(a.modulus_, a.repr_ * b.repr_); }

FFElement inverse(const FFElement& a)
{
    if (a.is_zero())
        throw std::domain_error("FFElement: inverse of zero");
    auto x = xgcd(a.repr(), a.modulus());
    // x.g is a unit; scale s by its inverse.
    FpPoly s = x.s * inverse(x.g[0]);
    return FFElement(a.modulus_ptr(), s);
}

std::string to_string(const FFElement& a) { return to_string(a.repr(), "x"); }

} // namespace azk
