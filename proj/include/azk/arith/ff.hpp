#pragma once

// Elements of F_l[x]/(g) for g monic irreducible over F_l.

#include <memory>
#include <string>

#include "azk/arith/qpoly.hpp"

namespace azk {

class FFElement {
public:
    /// g must be monic irreducible of degree >= 1 over F_l; checked.
    static FFElement generator(const FpPoly& modulus);

    FFElement(std::shared_ptr<const FpPoly> modulus, FpPoly repr);

    std::uint64_t characteristic() const { return modulus_->leading().prime; }
    int extension_degree() const { return modulus_->degree(); }
    const FpPoly& modulus() const { return *modulus_; }
    const std::shared_ptr<const FpPoly>& modulus_ptr() const { return modulus_; }
    const FpPoly& repr() const { return repr_; }
    bool is_zero() const { return repr_.is_zero(); }

    FFElement frobenius() const;
    /// Degree of F_l(e) over F_l: the length of the orbit e, e^l, e^(l^2), ...
    int degree_over_prime_field() const;

    friend FFElement operator+(const FFElement& a, const FFElement& b);
    friend FFElement operator*(const FFElement& a, const FFElement& b);
    friend bool operator==(const FFElement& a, const FFElement& b) { return a.repr_ == b.repr_; }

private:
    std::shared_ptr<const FpPoly> modulus_;
    FpPoly repr_;
};

/// Throws std::domain_error on zero.
FFElement inverse(const FFElement& a);

std::string to_string(const FFElement& a);

} // namespace azk
