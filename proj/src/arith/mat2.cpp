#include "azk/arith/mat2.hpp"

#include <cctype>
#include <stdexcept>

namespace azk {

Mat2 Mat2::identity(const FieldPtr& field)
{
    NFElement one = field ? NFElement(field, qpoly({1})) : NFElement(1L);
    NFElement zero = field ? NFElement(field, QPoly()) : NFElement();
    return {one, zero, zero, one};
}

FieldPtr Mat2::field() const
{
    return common_field(common_field(a11.field(), a12.field()), common_field(a21.field(), a22.field()));
}

bool Mat2::is_identity() const
{
    return a11 == NFElement(1L) && is_zero(a12) && is_zero(a21) && a22 == NFElement(1L);
}

bool Mat2::is_minus_identity() const
{
    return a11 == NFElement(-1L) && is_zero(a12) && is_zero(a21) && a22 == NFElement(-1L);
}

Mat2 operator*(const Mat2& x, const Mat2& y)
{
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22, x.a21 * y.a11 + x.a22 * y.a21,
            x.a21 * y.a12 + x.a22 * y.a22};
}

Mat2 operator-(const Mat2& x) { return {-x.a11, -x.a12, -x.a21, -x.a22}; }

bool operator==(const Mat2& x, const Mat2& y)
{
    return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
}

Mat2 inverse(const Mat2& m)
{
    NFElement d = m.det();
    if (is_zero(d))
        throw std::domain_error("Mat2: singular matrix");
    NFElement di = inverse(d);
    return {m.a22 * di, -(m.a12 * di), -(m.a21 * di), m.a11 * di};
}

Mat2 mat2_word_eval(const std::map<char, Mat2>& assignment, const std::string& word)
{
    FieldPtr field;
    for (const auto& [letter, m] : assignment)
        field = common_field(field, m.field());
    Mat2 acc = Mat2::identity(field);
    std::map<char, Mat2> inverses;
    for (char ch : word) {
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        auto it = assignment.find(lower);
        if (it == assignment.end())
            throw std::invalid_argument(std::string("mat2_word_eval: no matrix for letter '") + ch + "'");
        if (ch == lower) {
            acc = acc * it->second;
        } else {
            auto inv = inverses.find(lower);
            if (inv == inverses.end())
                inv = inverses.emplace(lower, inverse(it->second)).first;
            acc = acc * inv->second;
        }
    }
    return acc;
}

std::string to_string(const Mat2& m)
{
    return "[[" + to_string(m.a11) + ", " + to_string(m.a12) + "], [" + to_string(m.a21) + ", " + to_string(m.a22) +
           "]]";
}

} // namespace azk
