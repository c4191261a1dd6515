#pragma once

// 2x2 matrices over a number field and evaluation of group words.

#include <map>
#include <string>

#include "azk/arith/number_field.hpp"

namespace azk {

struct Mat2 {
    NFElement a11, a12, a21, a22;

    static Mat2 identity(const FieldPtr& field = nullptr);

    NFElement trace() const { return a11 + a22; }
    NFElement det() const { return a11 * a22 - a12 * a21; }
    FieldPtr field() const;
    bool is_identity() const;
    bool is_minus_identity() const;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x);
bool operator==(const Mat2& x, const Mat2& y);

/// Inverse via the adjugate divided by the determinant.
Mat2 inverse(const Mat2& m);

/// Product of the letters of `word` left to right; lowercase letters are
/// looked up in `assignment`, uppercase letters denote their inverses.
/// Throws std::invalid_argument on unknown letters or matrices from
/// different fields.
Mat2 mat2_word_eval(const std::map<char, Mat2>& assignment, const std::string& word);

std::string to_string(const Mat2& m);

} // namespace azk
