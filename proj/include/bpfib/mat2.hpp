#pragma once

#include <iosfwd>
#include <string>

#include "bpfib/rational.hpp"

namespace bpfib {

/// 2x2 matrix over the rationals, row-major: [[e11, e12], [e21, e22]].
struct Mat2 {
    Rational e11;
    Rational e12;
    Rational e21;
    Rational e22;

    static Mat2 identity() { return {Rational{1}, Rational{0}, Rational{0}, Rational{1}}; }
    static Mat2 zero() { return {}; }

    Rational det() const { return e11 * e22 - e12 * e21; }

    Mat2& operator+=(const Mat2& rhs);
    Mat2& operator-=(const Mat2& rhs);
    Mat2& operator*=(const Rational& s);

    friend Mat2 operator+(Mat2 lhs, const Mat2& rhs) { return lhs += rhs; }
    friend Mat2 operator-(Mat2 lhs, const Mat2& rhs) { return lhs -= rhs; }
    friend Mat2 operator*(Mat2 lhs, const Rational& s) { return lhs *= s; }
    friend Mat2 operator*(const Rational& s, Mat2 rhs) { return rhs *= s; }
    friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
    Mat2 operator-() const { return {-e11, -e12, -e21, -e22}; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// "[[e11, e12], [e21, e22]]"
std::string to_text(const Mat2& m);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace bpfib
