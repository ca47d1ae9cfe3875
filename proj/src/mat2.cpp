#include "bpfib/mat2.hpp"

#include <ostream>

namespace bpfib {

Mat2& Mat2::operator+=(const Mat2& rhs) {
    e11 += rhs.e11;
    e12 += rhs.e12;
    e21 += rhs.e21;
    e22 += rhs.e22;
    return *this;
}

Mat2& Mat2::operator-=(const Mat2& rhs) {
    e11 -= rhs.e11;
    e12 -= rhs.e12;
    e21 -= rhs.e21;
    e22 -= rhs.e22;
    return *this;
}

Mat2& Mat2::operator*=(const Rational& s) {
    e11 *= s;
    e12 *= s;
    e21 *= s;
    e22 *= s;
    return *this;
}

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
    return {lhs.e11 * rhs.e11 + lhs.e12 * rhs.e21, lhs.e11 * rhs.e12 + lhs.e12 * rhs.e22,
            lhs.e21 * rhs.e11 + lhs.e22 * rhs.e21, lhs.e21 * rhs.e12 + lhs.e22 * rhs.e22};
}

std::string to_text(const Mat2& m) {
    return "[[" + m.e11.str() + ", " + m.e12.str() + "], [" + m.e21.str() + ", " + m.e22.str() +
           "]]";
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << to_text(m); }

}  // namespace bpfib
