#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <vector>

#include "bpfib/rational.hpp"

namespace bpfib {

/// Dense univariate polynomial with exact coefficients; coefficient i
/// multiplies x^i. Trailing zeros are always stripped.
class Poly {
public:
    static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);
    Poly(std::initializer_list<Rational> coefficients);

    /// c * x^power
    static Poly monomial(const Rational& c, std::size_t power);

    /// `kZeroDegree` for the zero polynomial.
    std::int64_t degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Zero beyond the stored range.
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational eval(const Rational& x) const;

    /// x^d * p(1/x) for d >= degree: the coefficient list reversed into length d + 1.
    Poly reflected(std::size_t d) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, const Rational& s) { return lhs *= s; }
    friend Poly operator*(const Rational& s, Poly rhs) { return rhs *= s; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace bpfib
