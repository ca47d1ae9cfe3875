#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bpfib/mat2.hpp"
#include "bpfib/params.hpp"
#include "bpfib/poly.hpp"

namespace bpfib {

/// A 2x2 matrix of polynomials over one shared scalar denominator. Kept in
/// the form it was built in; no common factors are cancelled.
class MatRatFunc {
public:
    /// Entries in row-major order e11, e12, e21, e22. Throws
    /// `Errc::DivisionByZero` for a zero denominator.
    MatRatFunc(std::array<Poly, 4> numerator, Poly denominator);

    const std::array<Poly, 4>& numerator() const { return numerator_; }
    const Poly& denominator() const { return denominator_; }

    /// Equal denominators are kept; otherwise the result is over their product.
    friend MatRatFunc operator+(const MatRatFunc& lhs, const MatRatFunc& rhs);

private:
    std::array<Poly, 4> numerator_;
    Poly denominator_;
};

/// Truncated power series sum_{i < order} C_i t^i with matrix coefficients.
struct SeriesTrunc {
    std::vector<Mat2> coefficients;

    std::size_t order() const { return coefficients.size(); }
    /// Value of the truncated sum at t.
    Mat2 evaluate(const Rational& t) const;
};

/// sum F_i x^i = N(x) / (1 - (ab+2)x^2 + x^4) with
///   N = [[1 + bx - x^2,  (b/a)x + bx^2 - (b/a)x^3],
///        [x + ax^2 - x^3, 1 - (ab+1)x^2 + bx^3]].
MatRatFunc gf_matrix(const Params& p);

/// First `order` Maclaurin coefficients by power-series long division.
/// Throws `Errc::NonUnitDenominator` if the denominator vanishes at 0.
SeriesTrunc expand(const MatRatFunc& rf, std::size_t order);

/// sum F_k x^{-k} written as a rational function of x:
///   x / (1 - (ab+2)x^2 + x^4) * [[x^3 + bx^2 - x, (b/a)x^2 + bx - b/a],
///                                [x^2 + ax - 1,   x^3 - (ab+1)x + b]].
MatRatFunc reciprocal_gf_in_x(const Params& p);

/// Rewrite f(x) as a rational function of t = 1/x by multiplying numerator
/// and denominator by t^d, d the largest degree present.
MatRatFunc substitute_reciprocal(const MatRatFunc& rf);

/// `reciprocal_gf_in_x` in the variable t = 1/x; its t-expansion has F_k as
/// coefficient k.
MatRatFunc reciprocal_gf(const Params& p);

}  // namespace bpfib
