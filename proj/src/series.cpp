#include "bpfib/series.hpp"

#include <algorithm>
#include <utility>

#include "bpfib/error.hpp"

namespace bpfib {

namespace {

Poly quartic_denominator(const Params& p) {
    return Poly{Rational{1}, Rational{0}, -(p.ab() + Rational{2}), Rational{0}, Rational{1}};
}

Rational& entry(Mat2& m, std::size_t k) {
    switch (k) {
        case 0: return m.e11;
        case 1: return m.e12;
        case 2: return m.e21;
        default: return m.e22;
    }
}

}  // namespace

MatRatFunc::MatRatFunc(std::array<Poly, 4> numerator, Poly denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (denominator_.is_zero()) {
        throw Error(Errc::DivisionByZero, "rational function with zero denominator");
    }
}

MatRatFunc operator+(const MatRatFunc& lhs, const MatRatFunc& rhs) {
    std::array<Poly, 4> num;
    if (lhs.denominator_ == rhs.denominator_) {
        for (std::size_t k = 0; k < 4; ++k) {
            num[k] = lhs.numerator_[k] + rhs.numerator_[k];
        }
        return {std::move(num), lhs.denominator_};
    }
    for (std::size_t k = 0; k < 4; ++k) {
        num[k] = lhs.numerator_[k] * rhs.denominator_ + rhs.numerator_[k] * lhs.denominator_;
    }
    return {std::move(num), lhs.denominator_ * rhs.denominator_};
}

Mat2 SeriesTrunc::evaluate(const Rational& t) const {
    Mat2 acc;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

MatRatFunc gf_matrix(const Params& p) {
    const Rational ratio = p.b() / p.a();
    const Rational one{1};
    return {{Poly{one, p.b(), -one},
             Poly{Rational{0}, ratio, p.b(), -ratio},
             Poly{Rational{0}, one, p.a(), -one},
             Poly{one, Rational{0}, -(p.ab() + one), p.b()}},
            quartic_denominator(p)};
}

SeriesTrunc expand(const MatRatFunc& rf, std::size_t order) {
    const Poly& den = rf.denominator();
    const Rational d0 = den.coeff(0);
    if (d0.is_zero()) {
        throw Error(Errc::NonUnitDenominator, "denominator has zero constant term");
    }
    const Rational inv_d0 = inverse(d0);
    const auto& dc = den.coefficients();

    SeriesTrunc out;
    out.coefficients.reserve(order);
    for (std::size_t i = 0; i < order; ++i) {
        Mat2 c;
        for (std::size_t k = 0; k < 4; ++k) {
            entry(c, k) = rf.numerator()[k].coeff(i);
        }
        for (std::size_t j = 1; j <= std::min(i, dc.size() - 1); ++j) {
            if (!dc[j].is_zero()) {
                c -= dc[j] * out.coefficients[i - j];
            }
        }
        out.coefficients.push_back(c * inv_d0);
    }
    return out;
}

MatRatFunc reciprocal_gf_in_x(const Params& p) {
    const Rational ratio = p.b() / p.a();
    const Rational one{1};
    const Rational zero{0};
    // Prefactor x already folded into each entry.
    return {{Poly{zero, zero, -one, p.b(), one},
             Poly{zero, -ratio, p.b(), ratio},
             Poly{zero, -one, p.a(), one},
             Poly{zero, p.b(), -(p.ab() + one), zero, one}},
            quartic_denominator(p)};
}

MatRatFunc substitute_reciprocal(const MatRatFunc& rf) {
    std::int64_t d = rf.denominator().degree();
    for (const Poly& e : rf.numerator()) {
        d = std::max(d, e.degree());
    }
    const auto width = static_cast<std::size_t>(d);
    std::array<Poly, 4> num;
    for (std::size_t k = 0; k < 4; ++k) {
        num[k] = rf.numerator()[k].reflected(width);
    }
    return {std::move(num), rf.denominator().reflected(width)};
}

MatRatFunc reciprocal_gf(const Params& p) { return substitute_reciprocal(reciprocal_gf_in_x(p)); }

}  // namespace bpfib
