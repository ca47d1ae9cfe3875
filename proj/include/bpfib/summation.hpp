#pragma once

#include <cstdint>

#include "bpfib/mat2.hpp"
#include "bpfib/params.hpp"

namespace bpfib {

struct SumReport {
    std::int64_t n = 0;
    Mat2 direct;
    Mat2 closed;
    bool matches = false;
};

/// F_0 + ... + F_{n-1}, n >= 1.
Mat2 partial_sum_direct(const Params& p, std::int64_t n);

/// (a^eps b^{1-eps} F_n + a^{1-eps} b^eps F_{n-1} - a F_1 + ab F_0 - b F_0) / (ab),
/// eps = epsilon(n), n >= 1.
Mat2 partial_sum_closed(const Params& p, std::int64_t n);

/// sum_{k=0}^{n} F_k x^{-k}. Throws `Errc::ZeroEvaluationPoint` for x == 0.
Mat2 weighted_sum_direct(const Params& p, std::int64_t n, const Rational& x);

/// Closed form of `weighted_sum_direct` for n >= 2:
///
///   ( F_{n-1}/x^{n-1} - F_{n+1}/x^{n-3} + F_n/x^n - F_{n+2}/x^{n-2}
///     + x^4 F_0 + x^3 F_1 - x^2 [(ab+1) F_0 - a F_1] - x (F_1 - b F_0) )
///   / (1 - (ab+2) x^2 + x^4)
///
/// The F_{n+2} term carries x^{n-2}; see README ("Weighted partial sums") for
/// the telescoping that fixes this exponent.
/// Throws `Errc::SingularDenominator` when the quartic vanishes at x.
Mat2 weighted_sum_closed(const Params& p, std::int64_t n, const Rational& x);

/// 1 - (ab+2) x^2 + x^4.
Rational sum_quartic(const Params& p, const Rational& x);

SumReport sum_report(const Params& p, std::int64_t n);
SumReport weighted_sum_report(const Params& p, std::int64_t n, const Rational& x);

}  // namespace bpfib
