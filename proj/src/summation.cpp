#include "bpfib/summation.hpp"

#include <string>

#include "bpfib/error.hpp"
#include "bpfib/matrixseq.hpp"
#include "bpfib/sequence.hpp"

namespace bpfib {

namespace {

void require_index(std::int64_t n, std::int64_t lowest) {
    if (n < lowest) {
        throw Error(Errc::IndexOutOfRange,
                    "index " + std::to_string(n) + " below " + std::to_string(lowest));
    }
}

void require_nonzero_point(const Rational& x) {
    if (x.is_zero()) {
        throw Error(Errc::ZeroEvaluationPoint, "weighted sum evaluated at x = 0");
    }
}

}  // namespace

Mat2 partial_sum_direct(const Params& p, std::int64_t n) {
    require_index(n, 1);
    Mat2 acc;
    for (const Mat2& f : f_table(p, n - 1)) {
        acc += f;
    }
    return acc;
}

Mat2 partial_sum_closed(const Params& p, std::int64_t n) {
    require_index(n, 1);
    const auto [f0, f1] = f_initial(p);
    const auto window = f_window(p, n - 1, n);
    const Mat2& f_prev = window[0];
    const Mat2& f_n = window[1];
    const bool odd = epsilon(n) == 1;
    const Rational& lead = odd ? p.a() : p.b();
    const Rational& trail = odd ? p.b() : p.a();
    Mat2 numer = lead * f_n + trail * f_prev - p.a() * f1 + p.ab() * f0 - p.b() * f0;
    return numer * inverse(p.ab());
}

Mat2 weighted_sum_direct(const Params& p, std::int64_t n, const Rational& x) {
    require_nonzero_point(x);
    require_index(n, 0);
    const Rational t = inverse(x);
    Mat2 acc;
    Rational weight{1};
    for (const Mat2& f : f_table(p, n)) {
        acc += f * weight;
        weight *= t;
    }
    return acc;
}

Rational sum_quartic(const Params& p, const Rational& x) {
    const Rational x2 = x * x;
    return Rational{1} - (p.ab() + Rational{2}) * x2 + x2 * x2;
}

Mat2 weighted_sum_closed(const Params& p, std::int64_t n, const Rational& x) {
    require_nonzero_point(x);
    require_index(n, 2);
    const Rational quartic = sum_quartic(p, x);
    if (quartic.is_zero()) {
        throw Error(Errc::SingularDenominator,
                    "1 - (ab+2)x^2 + x^4 vanishes at x = " + x.str());
    }
    const auto [f0, f1] = f_initial(p);
    const auto w = f_window(p, n - 1, n + 2);  // F_{n-1}, F_n, F_{n+1}, F_{n+2}
    const Rational one{1};

    Mat2 tail = w[0] * pow(x, 1 - n) - w[2] * pow(x, 3 - n) + w[1] * pow(x, -n) -
                w[3] * pow(x, 2 - n);
    Mat2 head = pow(x, 4) * f0 + pow(x, 3) * f1 - (x * x) * ((p.ab() + one) * f0 - p.a() * f1) -
                x * (f1 - p.b() * f0);
    return (tail + head) * inverse(quartic);
}

SumReport sum_report(const Params& p, std::int64_t n) {
    SumReport r{n, partial_sum_direct(p, n), partial_sum_closed(p, n), false};
    r.matches = r.direct == r.closed;
    return r;
}

SumReport weighted_sum_report(const Params& p, std::int64_t n, const Rational& x) {
    SumReport r{n, weighted_sum_direct(p, n, x), weighted_sum_closed(p, n, x), false};
    r.matches = r.direct == r.closed;
    return r;
}

}  // namespace bpfib
