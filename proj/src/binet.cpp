#include "bpfib/matrixseq.hpp"

#include <string>

#include "bpfib/error.hpp"
#include "bpfib/sequence.hpp"

namespace bpfib {

namespace {

QuadMat2 scaled(const Mat2& m, const QuadExt& s) {
    return {s * m.e11, s * m.e12, s * m.e21, s * m.e22};
}

}  // namespace

BinetCoefficients binet_coefficients(const Params& p, std::int64_t n) {
    if (n < 0) {
        throw Error(Errc::IndexOutOfRange, "index " + std::to_string(n) + " below 0");
    }
    if (p.disc().is_zero()) {
        throw Error(Errc::DegenerateDiscriminant,
                    "ab = -4 gives alpha = beta; the Binet formula is undefined");
    }
    const auto [f0, f1] = f_initial(p);
    const bool odd = epsilon(n) == 1;
    const std::int64_t half = n / 2;

    // alpha - beta = sqrt(D)
    const QuadExt root_d = p.quad(Rational{0}, Rational{1});
    const QuadExt one = root_d.one();

    const Mat2 selected = odd ? f1 - p.b() * f0 : p.a() * f1 - (Rational{1} + p.ab()) * f0;
    const QuadExt a1_scale = quad_div(one, pow(p.ab(), half) * root_d);
    const QuadExt b1_scale =
        quad_div(one.lift(odd ? p.b() : Rational{1}), pow(p.ab(), half + 1) * root_d);

    return {scaled(selected, a1_scale), scaled(f0, b1_scale)};
}

QuadMat2 f_binet_quad(const Params& p, std::int64_t n) {
    const BinetCoefficients c = binet_coefficients(p, n);
    const QuadExt alpha = quad_alpha(p);
    const QuadExt beta = quad_beta(p);
    const std::int64_t even_power = 2 * (n / 2) + 2;
    const QuadExt u = quad_pow(alpha, n) - quad_pow(beta, n);
    const QuadExt v = quad_pow(alpha, even_power) - quad_pow(beta, even_power);
    return {c.a1.e11 * u + c.b1.e11 * v, c.a1.e12 * u + c.b1.e12 * v,
            c.a1.e21 * u + c.b1.e21 * v, c.a1.e22 * u + c.b1.e22 * v};
}

Mat2 f_binet(const Params& p, std::int64_t n) {
    const QuadMat2 m = f_binet_quad(p, n);
    if (!m.is_rational()) {
        throw Error(Errc::InternalIrrationalResidue,
                    "Binet evaluation at n=" + std::to_string(n) + " left a sqrt(D) component");
    }
    return {m.e11.rat(), m.e12.rat(), m.e21.rat(), m.e22.rat()};
}

}  // namespace bpfib
