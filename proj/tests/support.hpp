#pragma once

// Test-only helpers: parameter generators and oracles that do not route
// through the library code they check.

#include <cstdint>
#include <random>
#include <vector>

#include "bpfib/mat2.hpp"
#include "bpfib/matrixseq.hpp"
#include "bpfib/params.hpp"
#include "bpfib/poly.hpp"
#include "bpfib/rational.hpp"
#include "bpfib/summation.hpp"

namespace bpfib::testing {

inline constexpr std::uint64_t kSeed = 0x5EED'B1F1'B0FAULL;

/// Nonzero rational with numerator in [-9, 9] \ {0} and denominator in [1, 9].
inline Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 8);
    std::uniform_int_distribution<long> den(1, 9);
    long p = num(rng);
    if (p >= 0) {
        ++p;  // skip zero
    }
    return Rational(mpz_class(p), mpz_class(den(rng)));
}

inline std::vector<Params> random_params(std::size_t count, std::uint64_t seed = kSeed) {
    std::mt19937_64 rng(seed);
    std::vector<Params> out;
    out.reserve(count);
    while (out.size() < count) {
        Rational a = small_rational(rng);
        Rational b = small_rational(rng);
        out.push_back(make_params(a, b));
    }
    return out;
}

inline Params params(long a, long b) { return make_params(Rational{a}, Rational{b}); }

/// Alternating recurrence with its own loop, from the definition alone.
inline std::vector<Rational> oracle_q(const Rational& a, const Rational& b, std::int64_t n_max) {
    std::vector<Rational> q{Rational{0}, Rational{1}};  // q_0, q_1
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const Rational& m = (n % 2 == 0) ? a : b;
        q.push_back(m * q[static_cast<std::size_t>(n - 1)] + q[static_cast<std::size_t>(n - 2)]);
    }
    q.resize(static_cast<std::size_t>(n_max + 1));
    return q;
}

/// Plain integer two-term recurrence u_n = k u_{n-1} + u_{n-2}, u_0 = 0, u_1 = 1.
inline std::vector<mpz_class> classical(long k, std::int64_t n_max) {
    std::vector<mpz_class> u{0, 1};
    for (std::int64_t n = 2; n <= n_max; ++n) {
        u.push_back(k * u[static_cast<std::size_t>(n - 1)] + u[static_cast<std::size_t>(n - 2)]);
    }
    u.resize(static_cast<std::size_t>(n_max + 1));
    return u;
}

/// Telescoping oracle for sum_{k<=n} F_k t^k.
///
/// Multiplies the truncated matrix polynomial S_n(t) by
/// P(t) = 1 - (ab+2) t^2 + t^4 entry by entry with plain polynomial
/// arithmetic and returns the coefficient matrices of the product, indices
/// 0..n+4. Everything except the four tail coefficients and the four head
/// coefficients must vanish.
inline std::vector<Mat2> telescoped_product(const Params& p, const std::vector<Mat2>& f_upto_n) {
    const Poly quartic{Rational{1}, Rational{0}, -(p.ab() + Rational{2}), Rational{0}, Rational{1}};
    std::vector<Rational> e11;
    std::vector<Rational> e12;
    std::vector<Rational> e21;
    std::vector<Rational> e22;
    for (const Mat2& f : f_upto_n) {
        e11.push_back(f.e11);
        e12.push_back(f.e12);
        e21.push_back(f.e21);
        e22.push_back(f.e22);
    }
    const Poly p11 = Poly(e11) * quartic;
    const Poly p12 = Poly(e12) * quartic;
    const Poly p21 = Poly(e21) * quartic;
    const Poly p22 = Poly(e22) * quartic;
    std::vector<Mat2> out(f_upto_n.size() + 4);
    for (std::size_t m = 0; m < out.size(); ++m) {
        out[m] = Mat2{p11.coeff(m), p12.coeff(m), p21.coeff(m), p22.coeff(m)};
    }
    return out;
}

/// The weighted-sum closed form exactly as printed, with -F_{n+2}/x^{n+2}.
inline Mat2 weighted_sum_as_printed(const Params& p, std::int64_t n, const Rational& x) {
    const auto f = f_table(p, n + 2);
    const auto at = [&](std::int64_t k) { return f[static_cast<std::size_t>(k)]; };
    const Mat2& f0 = f[0];
    const Mat2& f1 = f[1];
    Mat2 body = at(n - 1) * pow(x, -(n - 1)) - at(n + 1) * pow(x, -(n - 3)) + at(n) * pow(x, -n) -
                at(n + 2) * pow(x, -(n + 2)) + pow(x, 4) * f0 + pow(x, 3) * f1 -
                x * x * ((p.ab() + Rational{1}) * f0 - p.a() * f1) - x * (f1 - p.b() * f0);
    return body * inverse(sum_quartic(p, x));
}

}  // namespace bpfib::testing
