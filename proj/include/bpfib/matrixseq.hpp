#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bpfib/mat2.hpp"
#include "bpfib/params.hpp"
#include "bpfib/quad.hpp"

namespace bpfib {

/// (F_0, F_1) = (I, [[b, b/a], [1, 0]]).
std::pair<Mat2, Mat2> f_initial(const Params& p);

/// F_n by iterating F_n = m_n F_{n-1} + F_{n-2}, m_n = a (n even) or b (n odd).
Mat2 f_recurrence(const Params& p, std::int64_t n);

/// F_0..F_{n_max} by the same iteration.
std::vector<Mat2> f_table(const Params& p, std::int64_t n_max);

/// F_n assembled from scalar terms:
///   [[(b/a)^eps q_{n+1}, (b/a) q_n], [q_n, (b/a)^eps q_{n-1}]], eps = epsilon(n).
Mat2 f_closed(const Params& p, std::int64_t n);

/// Same assembly from caller-supplied q_{n-1}, q_n, q_{n+1}.
Mat2 f_closed_from(const Params& p, std::int64_t n, const Rational& q_prev, const Rational& q,
                   const Rational& q_next);

/// F_first..F_last via `f_closed_from` over one `q_window`.
std::vector<Mat2> f_window(const Params& p, std::int64_t first, std::int64_t last);

/// det(F_n) with F_n taken from the recurrence.
Rational f_det(const Params& p, std::int64_t n);

/// (-b/a)^epsilon(n).
Rational det_expected(const Params& p, std::int64_t n);

struct CassiniSides {
    Rational lhs;
    Rational rhs;
};

/// lhs = a^{1-eps} b^eps q_{n+1} q_{n-1} - a^eps b^{1-eps} q_n^2, rhs = a(-1)^n.
/// Requires n >= 1.
CassiniSides cassini_check(const Params& p, std::int64_t n);
CassiniSides cassini_from(const Params& p, std::int64_t n, const Rational& q_prev,
                          const Rational& q, const Rational& q_next);

struct QuadMat2 {
    QuadExt e11;
    QuadExt e12;
    QuadExt e21;
    QuadExt e22;

    bool is_rational() const {
        return e11.is_rational() && e12.is_rational() && e21.is_rational() && e22.is_rational();
    }
};

/// Coefficients of F_n = A1 (alpha^n - beta^n) + B1 (alpha^{2h+2} - beta^{2h+2}),
/// h = floor(n/2):
///   A1 = M / ((ab)^h (alpha - beta)), M = F_1 - b F_0 (n odd) or a F_1 - (1 + ab) F_0 (n even)
///   B1 = b^eps F_0 / ((ab)^{h+1} (alpha - beta))
struct BinetCoefficients {
    QuadMat2 a1;
    QuadMat2 b1;
};

/// Throws `Errc::DegenerateDiscriminant` when D == 0.
BinetCoefficients binet_coefficients(const Params& p, std::int64_t n);

/// The Binet formula evaluated in Q[sqrt(D)], before the rationality check.
QuadMat2 f_binet_quad(const Params& p, std::int64_t n);

/// F_n from the Binet formula. Throws `Errc::DegenerateDiscriminant` when D == 0
/// and `Errc::InternalIrrationalResidue` if any entry keeps a sqrt(D) part.
Mat2 f_binet(const Params& p, std::int64_t n);

}  // namespace bpfib
