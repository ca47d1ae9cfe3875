#include "bpfib/matrixseq.hpp"

#include <string>

#include "bpfib/error.hpp"
#include "bpfib/sequence.hpp"

namespace bpfib {

namespace {

void require_index(std::int64_t n, std::int64_t lowest) {
    if (n < lowest) {
        throw Error(Errc::IndexOutOfRange,
                    "index " + std::to_string(n) + " below " + std::to_string(lowest));
    }
}

}  // namespace

std::pair<Mat2, Mat2> f_initial(const Params& p) {
    return {Mat2::identity(), Mat2{p.b(), p.b() / p.a(), Rational{1}, Rational{0}}};
}

Mat2 f_recurrence(const Params& p, std::int64_t n) {
    require_index(n, 0);
    auto [prev, cur] = f_initial(p);
    if (n == 0) {
        return prev;
    }
    for (std::int64_t k = 2; k <= n; ++k) {
        Mat2 next = step_multiplier(p, k) * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Mat2> f_table(const Params& p, std::int64_t n_max) {
    require_index(n_max, 0);
    std::vector<Mat2> out;
    out.reserve(static_cast<std::size_t>(n_max + 1));
    auto [f0, f1] = f_initial(p);
    out.push_back(std::move(f0));
    if (n_max >= 1) {
        out.push_back(std::move(f1));
    }
    for (std::int64_t k = 2; k <= n_max; ++k) {
        const auto i = static_cast<std::size_t>(k);
        out.push_back(step_multiplier(p, k) * out[i - 1] + out[i - 2]);
    }
    return out;
}

Mat2 f_closed_from(const Params& p, std::int64_t n, const Rational& q_prev, const Rational& q,
                   const Rational& q_next) {
    const Rational ratio = p.b() / p.a();
    const Rational diag = epsilon(n) == 1 ? ratio : Rational{1};
    return {diag * q_next, ratio * q, q, diag * q_prev};
}

Mat2 f_closed(const Params& p, std::int64_t n) {
    require_index(n, 0);
    const auto q = q_window(p, n - 1, n + 1);
    return f_closed_from(p, n, q[0], q[1], q[2]);
}

std::vector<Mat2> f_window(const Params& p, std::int64_t first, std::int64_t last) {
    require_index(first, 0);
    std::vector<Mat2> out;
    if (last < first) {
        return out;
    }
    const auto q = q_window(p, first - 1, last + 1);
    out.reserve(q.size() - 2);
    for (std::size_t i = 1; i + 1 < q.size(); ++i) {
        const auto n = first + static_cast<std::int64_t>(i) - 1;
        out.push_back(f_closed_from(p, n, q[i - 1], q[i], q[i + 1]));
    }
    return out;
}

Rational f_det(const Params& p, std::int64_t n) { return f_recurrence(p, n).det(); }

Rational det_expected(const Params& p, std::int64_t n) {
    return epsilon(n) == 1 ? -(p.b() / p.a()) : Rational{1};
}

CassiniSides cassini_from(const Params& p, std::int64_t n, const Rational& q_prev,
                          const Rational& q, const Rational& q_next) {
    const bool odd = epsilon(n) == 1;
    // a^{1-eps} b^eps and a^eps b^{1-eps}
    const Rational& outer = odd ? p.b() : p.a();
    const Rational& inner = odd ? p.a() : p.b();
    Rational lhs = outer * q_next * q_prev - inner * q * q;
    Rational rhs = odd ? -p.a() : p.a();
    return {std::move(lhs), std::move(rhs)};
}

CassiniSides cassini_check(const Params& p, std::int64_t n) {
    require_index(n, 1);
    const auto q = q_window(p, n - 1, n + 1);
    return cassini_from(p, n, q[0], q[1], q[2]);
}

}  // namespace bpfib
