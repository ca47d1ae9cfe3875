#include "bpfib/sequence.hpp"

#include <string>
#include <utility>

#include "bpfib/error.hpp"
#include "bpfib/mat2.hpp"
#include "bpfib/matrixseq.hpp"

namespace bpfib {

namespace {

void require_index(std::int64_t n, std::int64_t lowest) {
    if (n < lowest) {
        throw Error(Errc::IndexOutOfRange,
                    "index " + std::to_string(n) + " below " + std::to_string(lowest));
    }
}

Mat2 mat_pow(Mat2 base, std::uint64_t e) {
    Mat2 result = Mat2::identity();
    for (; e != 0; e >>= 1) {
        if (e & 1U) {
            result = result * base;
        }
        if (e > 1) {
            base = base * base;
        }
    }
    return result;
}

}  // namespace

int epsilon(std::int64_t n) noexcept { return static_cast<int>(((n % 2) + 2) % 2); }

const Rational& step_multiplier(const Params& p, std::int64_t n) noexcept {
    return epsilon(n) == 0 ? p.a() : p.b();
}

Rational q_recurrence(const Params& p, std::int64_t n) {
    require_index(n, -1);
    if (n == -1) {
        return Rational{1};
    }
    Rational prev{1};  // q_{-1}
    Rational cur{0};   // q_0
    for (std::int64_t k = 1; k <= n; ++k) {
        Rational next = step_multiplier(p, k) * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational q_fast(const Params& p, std::int64_t n) {
    require_index(n, -1);
    if (n == -1) {
        return Rational{1};
    }
    const int parity = epsilon(n);
    const std::int64_t m = n / 2;
    // (x_0, x_1) = (q_0, q_2) or (q_1, q_3)
    Rational x0 = parity == 0 ? Rational{0} : Rational{1};
    Rational x1 = parity == 0 ? p.a() : p.ab() + Rational{1};
    if (m == 0) {
        return x0;
    }
    const Mat2 companion{p.ab() + Rational{2}, Rational{-1}, Rational{1}, Rational{0}};
    const Mat2 step = mat_pow(companion, static_cast<std::uint64_t>(m - 1));
    return step.e11 * x1 + step.e12 * x0;
}

Rational q_binet(const Params& p, std::int64_t n) {
    require_index(n, 0);
    return f_binet(p, n).e21;
}

std::vector<Rational> q_window(const Params& p, std::int64_t first, std::int64_t last) {
    require_index(first, -1);
    std::vector<Rational> out;
    if (last < first) {
        return out;
    }
    out.reserve(static_cast<std::size_t>(last - first + 1));
    out.push_back(q_fast(p, first));
    if (last > first) {
        out.push_back(q_fast(p, first + 1));
    }
    for (std::int64_t k = first + 2; k <= last; ++k) {
        const std::size_t i = out.size();
        out.push_back(step_multiplier(p, k) * out[i - 1] + out[i - 2]);
    }
    return out;
}

QTable::QTable(const Params& p, std::int64_t n_max) {
    require_index(n_max, -1);
    values_.reserve(static_cast<std::size_t>(n_max + 2));
    values_.emplace_back(1);
    if (n_max >= 0) {
        values_.emplace_back(0);
    }
    for (std::int64_t k = 1; k <= n_max; ++k) {
        const std::size_t i = values_.size();
        values_.push_back(step_multiplier(p, k) * values_[i - 1] + values_[i - 2]);
    }
}

const Rational& QTable::operator()(std::int64_t n) const {
    if (n < -1 || n > n_max()) {
        throw Error(Errc::IndexOutOfRange, "q table has no index " + std::to_string(n));
    }
    return values_[static_cast<std::size_t>(n + 1)];
}

}  // namespace bpfib
