#pragma once

#include <cstdint>
#include <vector>

#include "bpfib/params.hpp"
#include "bpfib/rational.hpp"

namespace bpfib {

/// Parity indicator n - 2*floor(n/2), so epsilon(-1) == 1.
int epsilon(std::int64_t n) noexcept;

/// Multiplier of the alternating recurrence at step n: a for even n, b for odd n.
const Rational& step_multiplier(const Params& p, std::int64_t n) noexcept;

/// q_n by direct iteration of the alternating recurrence from
/// q_{-1} = 1, q_0 = 0, q_1 = 1. Valid for n >= -1.
Rational q_recurrence(const Params& p, std::int64_t n);

/// q_n in O(log n) ring operations.
///
/// Each parity class obeys x_{k+1} = (ab + 2) x_k - x_{k-1} with
/// x_k = q_{2k + parity}; the companion matrix of X^2 - (ab+2)X + 1 is raised
/// to a power and applied to the seeds (q_0, q_2) or (q_1, q_3).
Rational q_fast(const Params& p, std::int64_t n);

/// q_n read off entry (2,1) of the Binet-evaluated matrix. Requires n >= 0
/// and D != 0.
Rational q_binet(const Params& p, std::int64_t n);

/// Consecutive values q_first..q_last. Seeds come from `q_fast`, the rest from
/// the recurrence, so the cost is O(log first + (last - first)).
std::vector<Rational> q_window(const Params& p, std::int64_t first, std::int64_t last);

/// q_{-1}..q_{n_max} by iteration, addressable by sequence index.
class QTable {
public:
    QTable(const Params& p, std::int64_t n_max);

    const Rational& operator()(std::int64_t n) const;
    std::int64_t n_max() const { return static_cast<std::int64_t>(values_.size()) - 2; }

private:
    std::vector<Rational> values_;
};

}  // namespace bpfib
