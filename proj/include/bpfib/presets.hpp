#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "bpfib/params.hpp"

namespace bpfib {

/// Classical families recovered by fixing a = b.
enum class Preset { Fibonacci, Pell, KFibonacci };

/// "fibonacci", "pell" or "k-fibonacci".
std::optional<Preset> parse_preset(std::string_view name);
std::string_view to_string(Preset which);

/// (1,1), (2,2) or (k,k).
Params preset_params(Preset which, std::int64_t k = 0);

/// u_0 = 0, u_1 = 1, u_n = k u_{n-1} + u_{n-2}, returned for 0 <= n <= n_max.
/// Plain integer recurrence, independent of the bi-periodic machinery.
std::vector<mpz_class> classical_sequence(std::int64_t k, std::int64_t n_max);

/// Indices 0..n_max where q_n at the preset parameters differs from the
/// classical sequence.
std::vector<std::int64_t> preset_mismatches(Preset which, std::int64_t n_max,
                                            std::int64_t k = 0);

}  // namespace bpfib
