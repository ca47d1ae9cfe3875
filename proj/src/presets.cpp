#include "bpfib/presets.hpp"

#include <string>

#include "bpfib/error.hpp"
#include "bpfib/sequence.hpp"

namespace bpfib {

std::optional<Preset> parse_preset(std::string_view name) {
    if (name == "fibonacci") {
        return Preset::Fibonacci;
    }
    if (name == "pell") {
        return Preset::Pell;
    }
    if (name == "k-fibonacci") {
        return Preset::KFibonacci;
    }
    return std::nullopt;
}

std::string_view to_string(Preset which) {
    switch (which) {
        case Preset::Fibonacci: return "fibonacci";
        case Preset::Pell: return "pell";
        case Preset::KFibonacci: return "k-fibonacci";
    }
    return "unknown";
}

namespace {

std::int64_t preset_multiplier(Preset which, std::int64_t k) {
    switch (which) {
        case Preset::Fibonacci: return 1;
        case Preset::Pell: return 2;
        case Preset::KFibonacci: break;
    }
    if (k == 0) {
        throw Error(Errc::ZeroParameter, "k-fibonacci needs a nonzero k");
    }
    return k;
}

}  // namespace

Params preset_params(Preset which, std::int64_t k) {
    const Rational m{static_cast<long>(preset_multiplier(which, k))};
    return make_params(m, m);
}

std::vector<mpz_class> classical_sequence(std::int64_t k, std::int64_t n_max) {
    std::vector<mpz_class> u;
    if (n_max < 0) {
        return u;
    }
    u.reserve(static_cast<std::size_t>(n_max + 1));
    u.emplace_back(0);
    if (n_max >= 1) {
        u.emplace_back(1);
    }
    const mpz_class mult(static_cast<long>(k));
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        u.emplace_back(mult * u[i - 1] + u[i - 2]);
    }
    return u;
}

std::vector<std::int64_t> preset_mismatches(Preset which, std::int64_t n_max, std::int64_t k) {
    const Params p = preset_params(which, k);
    const auto classical = classical_sequence(preset_multiplier(which, k), n_max);
    const QTable q(p, n_max);
    std::vector<std::int64_t> bad;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (q(n) != Rational(classical[static_cast<std::size_t>(n)])) {
            bad.push_back(n);
        }
    }
    return bad;
}

}  // namespace bpfib
