#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bpfib/params.hpp"

namespace bpfib {

/// Identities checked by `verify`, in report order.
enum class Identity {
    ClosedForm,
    Determinant,
    Cassini,
    Binet,
    Gf,
    SumI,
    SumII,
    Cor2,
    PresetFib,
    PresetPell,
    PresetK,
};

inline constexpr std::array kAllIdentities{
    Identity::ClosedForm, Identity::Determinant, Identity::Cassini, Identity::Binet,
    Identity::Gf,         Identity::SumI,        Identity::SumII,   Identity::Cor2,
    Identity::PresetFib,  Identity::PresetPell,  Identity::PresetK,
};

std::string_view to_string(Identity id);
std::optional<Identity> parse_identity(std::string_view name);

struct VerifyFailure {
    std::int64_t index = 0;
    std::string expected;
    std::string got;
    std::string detail;  // e.g. the evaluation point of a weighted sum
};

struct VerifyReport {
    Identity identity = Identity::ClosedForm;
    Rational a;
    Rational b;
    std::int64_t first = 0;
    std::int64_t last = 0;
    std::vector<VerifyFailure> failures;
    bool skipped = false;
    std::string note;

    bool passed() const { return failures.empty(); }
    /// "passed", "failed" or "skipped: <reason>".
    std::string status() const;
};

/// Default n_max used by the CLI.
inline constexpr std::int64_t kDefaultVerifyMax = 128;

/// Five nonzero rational evaluation points for weighted sums at these
/// parameters: the first five of a fixed candidate list at which
/// 1 - (ab+2)x^2 + x^4 does not vanish.
std::vector<Rational> weighted_sum_points(const Params& p);

/// Check one identity over indices up to n_max (n_max >= 4). Preset
/// identities use their own fixed parameters; `k` selects the k-Fibonacci one.
VerifyReport verify_identity(Identity id, const Params& p, std::int64_t n_max,
                             std::int64_t k = 3);

/// All identities, one report each, in `kAllIdentities` order. Checks run
/// concurrently; the order of the result does not depend on scheduling.
std::vector<VerifyReport> run_all_verifications(const Params& p, std::int64_t n_max,
                                                std::int64_t k = 3);

void to_json(nlohmann::json& j, const VerifyReport& r);

}  // namespace bpfib
