#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "bpfib/rational.hpp"

namespace bpfib::cli {

enum class Command { Q, Matrix, Det, Cassini, Binet, Gf, Sum, Wsum, Verify, Preset };
enum class Format { Text, Json };

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::Q;
    Rational a{1};
    Rational b{1};
    std::int64_t n = 0;
    std::int64_t n_max = 128;
    std::optional<Rational> x;
    std::size_t order = 64;
    Format format = Format::Text;
    std::string method;           // q: recurrence|fast|binet; matrix: recurrence|closed|binet
    std::string identity = "all";  // verify
    std::string which;            // preset
    std::int64_t k = 3;
    bool reciprocal = false;  // gf: expand the t = 1/x form instead
};

/// Executes a validated configuration. Results go to `out` only if the whole
/// command succeeds; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name), validates it and calls `run`.
/// Usage errors name the offending flag and return `kExitUsage`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bpfib::cli
