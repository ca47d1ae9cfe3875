#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bpfib {

enum class Errc {
    ZeroParameter,
    IndexOutOfRange,
    DivisionByZero,
    NonInvertible,
    DegenerateDiscriminant,
    InternalIrrationalResidue,
    NonUnitDenominator,
    ZeroEvaluationPoint,
    SingularDenominator,
    ParseError,
    ContextMismatch,
};

std::string_view to_string(Errc code) noexcept;

/// Every library failure is reported through this type; `code()` names the
/// condition so callers can branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace bpfib
