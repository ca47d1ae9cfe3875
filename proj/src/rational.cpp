#include "bpfib/rational.hpp"

#include <cctype>
#include <ostream>

#include "bpfib/error.hpp"

namespace bpfib {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::ZeroParameter: return "ZeroParameter";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NonInvertible: return "NonInvertible";
        case Errc::DegenerateDiscriminant: return "DegenerateDiscriminant";
        case Errc::InternalIrrationalResidue: return "InternalIrrationalResidue";
        case Errc::NonUnitDenominator: return "NonUnitDenominator";
        case Errc::ZeroEvaluationPoint: return "ZeroEvaluationPoint";
        case Errc::SingularDenominator: return "SingularDenominator";
        case Errc::ParseError: return "ParseError";
        case Errc::ContextMismatch: return "ContextMismatch";
    }
    return "Unknown";
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : value_(numerator, denominator) {
    if (denominator == 0) {
        throw Error(Errc::DivisionByZero, "rational with zero denominator");
    }
    value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw Error(Errc::ParseError, "not a rational: \"" + std::string(text) + "\"");
    }
    mpz_class num(std::string(num_text), 10);
    const mpz_class den(std::string(den_text), 10);
    if (den == 0) {
        throw Error(Errc::DivisionByZero, "zero denominator in \"" + std::string(text) + "\"");
    }
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw Error(Errc::DivisionByZero, "division of " + str() + " by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
}

Rational inverse(const Rational& x) { return Rational(1) / x; }

Rational pow(const Rational& x, std::int64_t exponent) {
    if (exponent < 0) {
        return pow(inverse(x), -exponent);
    }
    mpz_class num;
    mpz_class den;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), e);
    // Powers of coprime integers stay coprime, so no reduction is needed.
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace bpfib
