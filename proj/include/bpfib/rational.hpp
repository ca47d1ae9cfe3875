#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bpfib {

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
///
/// Backed by GMP's mpq_t. Every operation leaves the value canonical, so
/// equality is a plain field comparison. Division by zero throws
/// `Error{Errc::DivisionByZero}` instead of trapping.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    Rational(const mpz_class& numerator, const mpz_class& denominator);

    /// Accepts "p", "-p", "+p", "p/q" and signed "p/q" with decimal digits.
    static Rational parse(std::string_view text);

    std::string str() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

Rational inverse(const Rational& x);

/// x^e for any integer e; negative exponents require x != 0.
Rational pow(const Rational& x, std::int64_t exponent);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace bpfib
