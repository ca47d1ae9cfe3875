#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>

#include "bpfib/rational.hpp"

namespace bpfib {

/// The ambient ring Q[sqrt(D)] for one fixed discriminant D.
///
/// Elements keep a handle to the context that created them; combining
/// elements from two different contexts throws `Errc::ContextMismatch`.
/// D may be a perfect rational square (or zero), in which case the ring has
/// zero divisors and only elements of nonzero norm are invertible.
struct QuadContext {
    Rational disc;
};

class QuadExt {
public:
    /// rat + irr * sqrt(D) in the given context.
    QuadExt(std::shared_ptr<const QuadContext> ctx, Rational rat, Rational irr = Rational{0});

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }
    const Rational& disc() const { return ctx_->disc; }
    const std::shared_ptr<const QuadContext>& context() const { return ctx_; }

    bool is_rational() const { return irr_.is_zero(); }
    bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }

    QuadExt one() const { return {ctx_, Rational{1}}; }
    QuadExt lift(const Rational& x) const { return {ctx_, x}; }

    QuadExt conjugate() const { return {ctx_, rat_, -irr_}; }
    /// x^2 - D y^2.
    Rational norm() const;

    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);
    QuadExt& operator*=(const Rational& rhs);

    friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
    friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
    friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
    friend QuadExt operator*(QuadExt lhs, const Rational& rhs) { return lhs *= rhs; }
    friend QuadExt operator*(const Rational& lhs, QuadExt rhs) { return rhs *= lhs; }
    QuadExt operator-() const { return {ctx_, -rat_, -irr_}; }

    /// Same context and same coordinates.
    friend bool operator==(const QuadExt& lhs, const QuadExt& rhs);

private:
    void require_same_context(const QuadExt& other) const;

    std::shared_ptr<const QuadContext> ctx_;
    Rational rat_;
    Rational irr_;
};

QuadExt quad_pow(const QuadExt& x, std::int64_t n);

/// Exact quotient; throws `Errc::NonInvertible` when norm(y) == 0.
QuadExt quad_div(const QuadExt& x, const QuadExt& y);

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace bpfib
