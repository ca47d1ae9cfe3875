#pragma once

#include <memory>

#include "bpfib/quad.hpp"
#include "bpfib/rational.hpp"

namespace bpfib {

/// The parameter pair (a, b) of a bi-periodic sequence, with the derived
/// constants ab and D = ab(ab + 4) cached.
///
/// Copies share one Q[sqrt(D)] context, so alpha and beta obtained from any
/// copy can be combined freely.
class Params {
public:
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& ab() const { return ab_; }
    const Rational& disc() const { return ctx_->disc; }
    const std::shared_ptr<const QuadContext>& context() const { return ctx_; }

    /// Lift a rational into this parameter set's quadratic ring.
    QuadExt quad(const Rational& rat, const Rational& irr = Rational{0}) const {
        return QuadExt(ctx_, rat, irr);
    }

    friend bool operator==(const Params& lhs, const Params& rhs) {
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
    }

private:
    friend Params make_params(Rational a, Rational b);
    Params(Rational a, Rational b);

    Rational a_;
    Rational b_;
    Rational ab_;
    std::shared_ptr<const QuadContext> ctx_;
};

/// Throws `Errc::ZeroParameter` if a or b is zero.
Params make_params(Rational a, Rational b);

/// alpha = ab/2 + sqrt(D)/2.
QuadExt quad_alpha(const Params& p);
/// beta = ab/2 - sqrt(D)/2.
QuadExt quad_beta(const Params& p);

}  // namespace bpfib
