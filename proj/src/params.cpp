#include "bpfib/params.hpp"

#include <utility>

#include "bpfib/error.hpp"

namespace bpfib {

Params::Params(Rational a, Rational b)
    : a_(std::move(a)), b_(std::move(b)), ab_(a_ * b_) {
    ctx_ = std::make_shared<const QuadContext>(QuadContext{ab_ * (ab_ + Rational{4})});
}

Params make_params(Rational a, Rational b) {
    if (a.is_zero() || b.is_zero()) {
        throw Error(Errc::ZeroParameter,
                    "a and b must be nonzero (got a=" + a.str() + ", b=" + b.str() + ")");
    }
    return Params(std::move(a), std::move(b));
}

QuadExt quad_alpha(const Params& p) {
    const Rational half(1, 2);
    return p.quad(p.ab() * half, half);
}

QuadExt quad_beta(const Params& p) {
    const Rational half(1, 2);
    return p.quad(p.ab() * half, -half);
}

}  // namespace bpfib
