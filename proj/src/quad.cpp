#include "bpfib/quad.hpp"

#include <ostream>
#include <utility>

#include "bpfib/error.hpp"

namespace bpfib {

QuadExt::QuadExt(std::shared_ptr<const QuadContext> ctx, Rational rat, Rational irr)
    : ctx_(std::move(ctx)), rat_(std::move(rat)), irr_(std::move(irr)) {
    if (!ctx_) {
        throw Error(Errc::ContextMismatch, "quadratic element without a context");
    }
}

void QuadExt::require_same_context(const QuadExt& other) const {
    if (ctx_ != other.ctx_) {
        throw Error(Errc::ContextMismatch, "elements of Q[sqrt(" + ctx_->disc.str() +
                                               ")] and Q[sqrt(" + other.ctx_->disc.str() +
                                               ")] mixed");
    }
}

Rational QuadExt::norm() const { return rat_ * rat_ - ctx_->disc * irr_ * irr_; }

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
    require_same_context(rhs);
    rat_ += rhs.rat_;
    irr_ += rhs.irr_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
    require_same_context(rhs);
    rat_ -= rhs.rat_;
    irr_ -= rhs.irr_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
    require_same_context(rhs);
    Rational rat = rat_ * rhs.rat_ + ctx_->disc * irr_ * rhs.irr_;
    Rational irr = rat_ * rhs.irr_ + irr_ * rhs.rat_;
    rat_ = std::move(rat);
    irr_ = std::move(irr);
    return *this;
}

QuadExt& QuadExt::operator*=(const Rational& rhs) {
    rat_ *= rhs;
    irr_ *= rhs;
    return *this;
}

bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
    return lhs.ctx_ == rhs.ctx_ && lhs.rat_ == rhs.rat_ && lhs.irr_ == rhs.irr_;
}

QuadExt quad_pow(const QuadExt& x, std::int64_t n) {
    if (n < 0) {
        throw Error(Errc::IndexOutOfRange, "negative exponent " + std::to_string(n));
    }
    QuadExt result = x.one();
    QuadExt base = x;
    for (auto e = static_cast<std::uint64_t>(n); e != 0; e >>= 1) {
        if (e & 1U) {
            result *= base;
        }
        if (e > 1) {
            base *= base;
        }
    }
    return result;
}

QuadExt quad_div(const QuadExt& x, const QuadExt& y) {
    const Rational n = y.norm();
    if (n.is_zero()) {
        throw Error(Errc::NonInvertible,
                    "divisor " + y.rat().str() + " + " + y.irr().str() + "*sqrt(" +
                        y.disc().str() + ") has zero norm");
    }
    // x / y = x * conj(y) / norm(y)
    return x * y.conjugate() * inverse(n);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
    return os << x.rat() << " + " << x.irr() << "*sqrt(" << x.disc() << ")";
}

}  // namespace bpfib
