#include "bpfib/poly.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "bpfib/error.hpp"

namespace bpfib {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { normalize(); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Poly(std::move(coeffs));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::int64_t Poly::degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::reflected(std::size_t d) const {
    if (!is_zero() && static_cast<std::int64_t>(d) < degree()) {
        throw Error(Errc::IndexOutOfRange, "reflection degree " + std::to_string(d) +
                                               " below polynomial degree " +
                                               std::to_string(degree()));
    }
    std::vector<Rational> out(d + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[d - i] = coeffs_[i];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) {
        c *= s;
    }
    normalize();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) {
        return os << "0";
    }
    bool first = true;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        const Rational& c = p.coefficients()[i];
        if (c.is_zero()) {
            continue;
        }
        os << (first ? "" : " + ") << "(" << c << ")";
        if (i > 0) {
            os << "x^" << i;
        }
        first = false;
    }
    return os;
}

}  // namespace bpfib
