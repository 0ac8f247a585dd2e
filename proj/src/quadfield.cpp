#include "traceforge/quadfield.hpp"

#include <stdexcept>

namespace traceforge {

namespace {

std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = sqrt(n);
    // boost's sqrt is the floor; adjust for rounding at boundaries
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rational> rational_sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto n = int_sqrt_exact(numerator(q));
    auto d = int_sqrt_exact(denominator(q));
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

bool is_squarefree_ge2(const Int& m) {
    if (m < 2) return false;
    Factorization f = factorize(m);
    for (const auto& [p, e] : f.factors)
        if (e > 1) return false;
    return true;
}

}  // namespace

FieldDescriptor FieldDescriptor::real_quadratic(const Int& m) {
    if (!is_squarefree_ge2(m))
        throw std::invalid_argument("FieldDescriptor: m must be squarefree and >= 2");
    return FieldDescriptor(m);
}

QuadFieldElement::QuadFieldElement(Rational x, Rational y, FieldDescriptor field)
    : x_(std::move(x)), y_(std::move(y)), field_(std::move(field)) {
    if (field_.is_rational() && y_ != 0)
        throw std::invalid_argument("QuadFieldElement: nonzero y over Q");
}

QuadFieldElement QuadFieldElement::sqrt_gen(const FieldDescriptor& f) {
    if (f.is_rational()) throw std::invalid_argument("sqrt_gen: field is Q");
    return QuadFieldElement(0, 1, f);
}

FieldDescriptor common_field(const QuadFieldElement& a, const QuadFieldElement& b) {
    if (a.field() == b.field()) return a.field();
    if (a.field().is_rational()) return b.field();
    if (b.field().is_rational()) return a.field();
    throw std::invalid_argument("QuadFieldElement: mixed quadratic fields");
}

QuadFieldElement promote(const QuadFieldElement& e, const FieldDescriptor& f) {
    if (e.field() == f) return e;
    if (!e.field().is_rational() && !e.is_rational_value())
        throw std::invalid_argument("promote: incompatible fields");
    return QuadFieldElement(e.x(), 0, f);
}

QuadFieldElement QuadFieldElement::conjugate() const {
    return QuadFieldElement(x_, -y_, field_);
}

int QuadFieldElement::sign() const {
    int sx = x_ == 0 ? 0 : (x_ > 0 ? 1 : -1);
    int sy = y_ == 0 ? 0 : (y_ > 0 ? 1 : -1);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // x and y*sqrt(m) pull in opposite directions; compare squares
    Rational lhs = x_ * x_, rhs = field_.m() * y_ * y_;
    if (lhs == rhs) return 0;  // cannot happen for m nonsquare, kept for safety
    return lhs > rhs ? sx : sy;
}

bool QuadFieldElement::is_totally_positive() const {
    if (sign() <= 0) return false;
    return field_.is_rational() || sign_conjugate() > 0;
}

std::optional<QuadFieldElement> QuadFieldElement::sqrt_in_field() const {
    // Solve (u + v sqrt(m))^2 = x + y sqrt(m): u^2 + m v^2 = x, 2uv = y.
    if (is_zero()) return QuadFieldElement(0, 0, field_);
    const Int& m = field_.m();
    if (field_.is_rational()) {
        auto r = rational_sqrt_exact(x_);
        if (!r) return std::nullopt;
        return QuadFieldElement(*r, 0, field_);
    }
    if (y_ == 0) {
        if (auto u = rational_sqrt_exact(x_)) return QuadFieldElement(*u, 0, field_);
        if (auto v = rational_sqrt_exact(x_ / m)) return QuadFieldElement(0, *v, field_);
        return std::nullopt;
    }
    auto n = rational_sqrt_exact(norm());
    if (!n) return std::nullopt;
    for (int s : {1, -1}) {
        Rational t = (x_ + s * *n) / (2 * m);  // candidate v^2
        auto v = rational_sqrt_exact(t);
        if (!v || *v == 0) continue;
        Rational u = y_ / (2 * *v);
        QuadFieldElement r(u, *v, field_);
        if (r * r == *this) return r;
    }
    return std::nullopt;
}

QuadFieldElement QuadFieldElement::operator-() const {
    return QuadFieldElement(-x_, -y_, field_);
}

QuadFieldElement QuadFieldElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("QuadFieldElement: division by zero");
    Rational n = norm();
    return QuadFieldElement(x_ / n, -y_ / n, field_);
}

QuadFieldElement operator+(const QuadFieldElement& a, const QuadFieldElement& b) {
    FieldDescriptor f = common_field(a, b);
    return QuadFieldElement(a.x() + b.x(), a.y() + b.y(), f);
}

QuadFieldElement operator-(const QuadFieldElement& a, const QuadFieldElement& b) {
    return a + (-b);
}

QuadFieldElement operator*(const QuadFieldElement& a, const QuadFieldElement& b) {
    FieldDescriptor f = common_field(a, b);
    return QuadFieldElement(a.x() * b.x() + f.m() * a.y() * b.y(),
                            a.x() * b.y() + a.y() * b.x(), f);
}

QuadFieldElement operator/(const QuadFieldElement& a, const QuadFieldElement& b) {
    FieldDescriptor f = common_field(a, b);
    return promote(a, f) * promote(b, f).inverse();
}

bool operator==(const QuadFieldElement& a, const QuadFieldElement& b) {
    return a.x() == b.x() && a.y() == b.y();
}

std::string QuadFieldElement::str() const {
    if (y_ == 0) return to_string(x_);
    std::string s;
    if (x_ != 0) s = to_string(x_) + (y_ > 0 ? "+" : "");
    if (y_ == 1)
        s += "sqrt(" + field_.m().str() + ")";
    else if (y_ == -1)
        s += "-sqrt(" + field_.m().str() + ")";
    else
        s += to_string(y_) + "*sqrt(" + field_.m().str() + ")";
    return s;
}

}  // namespace traceforge
