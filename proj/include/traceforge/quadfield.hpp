#pragma once

#include "traceforge/rational.hpp"

#include <optional>
#include <string>

namespace traceforge {

// The coefficient field: Q, or the real quadratic field Q(sqrt(m)) with m
// squarefree >= 2. Q is the degenerate case m = 1 so every operation is
// written once for both.
class FieldDescriptor {
public:
    static FieldDescriptor rationals() { return FieldDescriptor(1); }
    static FieldDescriptor real_quadratic(const Int& m);

    bool is_rational() const { return m_ == 1; }
    const Int& m() const { return m_; }

    bool operator==(const FieldDescriptor&) const = default;

private:
    explicit FieldDescriptor(Int m) : m_(std::move(m)) {}
    Int m_;
};

// x + y*sqrt(m); y = 0 mandatory over Q. All arithmetic is exact.
class QuadFieldElement {
public:
    QuadFieldElement() : x_(0), y_(0), field_(FieldDescriptor::rationals()) {}
    QuadFieldElement(Rational x, Rational y, FieldDescriptor field);
    /*implicit*/ QuadFieldElement(const Rational& x)
        : x_(x), y_(0), field_(FieldDescriptor::rationals()) {}
    /*implicit*/ QuadFieldElement(int x) : QuadFieldElement(Rational(x)) {}

    static QuadFieldElement sqrt_gen(const FieldDescriptor& f);  // sqrt(m) itself

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const FieldDescriptor& field() const { return field_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational_value() const { return y_ == 0; }

    QuadFieldElement conjugate() const;
    Rational norm() const { return x_ * x_ - field_.m() * y_ * y_; }
    Rational trace() const { return 2 * x_; }

    // Sign under the identity embedding (sqrt(m) > 0); exact.
    int sign() const;
    int sign_conjugate() const { return conjugate().sign(); }
    bool is_totally_positive() const;

    // Exact square root in the field, if one exists.
    std::optional<QuadFieldElement> sqrt_in_field() const;

    QuadFieldElement operator-() const;
    QuadFieldElement inverse() const;

    friend QuadFieldElement operator+(const QuadFieldElement& a, const QuadFieldElement& b);
    friend QuadFieldElement operator-(const QuadFieldElement& a, const QuadFieldElement& b);
    friend QuadFieldElement operator*(const QuadFieldElement& a, const QuadFieldElement& b);
    friend QuadFieldElement operator/(const QuadFieldElement& a, const QuadFieldElement& b);
    friend bool operator==(const QuadFieldElement& a, const QuadFieldElement& b);

    std::string str() const;

private:
    Rational x_, y_;
    FieldDescriptor field_;
};

// Promote a and b to a common field; throws on a genuine mismatch
// (two distinct quadratic fields).
FieldDescriptor common_field(const QuadFieldElement& a, const QuadFieldElement& b);
QuadFieldElement promote(const QuadFieldElement& e, const FieldDescriptor& f);

inline QuadFieldElement qf_conjugate(const QuadFieldElement& e) { return e.conjugate(); }
inline std::optional<QuadFieldElement> qf_is_square(const QuadFieldElement& e) {
    return e.sqrt_in_field();
}
inline bool is_totally_positive(const QuadFieldElement& e) { return e.is_totally_positive(); }

}  // namespace traceforge
