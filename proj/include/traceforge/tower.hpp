#pragma once

#include "traceforge/forms.hpp"
#include "traceforge/matrix.hpp"
#include "traceforge/quadfield.hpp"

#include <string>

namespace traceforge {

// Element u + v*sqrt(g) of the quadratic extension k(sqrt g), with u, v in k
// and g a fixed non-square of k. Used for gluing matrices only.
class ExtScalar {
public:
    ExtScalar() : u_(0), v_(0), g_(1) {}
    ExtScalar(QuadFieldElement u, QuadFieldElement v, QuadFieldElement g)
        : u_(std::move(u)), v_(std::move(v)), g_(std::move(g)) {}
    /*implicit*/ ExtScalar(const QuadFieldElement& u) : u_(u), v_(0), g_(1) {}

    const QuadFieldElement& u() const { return u_; }
    const QuadFieldElement& v() const { return v_; }
    const QuadFieldElement& gen() const { return g_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool in_base() const { return v_.is_zero(); }

    // conjugation sqrt(g) -> -sqrt(g)
    ExtScalar conjugate() const { return ExtScalar(u_, -v_, g_); }

    ExtScalar operator-() const { return ExtScalar(-u_, -v_, g_); }
    friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b);
    friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b);
    friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b);
    friend ExtScalar operator/(const ExtScalar& a, const ExtScalar& b);
    friend bool operator==(const ExtScalar& a, const ExtScalar& b);

    std::string str() const;

private:
    QuadFieldElement u_, v_, g_;
};

using ExtMatrix = Matrix<ExtScalar>;

ExtMatrix ext_matrix_from_base(const Matrix<QuadFieldElement>& m, const QuadFieldElement& g);
ExtMatrix conjugate(const ExtMatrix& m);

enum class DefinitionField {
    Base,            // sigma(A) * A^-1 scalar: defined over k
    Extension,       // genuinely needs k(sqrt g)
    ReflectionTwist  // sigma(A) = c * A * rho: the k(sqrt g) case driven by the
                     // last-coordinate reflection
};

// Field of definition of the projective isometry induced by A, which carries
// f_source to a multiple of f_target (checked exactly). The reflection case is
// only probed when allow_reflection is set.
DefinitionField field_of_definition(const ExtMatrix& a, const DiagonalForm& f_source,
                                    const DiagonalForm& f_target, bool allow_reflection);

inline DefinitionField field_of_definition(const ExtMatrix& a, const DiagonalForm& f,
                                           bool allow_reflection = true) {
    return field_of_definition(a, f, f, allow_reflection);
}

}  // namespace traceforge
