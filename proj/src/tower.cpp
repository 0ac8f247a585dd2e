#include "traceforge/tower.hpp"

#include <stdexcept>

namespace traceforge {

namespace {

QuadFieldElement merge_gen(const ExtScalar& a, const ExtScalar& b) {
    if (a.in_base()) return b.gen();
    if (b.in_base()) return a.gen();
    if (a.gen() == b.gen()) return a.gen();
    throw std::invalid_argument("ExtScalar: mixed extension generators");
}

}  // namespace

ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
    return ExtScalar(a.u() + b.u(), a.v() + b.v(), merge_gen(a, b));
}

ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) { return a + (-b); }

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
    QuadFieldElement g = merge_gen(a, b);
    return ExtScalar(a.u() * b.u() + g * a.v() * b.v(), a.u() * b.v() + a.v() * b.u(), g);
}

ExtScalar operator/(const ExtScalar& a, const ExtScalar& b) {
    if (b.is_zero()) throw std::invalid_argument("ExtScalar: division by zero");
    QuadFieldElement g = merge_gen(a, b);
    QuadFieldElement n = b.u() * b.u() - g * b.v() * b.v();
    if (n.is_zero()) throw std::invalid_argument("ExtScalar: generator is a square (zero norm)");
    ExtScalar inv(b.u() / n, -(b.v() / n), g);
    return a * inv;
}

bool operator==(const ExtScalar& a, const ExtScalar& b) {
    return a.u() == b.u() && a.v() == b.v();
}

std::string ExtScalar::str() const {
    if (v_.is_zero()) return u_.str();
    std::string s;
    if (!u_.is_zero()) s = u_.str() + " + ";
    return s + "(" + v_.str() + ")*sqrt(" + g_.str() + ")";
}

ExtMatrix ext_matrix_from_base(const Matrix<QuadFieldElement>& m, const QuadFieldElement& g) {
    ExtMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = ExtScalar(m(i, j), QuadFieldElement(0), g);
    return r;
}

ExtMatrix conjugate(const ExtMatrix& m) {
    ExtMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conjugate();
    return r;
}

DefinitionField field_of_definition(const ExtMatrix& a, const DiagonalForm& f_source,
                                    const DiagonalForm& f_target, bool allow_reflection) {
    std::size_t n = f_source.rank();
    if (a.rows() != n || a.cols() != n || f_target.rank() != n)
        throw std::invalid_argument("field_of_definition: shape mismatch");

    // similitude check: A^T * D_target * A = lambda * D_source
    ExtMatrix d_tgt(n, n), d_src(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        d_tgt(i, i) = ExtScalar(promote(f_target.entries()[i], f_target.field()));
        d_src(i, i) = ExtScalar(promote(f_source.entries()[i], f_source.field()));
    }
    ExtMatrix pulled = a.transpose() * d_tgt * a;
    ExtScalar lambda = pulled(0, 0) / d_src(0, 0);
    if (lambda.is_zero() || !(pulled == d_src.scaled(lambda)))
        throw std::invalid_argument("field_of_definition: A is not a similitude of the forms");

    ExtMatrix m = a.inverse() * conjugate(a);
    ExtScalar c = m(0, 0);
    auto matches = [&](bool flip_last) {
        if (c.is_zero()) return false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ExtScalar want;
                if (i == j) want = (flip_last && i == n - 1) ? -c : c;
                if (!(m(i, j) == want)) return false;
            }
        return true;
    };
    if (matches(false)) return DefinitionField::Base;
    if (allow_reflection && matches(true)) return DefinitionField::ReflectionTwist;
    return DefinitionField::Extension;
}

}  // namespace traceforge
