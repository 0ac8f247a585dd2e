#pragma once

#include "traceforge/quadfield.hpp"
#include "traceforge/matrix.hpp"
#include "traceforge/squareclass.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace traceforge {

// Diagonal quadratic form <d_0, ..., d_N>, all entries nonzero.
class DiagonalForm {
public:
    DiagonalForm(FieldDescriptor field, std::vector<QuadFieldElement> entries);

    const FieldDescriptor& field() const { return field_; }
    const std::vector<QuadFieldElement>& entries() const { return entries_; }
    std::size_t rank() const { return entries_.size(); }

    bool operator==(const DiagonalForm&) const = default;
    std::string str() const;

private:
    FieldDescriptor field_;
    std::vector<QuadFieldElement> entries_;
};

DiagonalForm scale_form(const QuadFieldElement& a, const DiagonalForm& f);
DiagonalForm orthogonal_sum(const DiagonalForm& f, const DiagonalForm& g);

// Symmetric nondegenerate Gram matrix.
class GramForm {
public:
    GramForm(FieldDescriptor field, Matrix<QuadFieldElement> m);

    const FieldDescriptor& field() const { return field_; }
    const Matrix<QuadFieldElement>& matrix() const { return matrix_; }

private:
    FieldDescriptor field_;
    Matrix<QuadFieldElement> matrix_;
};

// Congruence diagonalization with the change of basis recorded:
// transform^T * G * transform == diag(form).
struct Diagonalization {
    DiagonalForm form;
    Matrix<QuadFieldElement> transform;
};
Diagonalization diagonalize(const GramForm& g);

enum class Embedding { Id, Conjugate };

SquareClass discriminant(const DiagonalForm& f);
std::pair<int, int> signature(const DiagonalForm& f, Embedding e = Embedding::Id);

// Signature (rank-1, 1) at the identity embedding and definite at the other.
bool admissible(const DiagonalForm& f);

struct Equivalent {};
struct Inequivalent {
    std::string witness;  // which invariant differs, and where
};
struct Unknown {
    std::string reason;
};
using EquivalenceVerdict = std::variant<Equivalent, Inequivalent, Unknown>;

bool is_equivalent(const EquivalenceVerdict& v);
std::string verdict_str(const EquivalenceVerdict& v);

// Hasse-Minkowski local-global equivalence over Q.
EquivalenceVerdict equivalent_Q(const DiagonalForm& f, const DiagonalForm& g);

// Searches lambda with f = lambda*g over squarefree products of primes
// dividing 2 * (all entries); Unknown when the candidate set is exhausted
// without a structural refutation.
struct SimilarityResult {
    std::optional<Rational> lambda;
    EquivalenceVerdict verdict;
};
SimilarityResult similar_Q(const DiagonalForm& f, const DiagonalForm& g);

// The residue-field criterion for a*f0 = f0 over Q(sqrt(2)) with
// f0 = <-sqrt(2), 1, ..., 1>: the scaled Hasse invariant collapses to
// (-+sqrt(2), a)_v which the splitting hypothesis forces to +1 everywhere.
struct ScaledFamilyVerdict {
    EquivalenceVerdict verdict;
    std::vector<std::string> checks;  // the chain of checks actually performed
};
ScaledFamilyVerdict equivalent_scaled_family_Qsqrt2(const QuadFieldElement& a, int n,
                                                    int branch_sign);

}  // namespace traceforge
