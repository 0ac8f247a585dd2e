#pragma once

#include "traceforge/forms.hpp"
#include "traceforge/squareclass.hpp"
#include "traceforge/tower.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace traceforge {

// A symbolic building block: an arithmetic piece cut from the manifold of
// f_a = f0 + a*x_n^2. No geometry is modeled, only (k, f0, a, n).
struct Piece {
    std::string label;
    QuadFieldElement a;  // totally positive
};

struct CanonicalIsometry {};
struct IdentityIsometry {};
struct ExplicitMatrixIsometry {
    ExtMatrix matrix;
    QuadFieldElement generator;  // g with entries in k(sqrt g)
};
struct TwistBlockIsometry {
    Matrix<QuadFieldElement> a0;  // over k
    QuadFieldElement a;           // the similitude ratio, f0 . A0 = a f0
};
using IsometrySpec =
    std::variant<CanonicalIsometry, IdentityIsometry, ExplicitMatrixIsometry, TwistBlockIsometry>;

struct InterbreedStep {
    std::string left, right;
    IsometrySpec iso;
};
struct CloseUpStep {
    std::string piece;
    IsometrySpec iso;
};
struct DoubleStep {
    std::string piece;
};
struct TwistStep {
    std::string piece;
    TwistBlockIsometry iso;
};
using GluingStep = std::variant<InterbreedStep, CloseUpStep, DoubleStep, TwistStep>;

struct GluingPlan {
    FieldDescriptor base_field = FieldDescriptor::rationals();
    int dimension = 0;           // n; the glued manifolds are n-dimensional
    DiagonalForm f0;             // rank n, admissible
    std::vector<Piece> pieces;
    std::vector<GluingStep> steps;

    const Piece& piece(const std::string& label) const;
    void validate() const;
};

enum class Arithmeticity { ArithmeticCandidate, Nonarithmetic, QuasiArithmetic };

struct Verdict {
    MultiquadraticField trace_field;
    Int degree_over_base;
    Arithmeticity arithmeticity;
    std::string rule;  // citation of the rule that decided arithmeticity
};

// Square class of a_i * a_j, the canonical gluing isometry's extension field.
SquareClass canonical_step_field(const QuadFieldElement& a_i, const QuadFieldElement& a_j);

// Folds one step into the running trace field.
MultiquadraticField apply_step(const MultiquadraticField& current, const GluingStep& step,
                               const GluingPlan& plan);

Verdict trace_field(const GluingPlan& plan);

// Similarity of the pieces' ambient forms; nullopt = undecided.
std::optional<bool> commensurable_pieces(const GluingPlan& plan, const Piece& p,
                                         const Piece& q);

struct Delta5Report {
    std::vector<std::pair<std::string, std::string>> steps;  // (check, result)
    bool pass = false;
    std::string conclusion;
};

// The dimension-5 obstruction pipeline: the simplex orbifold's trace field
// Q(sqrt 2) is incompatible with every gluing of arithmetic pieces.
Delta5Report delta5_obstruction();

}  // namespace traceforge
