#include "traceforge/gluing.hpp"

#include "traceforge/twist.hpp"

#include <stdexcept>

namespace traceforge {

const Piece& GluingPlan::piece(const std::string& label) const {
    for (const auto& p : pieces)
        if (p.label == label) return p;
    throw std::invalid_argument("GluingPlan: unknown piece '" + label + "'");
}

void GluingPlan::validate() const {
    if (dimension < 2) throw std::invalid_argument("GluingPlan: dimension must be >= 2");
    if (!(f0.field() == base_field))
        throw std::invalid_argument("GluingPlan: f0 field differs from base field");
    if (int(f0.rank()) != dimension)
        throw std::invalid_argument("GluingPlan: rank(f0) must equal the dimension");
    if (!admissible(f0)) throw std::invalid_argument("GluingPlan: f0 is not admissible");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (!promote(pieces[i].a, base_field).is_totally_positive())
            throw std::invalid_argument("GluingPlan: piece '" + pieces[i].label +
                                        "' has non-totally-positive a");
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (pieces[i].label == pieces[j].label)
                throw std::invalid_argument("GluingPlan: duplicate label '" + pieces[i].label +
                                            "'");
    }
    auto check_twist_block = [&](const TwistBlockIsometry& iso) {
        Lemma61Outcome out = verify_lemma61(f0, promote(iso.a, base_field), iso.a0);
        if (!out.ok()) {
            std::string msg = "GluingPlan: twist block fails the closing-up lemma:";
            for (const auto& f : out.failures) msg += " " + f + ";";
            throw std::invalid_argument(msg);
        }
    };
    for (const auto& s : steps) {
        if (auto* ib = std::get_if<InterbreedStep>(&s)) {
            piece(ib->left);
            piece(ib->right);
        } else if (auto* cu = std::get_if<CloseUpStep>(&s)) {
            piece(cu->piece);
            if (auto* tb = std::get_if<TwistBlockIsometry>(&cu->iso)) check_twist_block(*tb);
        } else if (auto* d = std::get_if<DoubleStep>(&s)) {
            piece(d->piece);
        } else if (auto* t = std::get_if<TwistStep>(&s)) {
            piece(t->piece);
            check_twist_block(t->iso);
        }
    }
}

SquareClass canonical_step_field(const QuadFieldElement& a_i, const QuadFieldElement& a_j) {
    if (!a_i.is_totally_positive() || !a_j.is_totally_positive())
        throw std::invalid_argument("canonical_step_field: scalars must be totally positive");
    return SquareClass(a_i * a_j);
}

namespace {

DiagonalForm piece_form(const GluingPlan& plan, const Piece& p) {
    DiagonalForm tail(plan.base_field, {promote(p.a, plan.base_field)});
    return orthogonal_sum(plan.f0, tail);
}

MultiquadraticField adjoin(MultiquadraticField k, const SquareClass& c) {
    k.adjoin(c);
    return k;
}

MultiquadraticField eval_explicit(const MultiquadraticField& current,
                                  const ExplicitMatrixIsometry& iso, const DiagonalForm& f_src,
                                  const DiagonalForm& f_tgt, bool odd_close_up) {
    DefinitionField fod = field_of_definition(iso.matrix, f_src, f_tgt, true);
    if (odd_close_up) {
        // an odd-dimensional closing up never extends the field; a matrix that
        // resolves neither to the base nor through the reflection is a modeling
        // inconsistency and must not be silently overridden
        if (fod == DefinitionField::Extension)
            throw std::logic_error(
                "apply_step: odd-dimensional close-up with a matrix that is not "
                "rational even up to the boundary reflection");
        return current;
    }
    if (fod == DefinitionField::Base) return current;
    return adjoin(current, SquareClass(iso.generator));
}

MultiquadraticField eval_twist_block(const MultiquadraticField& current,
                                     const TwistBlockIsometry& iso, const GluingPlan& plan,
                                     const Piece& p) {
    // phi is induced by diag(A0/sqrt(a), 1) acting on the piece's form
    QuadFieldElement a = promote(iso.a, plan.base_field);
    std::size_t n = iso.a0.rows();
    if (n != std::size_t(plan.dimension))
        throw std::invalid_argument("apply_step: twist block size must match the dimension");
    ExtMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = ExtScalar(QuadFieldElement(0), iso.a0(i, j) / a, a);  // A0 * sqrt(a)/a
    m(n, n) = ExtScalar(promote(QuadFieldElement(1), plan.base_field));
    DiagonalForm f = piece_form(plan, p);
    DefinitionField fod = field_of_definition(m, f, f, true);
    if (plan.dimension % 2 != 0) {
        if (fod == DefinitionField::Extension)
            throw std::logic_error("apply_step: inconsistent odd-dimensional twist");
        return current;
    }
    if (fod == DefinitionField::Base) return current;
    return adjoin(current, SquareClass(a));
}

}  // namespace

MultiquadraticField apply_step(const MultiquadraticField& current, const GluingStep& step,
                               const GluingPlan& plan) {
    if (auto* ib = std::get_if<InterbreedStep>(&step)) {
        const Piece& l = plan.piece(ib->left);
        const Piece& r = plan.piece(ib->right);
        if (std::holds_alternative<CanonicalIsometry>(ib->iso))
            return adjoin(current, canonical_step_field(promote(l.a, plan.base_field),
                                                        promote(r.a, plan.base_field)));
        if (std::holds_alternative<IdentityIsometry>(ib->iso)) return current;
        if (auto* em = std::get_if<ExplicitMatrixIsometry>(&ib->iso))
            return eval_explicit(current, *em, piece_form(plan, l), piece_form(plan, r), false);
        throw std::invalid_argument("apply_step: twist blocks are only valid on twist steps");
    }
    if (auto* cu = std::get_if<CloseUpStep>(&step)) {
        const Piece& p = plan.piece(cu->piece);
        bool odd = plan.dimension % 2 != 0;
        if (std::holds_alternative<CanonicalIsometry>(cu->iso) ||
            std::holds_alternative<IdentityIsometry>(cu->iso))
            return current;  // a_i = a_j: the canonical class is trivial
        if (auto* em = std::get_if<ExplicitMatrixIsometry>(&cu->iso)) {
            DiagonalForm f = piece_form(plan, p);
            return eval_explicit(current, *em, f, f, odd);
        }
        return eval_twist_block(current, std::get<TwistBlockIsometry>(cu->iso), plan, p);
    }
    if (std::holds_alternative<DoubleStep>(step)) return current;
    const auto& t = std::get<TwistStep>(step);
    return eval_twist_block(current, t.iso, plan, plan.piece(t.piece));
}

std::optional<bool> commensurable_pieces(const GluingPlan& plan, const Piece& p,
                                         const Piece& q) {
    QuadFieldElement a = promote(p.a, plan.base_field), b = promote(q.a, plan.base_field);
    if (a == b) return true;
    DiagonalForm fa = piece_form(plan, p), fb = piece_form(plan, q);
    if (plan.base_field.is_rational()) {
        SimilarityResult r = similar_Q(fa, fb);
        if (r.lambda) return true;
        if (std::holds_alternative<Inequivalent>(r.verdict)) return false;
        return std::nullopt;
    }
    // over Q(sqrt m): even total rank forces equal discriminants under similarity
    if ((plan.dimension + 1) % 2 == 0 && !SquareClass(a * b).is_trivial())
        return false;
    if (SquareClass(a * b).is_trivial()) return true;
    // the scaled-family criterion: a*f0 = f0 and b*f0 = f0 give similarity
    if (plan.base_field.m() == 2 && plan.dimension % 2 == 0) {
        int branch = plan.dimension % 4 == 0 ? -1 : 1;
        auto va = equivalent_scaled_family_Qsqrt2(a, plan.dimension, branch);
        auto vb = equivalent_scaled_family_Qsqrt2(b, plan.dimension, branch);
        if (is_equivalent(va.verdict) && is_equivalent(vb.verdict)) return true;
    }
    return std::nullopt;
}

Verdict trace_field(const GluingPlan& plan) {
    plan.validate();
    MultiquadraticField k(plan.base_field);
    for (const auto& step : plan.steps) k = apply_step(k, step, plan);
    Verdict v{k, k.degree(), Arithmeticity::QuasiArithmetic, ""};
    if (v.degree_over_base > 1) {
        v.arithmeticity = Arithmeticity::Nonarithmetic;
        v.rule = "Thm 1.1";
        return v;
    }
    bool all_known = true;
    for (std::size_t i = 0; i < plan.pieces.size(); ++i)
        for (std::size_t j = i + 1; j < plan.pieces.size(); ++j) {
            auto c = commensurable_pieces(plan, plan.pieces[i], plan.pieces[j]);
            if (!c.has_value()) all_known = false;
            else if (!*c) {
                v.arithmeticity = Arithmeticity::Nonarithmetic;
                v.rule = "Prop 5.1";
                return v;
            }
        }
    if (!all_known) {
        v.arithmeticity = Arithmeticity::ArithmeticCandidate;
        v.rule = "commensurability undecided";
    } else {
        v.arithmeticity = Arithmeticity::QuasiArithmetic;
        v.rule = "Thm 6.4 / Prop 5.4";
    }
    return v;
}

Delta5Report delta5_obstruction() {
    Delta5Report r;
    FieldDescriptor k2 = FieldDescriptor::real_quadratic(2);
    DiagonalForm f(k2, {QuadFieldElement(-1), 1, 1, 1, 1, 1});
    r.steps.push_back({"simplex invariants",
                       "trace field Q(sqrt(2)), ambient form " + f.str() + ", dimension 5"});

    bool adm = admissible(f);
    auto [cp, cn] = signature(f, Embedding::Conjugate);
    r.steps.push_back({"admissible over Q(sqrt(2))",
                       std::string(adm ? "true" : "false") + " (conjugate signature (" +
                           std::to_string(cp) + "," + std::to_string(cn) + "), needs (6,0))"});
    if (adm) {
        r.pass = false;
        r.conclusion = "unexpected: the form is admissible over Q(sqrt(2))";
        return r;
    }
    r.steps.push_back({"pieces' trace field",
                       "forced to Q: a subfield of Q(sqrt(2)) carrying an admissible form"});
    r.steps.push_back({"odd-dimension rule (Thm 6.4)",
                       "a dimension-5 gluing of commensurable arithmetic pieces over Q has "
                       "trace field Q"});
    r.steps.push_back({"contradiction", "Q != Q(sqrt(2))"});
    r.pass = true;
    r.conclusion = "not commensurable to any gluing of arithmetic pieces";
    return r;
}

}  // namespace traceforge
