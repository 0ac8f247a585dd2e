#include "traceforge/gluing.hpp"

#include "helpers.hpp"

#include <algorithm>
#include <doctest.h>

using namespace traceforge;

namespace {

DiagonalForm standard_f0(int n) {
    std::vector<QuadFieldElement> entries{QuadFieldElement(-1)};
    for (int i = 1; i < n; ++i) entries.emplace_back(1);
    return DiagonalForm(FieldDescriptor::rationals(), std::move(entries));
}

// A random plan over Q with canonical interbreeding steps only.
GluingPlan rand_canonical_plan(int n, int piece_count, int step_count) {
    GluingPlan plan{FieldDescriptor::rationals(), n, standard_f0(n), {}, {}};
    for (int i = 0; i < piece_count; ++i)
        plan.pieces.push_back({"P" + std::to_string(i),
                               QuadFieldElement(tftest::rand_positive_rational(30, 8))});
    for (int s = 0; s < step_count; ++s) {
        long i = tftest::rand_long(0, piece_count - 1);
        long j = tftest::rand_long(0, piece_count - 1);
        plan.steps.push_back(InterbreedStep{"P" + std::to_string(i), "P" + std::to_string(j),
                                            CanonicalIsometry{}});
    }
    return plan;
}

}  // namespace

TEST_CASE("canonical step field is the product square class") {
    for (int i = 0; i < 40; ++i) {
        QuadFieldElement a(tftest::rand_positive_rational(50, 10));
        QuadFieldElement b(tftest::rand_positive_rational(50, 10));
        CHECK(canonical_step_field(a, b) == SquareClass(a * b));
        CHECK(canonical_step_field(a, a).is_trivial());
    }
    CHECK_THROWS_AS(canonical_step_field(QuadFieldElement(-2), QuadFieldElement(3)),
                    std::invalid_argument);
}

TEST_CASE("trace field of canonical plans: quadratic bound and independent oracle") {
    for (int trial = 0; trial < 200; ++trial) {
        GluingPlan plan = rand_canonical_plan(4 + int(tftest::rand_long(0, 2)),
                                              2 + int(tftest::rand_long(0, 3)),
                                              1 + int(tftest::rand_long(0, 4)));
        Verdict v = trace_field(plan);
        // each step adjoins at most one square root
        CHECK(v.degree_over_base <= Int(1) << plan.steps.size());
        // independent recomputation through F2 support vectors
        std::vector<QuadFieldElement> gens;
        for (const auto& s : plan.steps) {
            const auto& ib = std::get<InterbreedStep>(s);
            gens.push_back(plan.piece(ib.left).a * plan.piece(ib.right).a);
        }
        CHECK(v.degree_over_base == Int(1) << f2_rank(gens));
        CHECK((v.degree_over_base == 1 || v.arithmeticity == Arithmeticity::Nonarithmetic));
    }
}

TEST_CASE("trace field is invariant under step order and square scalings") {
    for (int trial = 0; trial < 50; ++trial) {
        GluingPlan plan = rand_canonical_plan(4, 4, 4);
        Verdict base = trace_field(plan);

        GluingPlan shuffled = plan;
        std::shuffle(shuffled.steps.begin(), shuffled.steps.end(), tftest::rng());
        CHECK(trace_field(shuffled).trace_field == base.trace_field);

        GluingPlan scaled = plan;
        for (auto& p : scaled.pieces) {
            Rational s = tftest::rand_positive_rational(10, 10);
            p.a = p.a * QuadFieldElement(s * s);
        }
        CHECK(trace_field(scaled).trace_field == base.trace_field);
    }
}

TEST_CASE("doubling never changes the running field") {
    for (int trial = 0; trial < 50; ++trial) {
        GluingPlan plan = rand_canonical_plan(4, 3, 3);
        Verdict before = trace_field(plan);
        GluingPlan doubled = plan;
        doubled.steps.push_back(DoubleStep{"P0"});
        Verdict after = trace_field(doubled);
        CHECK(after.trace_field == before.trace_field);
        CHECK(after.degree_over_base == before.degree_over_base);
    }
    // a pure double of one piece is quasi-arithmetic with trivial field
    GluingPlan pure{FieldDescriptor::rationals(), 4, standard_f0(4),
                    {{"P0", QuadFieldElement(3)}}, {DoubleStep{"P0"}}};
    Verdict v = trace_field(pure);
    CHECK(v.degree_over_base == 1);
    CHECK(v.arithmeticity == Arithmeticity::QuasiArithmetic);
}

TEST_CASE("identity gluings and closings with equal scalars stay in the base field") {
    GluingPlan plan{FieldDescriptor::rationals(), 4, standard_f0(4),
                    {{"P0", QuadFieldElement(7)}, {"P1", QuadFieldElement(7)}}, {}};
    plan.steps.push_back(InterbreedStep{"P0", "P1", CanonicalIsometry{}});
    plan.steps.push_back(InterbreedStep{"P0", "P1", IdentityIsometry{}});
    plan.steps.push_back(CloseUpStep{"P0", CanonicalIsometry{}});
    Verdict v = trace_field(plan);
    CHECK(v.degree_over_base == 1);
}

TEST_CASE("odd-dimensional close-up resolves to the base field") {
    // dimension 5, piece form <-1,1,3,1,3> + <1> built from 2x2 blocks with d = 3
    FieldDescriptor q = FieldDescriptor::rationals();
    DiagonalForm f0(q, {QuadFieldElement(-1), QuadFieldElement(1), QuadFieldElement(3),
                        QuadFieldElement(1), QuadFieldElement(3)});
    GluingPlan plan{q, 5, f0, {{"P0", QuadFieldElement(1)}}, {}};

    // rational isometry: entrywise sign flip on one coordinate
    Matrix<QuadFieldElement> refl = Matrix<QuadFieldElement>::identity(6, QuadFieldElement(1));
    refl(1, 1) = QuadFieldElement(-1);
    plan.steps = {CloseUpStep{"P0", ExplicitMatrixIsometry{
                                        ext_matrix_from_base(refl, QuadFieldElement(2)),
                                        QuadFieldElement(2)}}};
    CHECK(trace_field(plan).degree_over_base == 1);

    // (sqrt(3)/3) * A0 with A0 the block similitude: sigma-scalar, still base
    QuadFieldElement z(0), thr(3);
    Matrix<QuadFieldElement> a1(std::vector<std::vector<QuadFieldElement>>{
        {QuadFieldElement(2), QuadFieldElement(1)}, {QuadFieldElement(-1), QuadFieldElement(-2)}});
    Matrix<QuadFieldElement> a0(6, 6, z);
    a0(0, 0) = a1(0, 0);
    a0(0, 1) = a1(0, 1);
    a0(1, 0) = a1(1, 0);
    a0(1, 1) = a1(1, 1);
    a0(2, 3) = QuadFieldElement(1);
    a0(3, 2) = thr;
    a0(4, 5) = QuadFieldElement(1);
    a0(5, 4) = thr;
    ExtMatrix phi(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            phi(i, j) = ExtScalar(QuadFieldElement(0), a0(i, j) / thr, thr);
    plan.steps = {CloseUpStep{"P0", ExplicitMatrixIsometry{phi, thr}}};
    CHECK(trace_field(plan).degree_over_base == 1);

    // sqrt-entries on four coordinates against a rational block on the other
    // two: a valid similitude whose sigma pattern is neither scalar nor the
    // boundary reflection, which an odd-dimensional close-up must reject
    ExtMatrix mixed = phi;
    mixed(4, 5) = ExtScalar(QuadFieldElement(0));
    mixed(5, 4) = ExtScalar(QuadFieldElement(0));
    mixed(4, 4) = ExtScalar(QuadFieldElement(1));
    mixed(5, 5) = ExtScalar(QuadFieldElement(1));
    plan.steps = {CloseUpStep{"P0", ExplicitMatrixIsometry{mixed, thr}}};
    CHECK_THROWS_AS(trace_field(plan), std::logic_error);
}

TEST_CASE("plan validation rejects malformed plans") {
    FieldDescriptor q = FieldDescriptor::rationals();
    GluingPlan plan{q, 4, standard_f0(4), {{"P0", QuadFieldElement(2)}}, {}};
    plan.steps.push_back(InterbreedStep{"P0", "P1", CanonicalIsometry{}});
    CHECK_THROWS_AS(plan.validate(), std::invalid_argument);  // unknown piece

    GluingPlan neg{q, 4, standard_f0(4), {{"P0", QuadFieldElement(-2)}}, {}};
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);  // non-positive scalar

    GluingPlan shape{q, 5, standard_f0(4), {}, {}};
    CHECK_THROWS_AS(shape.validate(), std::invalid_argument);  // rank != dimension

    GluingPlan dup{q, 4, standard_f0(4),
                   {{"P0", QuadFieldElement(2)}, {"P0", QuadFieldElement(3)}}, {}};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);  // duplicate labels
}

TEST_CASE("commensurability of pieces over Q") {
    GluingPlan plan{FieldDescriptor::rationals(), 4, standard_f0(4),
                    {{"P0", QuadFieldElement(2)},
                     {"P1", QuadFieldElement(2)},
                     {"P2", QuadFieldElement(3)}},
                    {}};
    CHECK(commensurable_pieces(plan, plan.pieces[0], plan.pieces[1]) == true);
    // <-1,1,1,1,2> vs <-1,1,1,1,3>: no scalar makes these equivalent
    auto c = commensurable_pieces(plan, plan.pieces[0], plan.pieces[2]);
    if (c.has_value()) CHECK_FALSE(*c);
}

TEST_CASE("dimension-5 obstruction pipeline") {
    Delta5Report r = delta5_obstruction();
    CHECK(r.pass);
    CHECK(r.steps.size() >= 4);
    CHECK(r.conclusion.find("not commensurable") != std::string::npos);
}
