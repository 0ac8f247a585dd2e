// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include "traceforge/forms.hpp"
#include "traceforge/gluing.hpp"
#include "traceforge/places.hpp"
#include "traceforge/report.hpp"
#include "traceforge/twist.hpp"
#include "traceforge/zsqrt2.hpp"

#include "helpers.hpp"

#include <algorithm>
#include <array>
#include <iostream>

using namespace traceforge;

namespace {

DiagonalForm standard_f0(int n) {
    std::vector<QuadFieldElement> entries{QuadFieldElement(-1)};
    for (int i = 1; i < n; ++i) entries.emplace_back(1);
    return DiagonalForm(FieldDescriptor::rationals(), std::move(entries));
}

bool criterion_table() {
    Table1Report rep = reproduce_table1();
    return rep.all_pass && rep.rows.size() == 10;
}

bool criterion_scaled_equivalence() {
    for (int n : {6, 10}) {
        DiagonalForm f0 = standard_f0(n);
        for (int i = 0; i < 20; ++i) {
            Rational a = tftest::rand_positive_rational(50, 50);
            if (!is_equivalent(equivalent_Q(scale_form(QuadFieldElement(a), f0), f0)))
                return false;
        }
    }
    DiagonalForm f4 = standard_f0(4);
    for (long p : {3, 7, 11}) {
        Rational a(p);
        EquivalenceVerdict v = equivalent_Q(scale_form(QuadFieldElement(a), f4), f4);
        auto* in = std::get_if<Inequivalent>(&v);
        if (!in) return false;
        if (in->witness.find("Hasse invariant at ") == std::string::npos) return false;
        // the epsilon_p witness matches the closed form (-1/p)^{v_p(a)}
        int want = legendre(-1, p) == 1 ? 1 : -1;  // v_p(a) = 1
        if (hasse_invariant(scale_form(QuadFieldElement(a), f4), Place::finite(p)) != want)
            return false;
        if (hasse_invariant(f4, Place::finite(p)) != 1) return false;
    }
    return true;
}

bool criterion_ex45() {
    Report rep = run_example_ex45(3, 4);
    if (rep.status != "pass") return false;
    if (rep.conclusion.find("degree 8") == std::string::npos) return false;
    for (const char* s : {"sqrt(5)", "sqrt(13)", "sqrt(17)"})
        if (rep.conclusion.find(s) == std::string::npos) return false;
    return true;
}

// Independent residue-field oracle: enumerate every square.
bool brute_residue_square(const QuadPrimeElement& pi, int delta_sign) {
    long p = pi.rational_prime.convert_to<long>();
    if (pi.splitting_type == SplittingType::Split) {
        long t = pi.residue_map->convert_to<long>();
        long c = ((delta_sign * t) % p + p) % p;
        for (long x = 0; x < p; ++x)
            if (x * x % p == c) return true;
        return false;
    }
    long c = ((delta_sign % p) + p) % p;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            if ((a * a + 2 * b * b) % p == 0 && 2 * a * b % p == c) return true;
    return false;
}

bool criterion_ex46() {
    for (int branch : {-1, 1}) {
        FieldDescriptor q2 = FieldDescriptor::real_quadratic(2);
        QuadFieldElement delta(0, Rational(branch), q2);
        SplitPrimeSearch s = find_split_primes(delta, 2, 500);
        if (s.primes.size() < 2) return false;
        int n = branch == -1 ? 4 : 6;
        for (const auto& hit : s.primes) {
            if (!brute_residue_square(hit.prime, branch)) return false;
            if (!is_equivalent(
                    equivalent_scaled_family_Qsqrt2(hit.generator, n, branch).verdict))
                return false;
        }
        Report rep = run_example_ex46(2, n, 500);
        if (rep.status != "pass") return false;
        if (rep.conclusion.find("degree 4") == std::string::npos) return false;
    }
    return true;
}

bool criterion_delta5() {
    Report rep = run_delta5();
    if (rep.status != "pass") return false;
    bool saw_admissibility = false, saw_contradiction = false;
    for (const auto& s : rep.steps) {
        if (s.check.find("admissible") != std::string::npos &&
            s.result.find("false") != std::string::npos)
            saw_admissibility = true;
        if (s.check.find("contradiction") != std::string::npos) saw_contradiction = true;
    }
    return saw_admissibility && saw_contradiction;
}

bool criterion_closed_form_twists() {
    for (long d = 3; d <= 99; d += 2) {
        if (squarefree_part(Rational(d)).s != d) continue;
        for (int n : {4, 6, 8}) {
            TwistCertificate cert = build_odd_twist(Int(d), n);
            if (!cert.ok()) return false;
            if (!verify_lemma61(cert.f0, cert.a, cert.a0).ok()) return false;
            GluingPlan plan{FieldDescriptor::rationals(), n, cert.f0,
                            {{"P0", QuadFieldElement(1)}},
                            {TwistStep{"P0", TwistBlockIsometry{cert.a0, cert.a}}}};
            Verdict v = trace_field(plan);
            if (v.degree_over_base != 2) return false;
            if (!v.trace_field.contains(SquareClass(QuadFieldElement(Rational(d)))))
                return false;
        }
    }
    return true;
}

// --- criterion 7 helpers ---

Matrix<QuadFieldElement> rand_unimodular(std::size_t n) {
    auto t = Matrix<QuadFieldElement>::identity(n, QuadFieldElement(1));
    for (int k = 0; k < 8; ++k) {
        std::size_t i = std::size_t(tftest::rand_long(0, long(n) - 1));
        std::size_t j = std::size_t(tftest::rand_long(0, long(n) - 1));
        if (i == j) continue;
        auto e = Matrix<QuadFieldElement>::identity(n, QuadFieldElement(1));
        e(i, j) = QuadFieldElement(int(tftest::rand_long(-3, 3)));
        t = t * e;
    }
    return t;
}

DiagonalForm transport(const DiagonalForm& f) {
    auto t = rand_unimodular(f.rank());
    Matrix<QuadFieldElement> g(f.rank(), f.rank());
    for (std::size_t i = 0; i < f.rank(); ++i) g(i, i) = f.entries()[i];
    return diagonalize(GramForm(f.field(), t.transpose() * g * t)).form;
}

std::vector<std::array<Rational, 6>> brute_blocks(long d, long cb, long eb) {
    std::vector<std::array<Rational, 6>> out;
    for (long c1 = -cb; c1 <= cb; ++c1)
        for (long c2 = -cb; c2 <= cb; ++c2) {
            if (c1 == 0 || c2 == 0) continue;
            for (long a = -eb; a <= eb; ++a)
                for (long b = -eb; b <= eb; ++b)
                    for (long c = -eb; c <= eb; ++c)
                        for (long e = -eb; e <= eb; ++e)
                            if (c1 * a * a + c2 * c * c == d * c1 &&
                                c1 * b * b + c2 * e * e == d * c2 &&
                                c1 * a * b + c2 * c * e == 0 && a * a + b * c == d &&
                                b * (a + e) == 0 && c * (a + e) == 0 && e * e + b * c == d)
                                out.push_back({Rational(c1), Rational(c2), Rational(a),
                                               Rational(b), Rational(c), Rational(e)});
        }
    std::sort(out.begin(), out.end());
    return out;
}

GluingPlan rand_canonical_plan(int n, int piece_count, int step_count) {
    GluingPlan plan{FieldDescriptor::rationals(), n, standard_f0(n), {}, {}};
    for (int i = 0; i < piece_count; ++i)
        plan.pieces.push_back({"P" + std::to_string(i),
                               QuadFieldElement(tftest::rand_positive_rational(30, 8))});
    for (int s = 0; s < step_count; ++s)
        plan.steps.push_back(
            InterbreedStep{"P" + std::to_string(tftest::rand_long(0, piece_count - 1)),
                           "P" + std::to_string(tftest::rand_long(0, piece_count - 1)),
                           CanonicalIsometry{}});
    return plan;
}

bool criterion_properties() {
    // Hilbert symbol identities on 200 random triples
    for (int i = 0; i < 200; ++i) {
        Rational a = tftest::rand_rational(60, 10), b = tftest::rand_rational(60, 10),
                 c = tftest::rand_rational(60, 10);
        for (const Place& v : relevant_places({a, b, c})) {
            if (hilbert_symbol(a, b * c, v) !=
                hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v))
                return false;
            if (hilbert_symbol(a, b, v) != hilbert_symbol(b, a, v)) return false;
            if (hilbert_symbol(a, -a, v) != 1) return false;
        }
    }
    // product formula on 500 random pairs
    for (int i = 0; i < 500; ++i) {
        Rational a = tftest::rand_rational(200, 30), b = tftest::rand_rational(200, 30);
        int prod = 1;
        for (const Place& v : relevant_places({a, b})) prod *= hilbert_symbol(a, b, v);
        if (prod != 1) return false;
    }
    // equivalence vs the base-change oracle: 200 positive, 100 negative
    for (int i = 0; i < 200; ++i) {
        DiagonalForm f = tftest::rand_form_Q(2 + i % 4);
        if (!is_equivalent(equivalent_Q(f, transport(f)))) return false;
    }
    for (int i = 0; i < 100; ++i) {
        DiagonalForm f = tftest::rand_form_Q(2 + i % 4);
        auto entries = f.entries();
        entries[0] = entries[0] * QuadFieldElement(101);  // fresh prime shifts the disc
        DiagonalForm g = transport(DiagonalForm(f.field(), std::move(entries)));
        if (is_equivalent(equivalent_Q(f, g))) return false;
    }
    // trace-field invariances on 200 random canonical plans
    for (int i = 0; i < 200; ++i) {
        GluingPlan plan = rand_canonical_plan(4, 3, 3);
        Verdict v = trace_field(plan);
        if (v.degree_over_base > Int(1) << plan.steps.size()) return false;
        GluingPlan shuffled = plan;
        std::shuffle(shuffled.steps.begin(), shuffled.steps.end(), tftest::rng());
        if (!(trace_field(shuffled).trace_field == v.trace_field)) return false;
        GluingPlan scaled = plan;
        for (auto& p : scaled.pieces) {
            Rational s = tftest::rand_positive_rational(9, 9);
            p.a = p.a * QuadFieldElement(s * s);
        }
        if (!(trace_field(scaled).trace_field == v.trace_field)) return false;
    }
    // exhaustive block search equals the unpruned oracle
    auto got = search_blocks(QuadFieldElement(Rational(3)), 3, 3);
    std::vector<std::array<Rational, 6>> keys;
    for (const auto& b : got)
        keys.push_back({b.q.entries()[0].x(), b.q.entries()[1].x(), b.a(0, 0).x(),
                        b.a(0, 1).x(), b.a(1, 0).x(), b.a(1, 1).x()});
    std::sort(keys.begin(), keys.end());
    return keys == brute_blocks(3, 3, 3);
}

bool criterion_doubling_and_odd() {
    for (int i = 0; i < 50; ++i) {
        GluingPlan plan = rand_canonical_plan(4, 3, 3);
        Verdict before = trace_field(plan);
        plan.steps.push_back(DoubleStep{"P0"});
        Verdict after = trace_field(plan);
        if (!(after.trace_field == before.trace_field)) return false;
    }
    // odd-dimensional close-up with a matrix rational up to the boundary
    // reflection resolves to the base field
    FieldDescriptor q = FieldDescriptor::rationals();
    DiagonalForm f0(q, {QuadFieldElement(-1), QuadFieldElement(1), QuadFieldElement(3),
                        QuadFieldElement(1), QuadFieldElement(3)});
    GluingPlan plan{q, 5, f0, {{"P0", QuadFieldElement(1)}}, {}};
    Matrix<QuadFieldElement> refl =
        Matrix<QuadFieldElement>::identity(6, QuadFieldElement(1));
    refl(1, 1) = QuadFieldElement(-1);
    plan.steps = {CloseUpStep{
        "P0", ExplicitMatrixIsometry{ext_matrix_from_base(refl, QuadFieldElement(2)),
                                     QuadFieldElement(2)}}};
    if (trace_field(plan).degree_over_base != 1) return false;

    QuadFieldElement thr(3);
    Matrix<QuadFieldElement> a0(6, 6, QuadFieldElement(0));
    a0(0, 0) = QuadFieldElement(2);
    a0(0, 1) = QuadFieldElement(1);
    a0(1, 0) = QuadFieldElement(-1);
    a0(1, 1) = QuadFieldElement(-2);
    a0(2, 3) = QuadFieldElement(1);
    a0(3, 2) = thr;
    a0(4, 5) = QuadFieldElement(1);
    a0(5, 4) = thr;
    ExtMatrix phi(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            phi(i, j) = ExtScalar(QuadFieldElement(0), a0(i, j) / thr, thr);
    plan.steps = {CloseUpStep{"P0", ExplicitMatrixIsometry{phi, thr}}};
    return trace_field(plan).degree_over_base == 1;
}

int run(const char* name, bool (*fn)()) {
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::cout << name << ": FAIL (exception: " << e.what() << ")\n";
        return 1;
    }
    std::cout << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    failures += run("1. published table reproduction (10/10 rows)", criterion_table);
    failures += run("2. scaled-form equivalence at desk scale", criterion_scaled_equivalence);
    failures += run("3. canonical gluings over Q (r=3, n=4, degree 8)", criterion_ex45);
    failures += run("4. split-prime gluings over Q(sqrt 2)", criterion_ex46);
    failures += run("5. dimension-5 obstruction pipeline", criterion_delta5);
    failures += run("6. closed-form twists for odd squarefree d <= 99", criterion_closed_form_twists);
    failures += run("7. property suites (symbols, local-global, invariances, search)",
                    criterion_properties);
    failures += run("8. doubling and odd-dimension rules", criterion_doubling_and_odd);
    return failures == 0 ? 0 : 1;
}
