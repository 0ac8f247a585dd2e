#include "traceforge/report.hpp"

#include "traceforge/zsqrt2.hpp"

#include <sstream>
#include <stdexcept>

namespace traceforge {

json Report::to_json() const {
    json steps_j = json::array();
    for (const auto& s : steps)
        steps_j.push_back(json{{"check", s.check},
                               {"inputs", s.inputs},
                               {"result", s.result},
                               {"citation", s.citation}});
    return json{{"status", status}, {"steps", std::move(steps_j)}, {"conclusion", conclusion}};
}

std::string Report::text() const {
    std::ostringstream os;
    for (const auto& s : steps) {
        os << "[" << s.citation << "] " << s.check;
        if (!s.inputs.empty()) os << " (" << s.inputs << ")";
        os << ": " << s.result << "\n";
    }
    os << "status: " << status << " -- " << conclusion << "\n";
    return os.str();
}

int Report::exit_code() const {
    if (status == "pass") return 0;
    if (status == "fail") return 1;
    return 2;
}

Report run_example_ex45(int r, int n) {
    if (r < 1) throw std::invalid_argument("ex45: r must be >= 1");
    if (n < 4 || n % 4 != 0) throw std::invalid_argument("ex45: n must be divisible by 4");

    Report rep;
    FieldDescriptor field = FieldDescriptor::rationals();
    std::vector<QuadFieldElement> entries{QuadFieldElement(-1)};
    for (int i = 1; i < n; ++i) entries.emplace_back(1);
    DiagonalForm f0(field, entries);

    std::vector<Int> primes = primes_in_class(4, 1, std::size_t(r));
    std::string plist;
    for (const auto& p : primes) plist += (plist.empty() ? "" : ", ") + p.str();
    rep.steps.push_back({"first " + std::to_string(r) + " primes = 1 (mod 4)", "n = " +
                             std::to_string(n), plist, "Example 4.5"});

    bool all_equiv = true;
    for (const auto& p : primes) {
        QuadFieldElement a{Rational(p)};
        EquivalenceVerdict v = equivalent_Q(scale_form(a, f0), f0);
        bool ok = is_equivalent(v);
        all_equiv = all_equiv && ok;
        rep.steps.push_back({"a*f0 = f0", "a = " + p.str() + ", f0 = " + f0.str(),
                             ok ? "equivalent" : verdict_str(v), "Thm 4.4"});
    }

    GluingPlan plan{field, n, f0, {}, {}};
    plan.pieces.push_back(Piece{"P0", QuadFieldElement(1)});
    for (std::size_t i = 0; i < primes.size(); ++i)
        plan.pieces.push_back(
            Piece{"P" + std::to_string(i + 1), QuadFieldElement(Rational(primes[i]))});
    for (std::size_t i = 0; i < primes.size(); ++i)
        plan.steps.push_back(
            InterbreedStep{"P0", "P" + std::to_string(i + 1), CanonicalIsometry{}});

    Verdict v = trace_field(plan);
    Int expected = Int(1) << r;
    bool degree_ok = v.degree_over_base == expected;
    rep.steps.push_back({"trace field of the canonical plan",
                         "pieces {1, " + plist + "}", v.trace_field.str() + ", degree " +
                             v.degree_over_base.str(),
                         "Thm 4.1"});
    rep.steps.push_back({"degree = 2^r", "r = " + std::to_string(r),
                         degree_ok ? "holds" : "violated (expected " + expected.str() + ")",
                         "Example 4.5"});

    rep.status = (all_equiv && degree_ok) ? "pass" : "fail";
    rep.conclusion = "trace field " + v.trace_field.str() + " of degree " +
                     v.degree_over_base.str() + " over Q; " +
                     (v.arithmeticity == Arithmeticity::Nonarithmetic
                          ? "nonarithmetic (" + v.rule + ")"
                          : v.rule);
    return rep;
}

Report run_example_ex46(int r, int n, const Int& norm_bound) {
    if (r < 1) throw std::invalid_argument("ex46: r must be >= 1");
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("ex46: n must be even >= 4");

    Report rep;
    FieldDescriptor field = FieldDescriptor::real_quadratic(2);
    int branch = (n % 4 == 0) ? -1 : 1;
    QuadFieldElement delta(0, Rational(branch), field);
    rep.steps.push_back({"branch delta", "n = " + std::to_string(n),
                         delta.str(), "Example 4.6"});

    SplitPrimeSearch search = find_split_primes(delta, std::size_t(r), norm_bound);
    for (const auto& hit : search.primes)
        rep.steps.push_back({"split prime with a square root of " + delta.str() +
                                 " in its residue field",
                             "norm bound " + norm_bound.str(),
                             hit.prime.str() + ", generator " + hit.generator.str(),
                             "Example 4.6"});
    if (search.primes.size() < std::size_t(r)) {
        rep.status = "unknown";
        rep.conclusion = "partial: only " + std::to_string(search.primes.size()) + " of " +
                         std::to_string(r) + " primes within norm bound " + norm_bound.str();
        return rep;
    }

    std::vector<QuadFieldElement> entries{-QuadFieldElement::sqrt_gen(field)};
    for (int i = 1; i < n; ++i) entries.push_back(promote(QuadFieldElement(1), field));
    DiagonalForm f0(field, entries);

    bool all_equiv = true;
    for (const auto& hit : search.primes) {
        ScaledFamilyVerdict v = equivalent_scaled_family_Qsqrt2(hit.generator, n, branch);
        bool ok = is_equivalent(v.verdict);
        all_equiv = all_equiv && ok;
        rep.steps.push_back({"a*f0 = f0 over Q(sqrt 2)", "a = " + hit.generator.str(),
                             ok ? "equivalent" : verdict_str(v.verdict), "Example 4.6"});
    }

    GluingPlan plan{field, n, f0, {}, {}};
    plan.pieces.push_back(Piece{"P0", promote(QuadFieldElement(1), field)});
    for (std::size_t i = 0; i < search.primes.size(); ++i)
        plan.pieces.push_back(
            Piece{"P" + std::to_string(i + 1), search.primes[i].generator});
    for (std::size_t i = 0; i < search.primes.size(); ++i)
        plan.steps.push_back(
            InterbreedStep{"P0", "P" + std::to_string(i + 1), CanonicalIsometry{}});

    Verdict v = trace_field(plan);
    Int expected = Int(1) << r;
    bool degree_ok = v.degree_over_base == expected;
    rep.steps.push_back({"trace field over Q(sqrt 2)", "r = " + std::to_string(r),
                         v.trace_field.str() + ", degree " + v.degree_over_base.str(),
                         "Thm 4.1"});
    rep.steps.push_back({"degree = 2^r", "",
                         degree_ok ? "holds" : "violated (expected " + expected.str() + ")",
                         "Example 4.6"});

    rep.status = (all_equiv && degree_ok) ? "pass" : "fail";
    rep.conclusion = "trace field " + v.trace_field.str() + " of degree " +
                     v.degree_over_base.str() + " over Q(sqrt(2))";
    return rep;
}

Report run_delta5() {
    Report rep;
    Delta5Report d = delta5_obstruction();
    const char* citations[] = {"Thm 1.3", "Example 4.6", "Lemma 3.2", "Thm 6.4", "Thm 1.3"};
    std::size_t i = 0;
    for (const auto& [check, result] : d.steps) {
        rep.steps.push_back(
            {check, "", result, i < std::size(citations) ? citations[i] : "Thm 1.3"});
        ++i;
    }
    rep.status = d.pass ? "pass" : "fail";
    rep.conclusion = d.conclusion;
    return rep;
}

}  // namespace traceforge
