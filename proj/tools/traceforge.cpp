#include "traceforge/json_io.hpp"
#include "traceforge/report.hpp"
#include "traceforge/twist.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace tf = traceforge;

namespace {

constexpr const char* kVersion = "traceforge 1.0.0";

int cmd_invariants(const std::string& form_file) {
    tf::DiagonalForm f = tf::form_from_json(tf::load_json_file(form_file));
    if (!f.field().is_rational())
        throw std::invalid_argument("invariants: Hasse profiles are computed over Q only");
    std::cout << tf::profile_to_json(tf::hasse_profile(f)).dump(2) << "\n";
    return 0;
}

int verdict_exit(const tf::EquivalenceVerdict& v) {
    if (std::holds_alternative<tf::Equivalent>(v)) return 0;
    if (std::holds_alternative<tf::Inequivalent>(v)) return 1;
    return 2;
}

int cmd_equiv(const std::string& f_file, const std::string& g_file, bool as_json) {
    tf::DiagonalForm f = tf::form_from_json(tf::load_json_file(f_file));
    tf::DiagonalForm g = tf::form_from_json(tf::load_json_file(g_file));
    if (!f.field().is_rational() || !g.field().is_rational())
        throw std::invalid_argument("equiv: the local-global test is implemented over Q");
    tf::EquivalenceVerdict v = tf::equivalent_Q(f, g);
    if (as_json)
        std::cout << tf::json{{"verdict", tf::verdict_str(v)}}.dump(2) << "\n";
    else
        std::cout << tf::verdict_str(v) << "\n";
    return verdict_exit(v);
}

int cmd_similar(const std::string& f_file, const std::string& g_file, bool as_json) {
    tf::DiagonalForm f = tf::form_from_json(tf::load_json_file(f_file));
    tf::DiagonalForm g = tf::form_from_json(tf::load_json_file(g_file));
    if (!f.field().is_rational() || !g.field().is_rational())
        throw std::invalid_argument("similar: the similarity search is implemented over Q");
    tf::SimilarityResult r = tf::similar_Q(f, g);
    tf::json out{{"verdict", tf::verdict_str(r.verdict)}};
    if (r.lambda) out["lambda"] = tf::to_string(*r.lambda);
    if (as_json)
        std::cout << out.dump(2) << "\n";
    else if (r.lambda)
        std::cout << "similar with lambda = " << tf::to_string(*r.lambda) << "\n";
    else
        std::cout << tf::verdict_str(r.verdict) << "\n";
    return verdict_exit(r.verdict);
}

int cmd_trace_field(const std::string& plan_file) {
    tf::GluingPlan plan = tf::plan_from_json(tf::load_json_file(plan_file));
    tf::Verdict v = tf::trace_field(plan);
    std::cout << tf::verdict_to_json(v).dump(2) << "\n";
    return v.rule == "commensurability undecided" ? 2 : 0;
}

int report_out(const tf::Report& rep, bool as_json) {
    if (as_json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.text();
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact trace-field computations for gluings of arithmetic pieces"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string form_file, f_file, g_file, plan_file, cert_file;
    long long d = 0;
    int n = 0, r = 1;
    long coeff_bound = 3, entry_bound = 3;
    int dim = 0;
    long long norm_bound = 500;
    std::string bx = "0", by = "0";
    long long quad_m = 2;

    auto* inv = app.add_subcommand("invariants", "Hasse profile of a form over Q");
    inv->add_option("--form", form_file, "form file (JSON)")->required();

    auto* eq = app.add_subcommand("equiv", "Hasse-Minkowski equivalence of two forms");
    eq->add_option("f", f_file, "first form file")->required();
    eq->add_option("g", g_file, "second form file")->required();

    auto* sim = app.add_subcommand("similar", "similarity of two forms over Q");
    sim->add_option("f", f_file, "first form file")->required();
    sim->add_option("g", g_file, "second form file")->required();

    auto* tfd = app.add_subcommand("trace-field", "trace field of a gluing plan");
    tfd->add_option("plan-file", plan_file, "plan file (JSON)");
    tfd->add_option("--plan", plan_file, "plan file (JSON)")->excludes("plan-file");

    auto* twist = app.add_subcommand("twist", "twist certificates");
    twist->require_subcommand(1);
    auto* tver = twist->add_subcommand("verify", "check a certificate file");
    tver->add_option("cert", cert_file, "certificate file (JSON)")->required();
    auto* tsearch = twist->add_subcommand("search", "exhaustive 2x2 block search");
    tsearch->add_option("--d", d, "multiplier d")->required();
    tsearch->add_option("--coeff-bound", coeff_bound, "bound on |q| coefficients");
    tsearch->add_option("--entry-bound", entry_bound, "bound on |A| entries");
    tsearch->add_option("--dim", dim, "also assemble a certificate of this dimension");
    auto* ttable = twist->add_subcommand("table1", "reproduce the published table");
    (void)ttable;
    auto* todd = twist->add_subcommand("build-odd", "closed-form twist for odd d");
    todd->add_option("--d", d, "odd squarefree d > 1")->required();
    todd->add_option("--n", n, "even dimension >= 4")->required();
    auto* tquad = twist->add_subcommand("build-quad", "twist over Q(sqrt m)");
    tquad->add_option("--m", quad_m, "squarefree m >= 2")->required();
    tquad->add_option("--bx", bx, "rational part of b")->required();
    tquad->add_option("--by", by, "sqrt(m) coefficient of b")->required();
    tquad->add_option("--n", n, "even dimension")->required();

    auto* ex = app.add_subcommand("examples", "large worked example families");
    ex->require_subcommand(1);
    auto* e45 = ex->add_subcommand("ex45", "canonical gluings over Q");
    e45->add_option("--r", r, "number of primes");
    e45->add_option("--n", n, "dimension divisible by 4")->required();
    auto* e46 = ex->add_subcommand("ex46", "canonical gluings over Q(sqrt 2)");
    e46->add_option("--r", r, "number of split primes");
    e46->add_option("--n", n, "even dimension >= 4")->required();
    e46->add_option("--norm-bound", norm_bound, "norm budget for the prime search");
    auto* ed5 = ex->add_subcommand("delta5", "the dimension-5 obstruction");
    (void)ed5;

    auto* d5 = app.add_subcommand("delta5", "the dimension-5 obstruction");
    (void)d5;

    auto* ver = app.add_subcommand("version", "print version");
    (void)ver;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (*inv) return cmd_invariants(form_file);
        if (*eq) return cmd_equiv(f_file, g_file, as_json);
        if (*sim) return cmd_similar(f_file, g_file, as_json);
        if (*tfd) {
            if (plan_file.empty())
                throw std::invalid_argument("trace-field: a plan file is required");
            return cmd_trace_field(plan_file);
        }
        if (*tver) {
            tf::CertificateData c = tf::certificate_from_json(tf::load_json_file(cert_file));
            tf::Lemma61Outcome out = tf::verify_lemma61(c.f0, c.a, c.a0);
            tf::json j = tf::certificate_to_json(out.certificate);
            j["failures"] = out.failures;
            std::cout << j.dump(2) << "\n";
            return out.ok() ? 0 : 1;
        }
        if (*tsearch) {
            auto blocks = tf::search_blocks(tf::QuadFieldElement(tf::Rational(d)), coeff_bound,
                                            entry_bound);
            tf::json out = tf::json::array();
            for (const auto& b : blocks) out.push_back(tf::block_to_json(b));
            tf::json top{{"blocks", std::move(out)}};
            if (dim > 0) {
                // pick one negative-direction block and pad with positive blocks
                bool assembled = false;
                for (const auto& neg : blocks) {
                    if (tf::signature(neg.q).second != 1) continue;
                    for (const auto& pos : blocks) {
                        if (tf::signature(pos.q).second != 0) continue;
                        std::vector<tf::TwistBlock2> pick{neg};
                        for (int i = 1; i < dim / 2; ++i) pick.push_back(pos);
                        try {
                            auto [f0, a0] = tf::assemble(pick);
                            tf::Lemma61Outcome out2 = tf::verify_lemma61(
                                f0, tf::QuadFieldElement(tf::Rational(d)), a0);
                            if (!out2.ok()) continue;
                            top["certificate"] = tf::certificate_to_json(out2.certificate);
                            assembled = true;
                        } catch (const std::exception&) {
                            continue;
                        }
                        break;
                    }
                    if (assembled) break;
                }
                if (!assembled) {
                    std::cout << top.dump(2) << "\n";
                    return 1;
                }
            }
            std::cout << top.dump(2) << "\n";
            return 0;
        }
        if (*ttable) {
            tf::Table1Report rep = tf::reproduce_table1();
            if (as_json)
                std::cout << tf::table1_report_to_json(rep).dump(2) << "\n";
            else
                for (const auto& row : rep.rows) {
                    std::cout << "d = " << row.d.str() << ": "
                              << (row.pass ? "pass" : "FAIL");
                    for (const auto& [name, ok] : row.checks)
                        if (!ok) std::cout << " [" << name << "]";
                    std::cout << "\n";
                }
            return rep.all_pass ? 0 : 1;
        }
        if (*todd) {
            tf::TwistCertificate cert = tf::build_odd_twist(tf::Int(d), n);
            std::cout << tf::certificate_to_json(cert).dump(2) << "\n";
            return 0;
        }
        if (*tquad) {
            tf::FieldDescriptor field = tf::FieldDescriptor::real_quadratic(tf::Int(quad_m));
            tf::QuadFieldElement b(tf::parse_rational(bx), tf::parse_rational(by), field);
            tf::QuadTwistBuild built = tf::build_quadfield_twist(b, n);
            tf::json j = tf::certificate_to_json(built.certificate);
            j["scaling"] = tf::scalar_to_json(built.scaling);
            j["note"] = built.note;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*e45) return report_out(tf::run_example_ex45(r, n), as_json);
        if (*e46) return report_out(tf::run_example_ex46(r, n, tf::Int(norm_bound)), as_json);
        if (*ed5 || *d5) return report_out(tf::run_delta5(), as_json);
        if (*ver) {
            std::cout << kVersion << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
