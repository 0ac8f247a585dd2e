#include "traceforge/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace traceforge {

namespace {

std::string field_name(const FieldDescriptor& f) {
    return f.is_rational() ? "Q" : "Q(sqrt(" + f.m().str() + "))";
}

Matrix<QuadFieldElement> matrix_from_json(const json& j, const FieldDescriptor& field) {
    std::vector<std::vector<QuadFieldElement>> rows;
    for (const auto& row : j) {
        std::vector<QuadFieldElement> r;
        for (const auto& v : row) r.push_back(scalar_from_json(v, field));
        rows.push_back(std::move(r));
    }
    return Matrix<QuadFieldElement>(rows);
}

json matrix_to_json(const Matrix<QuadFieldElement>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

// Translate structural JSON errors (missing keys, wrong types) into the
// invalid_argument channel so callers report them as usage errors.
template <typename F>
auto reject_malformed(const char* what, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

}  // namespace

json field_to_json(const FieldDescriptor& f) {
    if (f.is_rational()) return json{{"kind", "Q"}};
    return json{{"kind", "quadratic"}, {"m", f.m().str()}};
}

FieldDescriptor field_from_json(const json& j) {
    return reject_malformed("field", [&] {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldDescriptor::rationals();
    if (kind == "quadratic") {
        const auto& m = j.at("m");
        Int mv = m.is_string() ? Int(m.get<std::string>()) : Int(m.get<long long>());
        return FieldDescriptor::real_quadratic(mv);
    }
    throw std::invalid_argument("field: unknown kind '" + kind + "'");
    });
}

json scalar_to_json(const QuadFieldElement& e) {
    if (e.field().is_rational()) return to_string(e.x());
    return json{{"x", to_string(e.x())}, {"y", to_string(e.y())}};
}

QuadFieldElement scalar_from_json(const json& j, const FieldDescriptor& field) {
    return reject_malformed("scalar", [&]() -> QuadFieldElement {
    if (j.is_string())
        return promote(QuadFieldElement(parse_rational(j.get<std::string>())), field);
    if (j.is_number_integer())
        return promote(QuadFieldElement(Rational(j.get<long long>())), field);
    if (j.is_object()) {
        if (field.is_rational())
            throw std::invalid_argument("scalar: quadratic element over base field Q");
        Rational x = parse_rational(j.at("x").get<std::string>());
        Rational y = parse_rational(j.at("y").get<std::string>());
        return QuadFieldElement(x, y, field);
    }
    throw std::invalid_argument("scalar: expected string or {x, y} object");
    });
}

json form_to_json(const DiagonalForm& f) {
    json entries = json::array();
    for (const auto& e : f.entries()) entries.push_back(scalar_to_json(e));
    return json{{"field", field_to_json(f.field())}, {"entries", std::move(entries)}};
}

DiagonalForm form_from_json(const json& j) {
    return reject_malformed("form", [&] {
        FieldDescriptor field = field_from_json(j.at("field"));
        std::vector<QuadFieldElement> entries;
        for (const auto& e : j.at("entries")) entries.push_back(scalar_from_json(e, field));
        return DiagonalForm(field, std::move(entries));
    });
}

json profile_to_json(const HasseProfile& p) {
    json minus = json::array();
    for (const auto& v : p.minus_places) minus.push_back(v.str());
    return json{{"rank", p.rank},
                {"signature", json::array({p.sig.first, p.sig.second})},
                {"disc", p.disc.str()},
                {"eps_minus_one", std::move(minus)}};
}

json multiquadratic_to_json(const MultiquadraticField& k) {
    json gens = json::array();
    for (const auto& g : k.generators()) gens.push_back(scalar_to_json(g.representative()));
    return json{{"base", field_name(k.base())}, {"generators", std::move(gens)}};
}

json verdict_to_json(const Verdict& v) {
    std::string kind;
    switch (v.arithmeticity) {
        case Arithmeticity::Nonarithmetic: kind = "nonarithmetic"; break;
        case Arithmeticity::QuasiArithmetic: kind = "quasi-arithmetic"; break;
        case Arithmeticity::ArithmeticCandidate: kind = "arithmetic-candidate"; break;
    }
    return json{{"trace_field", multiquadratic_to_json(v.trace_field)},
                {"degree", v.degree_over_base.str()},
                {"verdict", kind},
                {"rule", v.rule}};
}

namespace {

json isometry_to_json(const IsometrySpec& iso) {
    if (std::holds_alternative<CanonicalIsometry>(iso)) return json{{"type", "canonical"}};
    if (std::holds_alternative<IdentityIsometry>(iso)) return json{{"type", "identity"}};
    if (const auto* em = std::get_if<ExplicitMatrixIsometry>(&iso)) {
        Matrix<QuadFieldElement> u(em->matrix.rows(), em->matrix.cols());
        Matrix<QuadFieldElement> v(em->matrix.rows(), em->matrix.cols());
        for (std::size_t i = 0; i < em->matrix.rows(); ++i)
            for (std::size_t j = 0; j < em->matrix.cols(); ++j) {
                u(i, j) = em->matrix(i, j).u();
                v(i, j) = em->matrix(i, j).v();
            }
        return json{{"type", "matrix"},
                    {"generator", scalar_to_json(em->generator)},
                    {"u", matrix_to_json(u)},
                    {"v", matrix_to_json(v)}};
    }
    const auto& tb = std::get<TwistBlockIsometry>(iso);
    return json{{"type", "twist-block"},
                {"a", scalar_to_json(tb.a)},
                {"a0", matrix_to_json(tb.a0)}};
}

IsometrySpec isometry_from_json(const json& j, const FieldDescriptor& field) {
    std::string type = j.at("type").get<std::string>();
    if (type == "canonical") return CanonicalIsometry{};
    if (type == "identity") return IdentityIsometry{};
    if (type == "matrix") {
        QuadFieldElement g = scalar_from_json(j.at("generator"), field);
        Matrix<QuadFieldElement> u = matrix_from_json(j.at("u"), field);
        Matrix<QuadFieldElement> v =
            j.contains("v") ? matrix_from_json(j.at("v"), field)
                            : Matrix<QuadFieldElement>(u.rows(), u.cols());
        if (u.rows() != v.rows() || u.cols() != v.cols())
            throw std::invalid_argument("isometry: u and v shapes differ");
        ExtMatrix m(u.rows(), u.cols());
        for (std::size_t i = 0; i < u.rows(); ++i)
            for (std::size_t c = 0; c < u.cols(); ++c)
                m(i, c) = ExtScalar(u(i, c), v(i, c), g);
        return ExplicitMatrixIsometry{std::move(m), g};
    }
    if (type == "twist-block")
        return TwistBlockIsometry{matrix_from_json(j.at("a0"), field),
                                  scalar_from_json(j.at("a"), field)};
    throw std::invalid_argument("isometry: unknown type '" + type + "'");
}

}  // namespace

json plan_to_json(const GluingPlan& p) {
    json pieces = json::array();
    for (const auto& piece : p.pieces)
        pieces.push_back(json{{"label", piece.label}, {"a", scalar_to_json(piece.a)}});
    json f0 = json::array();
    for (const auto& e : p.f0.entries()) f0.push_back(scalar_to_json(e));
    json steps = json::array();
    for (const auto& s : p.steps) {
        if (const auto* ib = std::get_if<InterbreedStep>(&s))
            steps.push_back(json{{"op", "interbreed"},
                                 {"left", ib->left},
                                 {"right", ib->right},
                                 {"isometry", isometry_to_json(ib->iso)}});
        else if (const auto* cu = std::get_if<CloseUpStep>(&s))
            steps.push_back(json{{"op", "close-up"},
                                 {"piece", cu->piece},
                                 {"isometry", isometry_to_json(cu->iso)}});
        else if (const auto* d = std::get_if<DoubleStep>(&s))
            steps.push_back(json{{"op", "double"}, {"piece", d->piece}});
        else {
            const auto& t = std::get<TwistStep>(s);
            steps.push_back(json{{"op", "twist"},
                                 {"piece", t.piece},
                                 {"isometry", isometry_to_json(IsometrySpec{t.iso})}});
        }
    }
    return json{{"base_field", field_to_json(p.base_field)},
                {"n", p.dimension},
                {"f0", std::move(f0)},
                {"pieces", std::move(pieces)},
                {"steps", std::move(steps)}};
}

namespace {

GluingPlan plan_from_json_impl(const json& j) {
    FieldDescriptor field = field_from_json(j.at("base_field"));
    int n = j.at("n").get<int>();
    std::vector<QuadFieldElement> f0;
    for (const auto& e : j.at("f0")) f0.push_back(scalar_from_json(e, field));
    GluingPlan plan{field, n, DiagonalForm(field, std::move(f0)), {}, {}};
    for (const auto& p : j.at("pieces"))
        plan.pieces.push_back(
            Piece{p.at("label").get<std::string>(), scalar_from_json(p.at("a"), field)});
    for (const auto& s : j.at("steps")) {
        std::string op = s.at("op").get<std::string>();
        if (op == "interbreed")
            plan.steps.push_back(InterbreedStep{s.at("left").get<std::string>(),
                                                s.at("right").get<std::string>(),
                                                isometry_from_json(s.at("isometry"), field)});
        else if (op == "close-up")
            plan.steps.push_back(CloseUpStep{s.at("piece").get<std::string>(),
                                             isometry_from_json(s.at("isometry"), field)});
        else if (op == "double")
            plan.steps.push_back(DoubleStep{s.at("piece").get<std::string>()});
        else if (op == "twist") {
            IsometrySpec iso = isometry_from_json(s.at("isometry"), field);
            auto* tb = std::get_if<TwistBlockIsometry>(&iso);
            if (!tb) throw std::invalid_argument("plan: twist steps need a twist-block isometry");
            plan.steps.push_back(TwistStep{s.at("piece").get<std::string>(), std::move(*tb)});
        } else
            throw std::invalid_argument("plan: unknown op '" + op + "'");
    }
    return plan;
}

}  // namespace

GluingPlan plan_from_json(const json& j) {
    return reject_malformed("plan", [&] { return plan_from_json_impl(j); });
}

json certificate_to_json(const TwistCertificate& c) {
    return json{{"f0", form_to_json(c.f0)},
                {"a", scalar_to_json(c.a)},
                {"A0", matrix_to_json(c.a0)},
                {"checks",
                 json{{"condition1", c.checks.condition1},
                      {"condition2", c.checks.condition2},
                      {"a_valid", c.checks.a_valid},
                      {"f0_admissible", c.checks.f0_admissible},
                      {"field_consistent", c.checks.field_consistent}}},
                {"resulting_field", multiquadratic_to_json(c.resulting_field)}};
}

CertificateData certificate_from_json(const json& j) {
    return reject_malformed("certificate", [&] {
        DiagonalForm f0 = form_from_json(j.at("f0"));
        QuadFieldElement a = scalar_from_json(j.at("a"), f0.field());
        Matrix<QuadFieldElement> a0 = matrix_from_json(j.at("A0"), f0.field());
        return CertificateData{std::move(f0), std::move(a), std::move(a0)};
    });
}

json block_to_json(const TwistBlock2& b) {
    return json{{"q", form_to_json(b.q)},
                {"A", matrix_to_json(b.a)},
                {"d", scalar_to_json(b.d)}};
}

json table1_report_to_json(const Table1Report& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json checks = json::object();
        for (const auto& [name, ok] : row.checks) checks[name] = ok;
        rows.push_back(json{{"d", row.d.str()},
                            {"checks", std::move(checks)},
                            {"pass", row.pass}});
    }
    return json{{"rows", std::move(rows)}, {"all_pass", r.all_pass}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return reject_malformed(path.c_str(), [&] {
        json j;
        in >> j;
        return j;
    });
}

}  // namespace traceforge
