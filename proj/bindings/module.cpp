// Python module: every operation takes and returns JSON strings; the
// traceforge package converts to and from Python dicts. Keeping the boundary
// at serialized JSON reuses the CLI's exact wire formats.

#include "traceforge/json_io.hpp"
#include "traceforge/report.hpp"
#include "traceforge/twist.hpp"

#include <pybind11/pybind11.h>

#include <string>

namespace py = pybind11;
namespace tf = traceforge;

namespace {

tf::json parse(const std::string& s) { return tf::json::parse(s); }

std::string invariants(const std::string& form) {
    tf::DiagonalForm f = tf::form_from_json(parse(form));
    if (!f.field().is_rational())
        throw std::invalid_argument("invariants: Hasse profiles are computed over Q only");
    return tf::profile_to_json(tf::hasse_profile(f)).dump();
}

std::string equivalent(const std::string& f_json, const std::string& g_json) {
    tf::DiagonalForm f = tf::form_from_json(parse(f_json));
    tf::DiagonalForm g = tf::form_from_json(parse(g_json));
    tf::EquivalenceVerdict v = tf::equivalent_Q(f, g);
    return tf::json{{"verdict", tf::verdict_str(v)},
                    {"equivalent", tf::is_equivalent(v)}}
        .dump();
}

std::string similar(const std::string& f_json, const std::string& g_json) {
    tf::SimilarityResult r =
        tf::similar_Q(tf::form_from_json(parse(f_json)), tf::form_from_json(parse(g_json)));
    tf::json out{{"verdict", tf::verdict_str(r.verdict)}};
    if (r.lambda) out["lambda"] = tf::to_string(*r.lambda);
    return out.dump();
}

std::string trace_field(const std::string& plan) {
    return tf::verdict_to_json(tf::trace_field(tf::plan_from_json(parse(plan)))).dump();
}

std::string verify_certificate(const std::string& cert) {
    tf::CertificateData c = tf::certificate_from_json(parse(cert));
    tf::Lemma61Outcome out = tf::verify_lemma61(c.f0, c.a, c.a0);
    tf::json j = tf::certificate_to_json(out.certificate);
    j["failures"] = out.failures;
    j["ok"] = out.ok();
    return j.dump();
}

std::string search_blocks(long long d, long coeff_bound, long entry_bound) {
    tf::json out = tf::json::array();
    for (const auto& b :
         tf::search_blocks(tf::QuadFieldElement(tf::Rational(d)), coeff_bound, entry_bound))
        out.push_back(tf::block_to_json(b));
    return out.dump();
}

std::string table1() { return tf::table1_report_to_json(tf::reproduce_table1()).dump(); }

std::string build_odd_twist(long long d, int n) {
    return tf::certificate_to_json(tf::build_odd_twist(tf::Int(d), n)).dump();
}

std::string build_quad_twist(long long m, const std::string& bx, const std::string& by,
                             int n) {
    tf::FieldDescriptor field = tf::FieldDescriptor::real_quadratic(tf::Int(m));
    tf::QuadFieldElement b(tf::parse_rational(bx), tf::parse_rational(by), field);
    tf::QuadTwistBuild built = tf::build_quadfield_twist(b, n);
    tf::json j = tf::certificate_to_json(built.certificate);
    j["scaling"] = tf::scalar_to_json(built.scaling);
    j["note"] = built.note;
    return j.dump();
}

std::string example_ex45(int r, int n) { return tf::run_example_ex45(r, n).to_json().dump(); }

std::string example_ex46(int r, int n, long long norm_bound) {
    return tf::run_example_ex46(r, n, tf::Int(norm_bound)).to_json().dump();
}

std::string delta5() { return tf::run_delta5().to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_traceforge, m) {
    m.doc() = "exact trace-field computations for gluings of arithmetic pieces";
    m.def("invariants", &invariants, py::arg("form"));
    m.def("equivalent", &equivalent, py::arg("f"), py::arg("g"));
    m.def("similar", &similar, py::arg("f"), py::arg("g"));
    m.def("trace_field", &trace_field, py::arg("plan"));
    m.def("verify_certificate", &verify_certificate, py::arg("certificate"));
    m.def("search_blocks", &search_blocks, py::arg("d"), py::arg("coeff_bound") = 3,
          py::arg("entry_bound") = 3);
    m.def("table1", &table1);
    m.def("build_odd_twist", &build_odd_twist, py::arg("d"), py::arg("n"));
    m.def("build_quad_twist", &build_quad_twist, py::arg("m"), py::arg("bx"), py::arg("by"),
          py::arg("n"));
    m.def("example_ex45", &example_ex45, py::arg("r"), py::arg("n"));
    m.def("example_ex46", &example_ex46, py::arg("r"), py::arg("n"),
          py::arg("norm_bound") = 500);
    m.def("delta5", &delta5);
}
