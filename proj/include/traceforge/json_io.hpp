#pragma once

#include "traceforge/forms.hpp"
#include "traceforge/gluing.hpp"
#include "traceforge/places.hpp"
#include "traceforge/twist.hpp"

#include <json.hpp>

#include <string>

namespace traceforge {

// Ordered JSON so identical inputs always serialize byte-identically.
using json = nlohmann::ordered_json;

json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const json& j);

// Rational scalars serialize as "p/q" strings; quadratic elements as
// {"x": "p/q", "y": "p/q"}. Parsing accepts either shape and promotes.
json scalar_to_json(const QuadFieldElement& e);
QuadFieldElement scalar_from_json(const json& j, const FieldDescriptor& field);

json form_to_json(const DiagonalForm& f);
DiagonalForm form_from_json(const json& j);

json profile_to_json(const HasseProfile& p);

json multiquadratic_to_json(const MultiquadraticField& k);
json verdict_to_json(const Verdict& v);

json plan_to_json(const GluingPlan& p);
GluingPlan plan_from_json(const json& j);

json certificate_to_json(const TwistCertificate& c);
struct CertificateData {
    DiagonalForm f0;
    QuadFieldElement a;
    Matrix<QuadFieldElement> a0;
};
CertificateData certificate_from_json(const json& j);

json block_to_json(const TwistBlock2& b);
json table1_report_to_json(const Table1Report& r);

json load_json_file(const std::string& path);

}  // namespace traceforge
