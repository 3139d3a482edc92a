#pragma once

// JSON and CSV renderings of expansions, subfields and class number reports.
// Big integers are JSON numbers when they fit in int64, strings otherwise.

#include <string>
#include <vector>

#include <json.hpp>

#include "fqdigits/chars.hpp"
#include "fqdigits/classnum.hpp"
#include "fqdigits/digits.hpp"

namespace fqd {

using Json = nlohmann::ordered_json;

Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json to_json(const DigitExpansion& x);
DigitExpansion digit_expansion_from_json(const FieldRef& spec, const Json& j);

Json to_json(const SubfieldDescriptor& sd);
SubfieldDescriptor subfield_from_json(const FieldRef& spec, const Json& j);

Json to_json(const ClassNumberReport& rep);
ClassNumberReport class_number_report_from_json(const Json& j);

/// q,d,P,G,l,m,n,h_plus,h_minus,h,methods,agree
std::string csv_header();
std::string csv_row(const ClassNumberReport& rep);

}  // namespace fqd
