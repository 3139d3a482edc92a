#include "fqdigits/report.hpp"

#include <limits>

#include "fqdigits/error.hpp"

namespace fqd {

Json bigint_to_json(const BigInt& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer \"" + j.get<std::string>() + "\"");
    return v;
  }
  throw ParseError("expected an integer");
}

namespace {

Json poly_json(const Poly& f) { return to_string(f); }

Poly poly_from(const FieldRef& spec, const Json& j) { return parse_poly(spec, j.get<std::string>()); }

Json value_json(const ClassNumberValue& v) {
  Json by = Json::object();
  for (const auto& name : v.methods()) by[name] = bigint_to_json(v.by_method.at(name));
  return {{"value", bigint_to_json(v.value())}, {"methods", by}, {"agree", v.agree()}};
}

ClassNumberValue value_from(const Json& j) {
  ClassNumberValue v;
  for (const auto& [name, x] : j.at("methods").items()) v.by_method[name] = bigint_from_json(x);
  return v;
}

}  // namespace

Json to_json(const DigitExpansion& x) {
  Json digits = Json::array();
  for (const Poly& h : x.digits) digits.push_back(poly_json(h));
  Json j{{"base", poly_json(x.base)},
         {"numerator", poly_json(x.numerator)},
         {"denominator", poly_json(x.denominator)},
         {"H0", poly_json(x.h0)},
         {"digits", digits}};
  j["period"] = x.period ? Json(*x.period) : Json(nullptr);
  return j;
}

DigitExpansion digit_expansion_from_json(const FieldRef& spec, const Json& j) {
  try {
    DigitExpansion x{poly_from(spec, j.at("base")), poly_from(spec, j.at("numerator")),
                     poly_from(spec, j.at("denominator")), poly_from(spec, j.at("H0")), {}, std::nullopt};
    for (const auto& h : j.at("digits")) x.digits.push_back(poly_from(spec, h));
    if (!j.at("period").is_null()) x.period = j.at("period").get<std::uint64_t>();
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed expansion JSON: ") + e.what());
  }
}

Json to_json(const SubfieldDescriptor& sd) {
  Json yl = Json::array();
  for (const auto& lambda : sd.yl) yl.push_back(lambda.index());
  return {{"l", sd.l},
          {"m", sd.m},
          {"n", sd.n},
          {"group_order", sd.group_order},
          {"X_L", sd.xl},
          {"X_L_plus", sd.xl_plus},
          {"X_L_minus", sd.xl_minus},
          {"Y_L", yl},
          {"alpha_exponent", sd.alpha_exponent}};
}

SubfieldDescriptor subfield_from_json(const FieldRef& spec, const Json& j) {
  try {
    SubfieldDescriptor sd;
    sd.l = j.at("l").get<std::uint64_t>();
    sd.m = j.at("m").get<std::uint64_t>();
    sd.n = j.at("n").get<std::uint64_t>();
    sd.group_order = j.at("group_order").get<std::uint64_t>();
    sd.xl = j.at("X_L").get<std::vector<std::uint64_t>>();
    sd.xl_plus = j.at("X_L_plus").get<std::vector<std::uint64_t>>();
    sd.xl_minus = j.at("X_L_minus").get<std::vector<std::uint64_t>>();
    for (const auto& s : j.at("Y_L")) sd.yl.emplace_back(spec, s.get<std::uint64_t>());
    sd.alpha_exponent = j.at("alpha_exponent").get<std::vector<std::uint64_t>>();
    return sd;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed subfield JSON: ") + e.what());
  }
}

Json to_json(const ClassNumberReport& rep) {
  Json j{{"q", rep.q}, {"P", rep.p}, {"G", rep.g}, {"d", rep.d}, {"e", rep.e},
         {"r", rep.r}, {"l", rep.l}, {"m", rep.m}, {"n", rep.n}};
  if (rep.h_plus) j["h_plus"] = value_json(*rep.h_plus);
  if (rep.h_minus) j["h_minus"] = value_json(*rep.h_minus);
  if (rep.h) j["h"] = value_json(*rep.h);
  j["agree"] = rep.agree();
  return j;
}

ClassNumberReport class_number_report_from_json(const Json& j) {
  try {
    ClassNumberReport rep;
    rep.q = j.at("q").get<std::uint64_t>();
    rep.p = j.at("P").get<std::string>();
    rep.g = j.at("G").get<std::string>();
    rep.d = j.at("d").get<int>();
    rep.e = j.at("e").get<int>();
    rep.r = j.at("r").get<std::uint64_t>();
    rep.l = j.at("l").get<std::uint64_t>();
    rep.m = j.at("m").get<std::uint64_t>();
    rep.n = j.at("n").get<std::uint64_t>();
    if (j.contains("h_plus")) rep.h_plus = value_from(j.at("h_plus"));
    if (j.contains("h_minus")) rep.h_minus = value_from(j.at("h_minus"));
    if (j.contains("h")) rep.h = value_from(j.at("h"));
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string csv_header() { return "q,d,P,G,l,m,n,h_plus,h_minus,h,methods,agree"; }

std::string csv_row(const ClassNumberReport& rep) {
  auto cell = [](const std::optional<ClassNumberValue>& v) { return v ? v->value().get_str() : std::string(); };
  std::string methods;
  for (const auto* v : {&rep.h, &rep.h_plus, &rep.h_minus}) {
    if (!*v) continue;
    for (const auto& name : (*v)->methods()) methods += (methods.empty() ? "" : ";") + name;
    break;
  }
  return std::to_string(rep.q) + "," + std::to_string(rep.d) + ",\"" + rep.p + "\",\"" + rep.g + "\"," +
         std::to_string(rep.l) + "," + std::to_string(rep.m) + "," + std::to_string(rep.n) + "," +
         cell(rep.h_plus) + "," + cell(rep.h_minus) + "," + cell(rep.h) + "," + methods + "," +
         (rep.agree() ? "true" : "false");
}

}  // namespace fqd
