#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fqdigits/carlitz.hpp"
#include "fqdigits/classnum.hpp"
#include "fqdigits/digits.hpp"
#include "fqdigits/error.hpp"
#include "fqdigits/intmath.hpp"
#include "fqdigits/report.hpp"
#include "verify.hpp"

namespace fqd::cli {

namespace {

constexpr std::uint64_t kMaxSweepGroupOrder = 1000000;

const char* kGrammar =
    "Polynomials: terms c, T, c*T, c*T^k, T^k joined by + or - (the * is optional),\n"
    "e.g. \"T^3+2*T+2\". Over F_{p^a}, a > 1, coefficients are parenthesised\n"
    "coefficient lists in the generator g, e.g. \"(1,1)*T+(0,1)\" or \"(1+1*g)*T\".\n"
    "The comma list \"2,2,0,1\" (ascending, no T) is accepted everywhere too.\n"
    "--modulus gives the defining polynomial of F_q over F_p as an ascending\n"
    "comma list, e.g. \"2,2,1\" for g^2+2g+2 over F_3.";

struct FieldOpts {
  std::uint64_t q = 0;
  std::string modulus;
};

struct OutputOpts {
  std::string format;
  std::string output;
};

struct Options {
  FieldOpts field;
  OutputOpts out;
  std::string p, g, num, den, i;
  std::int64_t terms = 10;
  std::uint64_t l = 0;
  std::vector<std::uint64_t> ls;
  std::string part = "all";
  std::vector<std::string> verify;
  int d = 0;
  unsigned parallel = 1;
};

FieldRef make_field(const FieldOpts& f) {
  if (f.modulus.empty()) return FieldSpec::of_order(f.q);
  const auto fac = factor(f.q);
  if (fac.size() != 1) throw DomainError("field order " + std::to_string(f.q) + " is not a prime power");
  const auto [p, a] = fac[0];
  std::vector<std::uint32_t> coeffs;
  std::stringstream ss(f.modulus);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      coeffs.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw ParseError("bad modulus coefficient \"" + tok + "\"");
    }
  }
  if (coeffs.size() != a + 1)
    throw ParseError("modulus for q = " + std::to_string(f.q) + " needs " + std::to_string(a + 1) + " coefficients");
  if (a == 1) throw DomainError("--modulus applies only to extension fields");
  return FieldSpec::extension(static_cast<std::uint32_t>(p), coeffs);
}

void emit(const OutputOpts& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file || !(file << text)) throw ResourceError("cannot write " + o.output);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ReportOptions report_options(const Options& o) {
  ReportOptions ro;
  if (o.part == "plus") ro.part = ReportPart::Plus;
  if (o.part == "minus") ro.part = ReportPart::Minus;
  for (const auto& v : o.verify) {
    if (v == "charsum") ro.verify_charsum = true;
    if (v == "pointcount") ro.verify_pointcount = true;
  }
  return ro;
}

// --- commands ---------------------------------------------------------------

int cmd_expand(const Options& o, std::ostream& out) {
  const FieldRef F = make_field(o.field);
  Poly num = Poly::one(F), den = Poly::one(F);
  if (!o.p.empty()) {
    if (!o.num.empty() || !o.den.empty()) throw ParseError("give either --P or --num/--den");
    den = parse_poly(F, o.p);
  } else {
    if (o.num.empty() || o.den.empty()) throw ParseError("expand needs --P or both --num and --den");
    num = parse_poly(F, o.num);
    den = parse_poly(F, o.den);
  }
  const DigitExpansion x = digit_expand(num, den, parse_poly(F, o.g), o.terms);
  if (o.out.format == "json") {
    emit(o.out, dump(to_json(x)), out);
    return kOk;
  }
  std::ostringstream s;
  s << "f = (" << to_string(x.numerator) << ")/(" << to_string(x.denominator) << ")\n";
  s << "G = " << to_string(x.base) << '\n';
  s << "H_0 = " << to_string(x.h0) << '\n';
  for (std::size_t k = 0; k < x.digits.size(); ++k) s << "H_" << k + 1 << " = " << to_string(x.digits[k]) << '\n';
  s << "period = " << (x.period ? std::to_string(*x.period) : std::string("none")) << '\n';
  emit(o.out, s.str(), out);
  return kOk;
}

int cmd_period(const Options& o, std::ostream& out) {
  const FieldRef F = make_field(o.field);
  const Poly m = parse_poly(F, o.p), g = parse_poly(F, o.g);
  const std::uint64_t period = digit_period(m, g);
  if (o.out.format == "json") {
    emit(o.out, dump(Json{{"modulus", to_string(m)}, {"base", to_string(g)}, {"period", period}}), out);
  } else {
    emit(o.out, "period = " + std::to_string(period) + "\n", out);
  }
  return kOk;
}

std::string report_text(const ClassNumberReport& rep) {
  std::ostringstream s;
  s << "q = " << rep.q << ", P = " << rep.p << ", G = " << rep.g << '\n';
  s << "l = " << rep.l << ", m = " << rep.m << ", n = " << rep.n << '\n';
  auto line = [&](const char* name, const std::optional<ClassNumberValue>& v) {
    if (!v) return;
    s << name << " = " << v->value();
    std::string methods;
    for (const auto& m : v->methods()) methods += (methods.empty() ? "" : ", ") + m;
    s << " (" << methods << ")";
    if (!v->agree()) {
      s << " MISMATCH:";
      for (const auto& [m, x] : v->by_method) s << ' ' << m << '=' << x;
    }
    s << '\n';
  };
  line("h_plus", rep.h_plus);
  line("h_minus", rep.h_minus);
  line("h", rep.h);
  return s.str();
}

int cmd_classnum(const Options& o, std::ostream& out) {
  const FieldRef F = make_field(o.field);
  const ResidueCtx ctx(parse_poly(F, o.p), parse_poly(F, o.g));
  const std::uint64_t l = o.l == 0 ? ctx.group_order() : o.l;
  const ClassNumberReport rep = class_number_report(ctx, l, report_options(o));
  if (o.out.format == "json") {
    Json j = to_json(rep);
    j["subfield"] = to_json(subfield(ctx, l));
    emit(o.out, dump(j), out);
  } else if (o.out.format == "csv") {
    emit(o.out, csv_header() + "\n" + csv_row(rep) + "\n", out);
  } else {
    emit(o.out, report_text(rep), out);
  }
  return rep.agree() ? kOk : kVerifyFailed;
}

int cmd_carlitz(const Options& o, std::ostream& out) {
  const FieldRef F = make_field(o.field);
  const Poly i = parse_poly(F, o.i);
  const AdditivePoly rho = carlitz_poly(i);
  if (o.out.format == "json") {
    Json coeffs = Json::array();
    for (const Poly& c : rho.coeffs()) coeffs.push_back(to_string(c));
    emit(o.out, dump(Json{{"I", to_string(i)}, {"coefficients", coeffs}, {"rho", to_string(rho)}}), out);
  } else {
    emit(o.out, to_string(rho) + "\n", out);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VerifyReport rep = verify_paper();
  if (o.out.format == "json") {
    Json checks = Json::array();
    for (const Check& c : rep.checks)
      checks.push_back({{"group", c.group}, {"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    emit(o.out, dump(Json{{"passed", rep.passed()}, {"groups", rep.groups}, {"checks", checks}}), out);
  } else {
    emit(o.out, render_text(rep), out);
  }
  return rep.passed() ? kOk : kVerifyFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const FieldRef F = make_field(o.field);
  if (o.d < 1) throw DomainError("--d must be >= 1");
  const auto n = checked_pow(F->q(), static_cast<unsigned>(o.d));
  if (!n || *n - 1 > kMaxSweepGroupOrder)
    throw ResourceError("sweep needs q^d - 1 <= " + std::to_string(kMaxSweepGroupOrder));
  const std::uint64_t group_order = *n - 1;

  std::vector<std::uint64_t> ls = o.ls;
  if (ls.empty()) {
    for (std::uint64_t l : divisors(group_order))
      if (l > 1) ls.push_back(l);
  }
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  for (std::uint64_t l : ls)
    if (l == 0 || group_order % l != 0)
      throw DomainError("l = " + std::to_string(l) + " does not divide q^d - 1 = " + std::to_string(group_order));

  std::vector<Poly> ps;
  for (const Poly& p : monic_polys(F, o.d))
    if (is_irreducible(p)) ps.push_back(p);

  const ReportOptions ro = report_options(o);
  std::vector<std::vector<ClassNumberReport>> rows(ps.size());
  std::vector<std::exception_ptr> errors(ps.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < ps.size();) {
      try {
        const ResidueCtx ctx(ps[idx], canonical_primitive_lift(ps[idx]));
        for (std::uint64_t l : ls) rows[idx].push_back(class_number_report(ctx, l, ro));
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(o.parallel, static_cast<unsigned>(ps.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  bool agree = true;
  std::string text;
  if (o.out.format == "json") {
    Json arr = Json::array();
    for (const auto& per_p : rows)
      for (const auto& rep : per_p) {
        arr.push_back(to_json(rep));
        agree = agree && rep.agree();
      }
    text = dump(Json{{"q", F->q()}, {"d", o.d}, {"rows", arr}});
  } else {
    text = csv_header() + "\n";
    for (const auto& per_p : rows)
      for (const auto& rep : per_p) {
        text += csv_row(rep) + "\n";
        agree = agree && rep.agree();
      }
  }
  emit(o.out, text, out);
  return agree ? kOk : kVerifyFailed;
}

void add_field(CLI::App* app, Options& o) {
  app->add_option("--q", o.field.q, "Field order q = p^a")->required();
  app->add_option("--modulus", o.field.modulus, "Defining polynomial of F_q over F_p (ascending list)");
}

void add_output(CLI::App* app, Options& o, std::vector<std::string> formats) {
  const std::string help = "Output format (default " + formats.front() + ")";
  app->add_option("--format", o.out.format, help)->check(CLI::IsMember(std::move(formats)));
  app->add_option("--output", o.out.output, "Write output to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digit expansions over F_q[T] and class numbers of cyclotomic function fields", "fqdigits"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Options o;

  CLI::App* expand = app.add_subcommand("expand", "Digit expansion of num/den (or 1/P) in base G");
  add_field(expand, o);
  expand->add_option("--P", o.p, "Expand 1/P");
  expand->add_option("--num", o.num, "Numerator");
  expand->add_option("--den", o.den, "Denominator");
  expand->add_option("--G", o.g, "Base")->required();
  expand->add_option("--terms", o.terms, "Number of digits H_1..H_N")->capture_default_str();
  add_output(expand, o, {"text", "json"});

  CLI::App* period = app.add_subcommand("period", "Period of the digits of 1/P in base G");
  add_field(period, o);
  period->add_option("--P", o.p, "Modulus")->required();
  period->add_option("--G", o.g, "Base")->required();
  add_output(period, o, {"text", "json"});

  CLI::App* classnum = app.add_subcommand("classnum", "Class numbers of the subfield of degree l of K_P");
  add_field(classnum, o);
  classnum->add_option("--P", o.p, "Monic irreducible P")->required();
  classnum->add_option("--G", o.g, "Primitive root G modulo P, deg G >= deg P")->required();
  classnum->add_option("--l", o.l, "Degree [L:K]; defaults to q^d - 1 (L = K_P)");
  classnum->add_option("--part", o.part, "Which class numbers to report")
      ->check(CLI::IsMember({"all", "plus", "minus"}))
      ->capture_default_str();
  classnum->add_option("--verify", o.verify, "Cross-check with an independent route (repeatable)")
      ->check(CLI::IsMember({"charsum", "pointcount"}));
  add_output(classnum, o, {"text", "json", "csv"});

  CLI::App* carlitz = app.add_subcommand("carlitz", "Additive polynomial of the Carlitz action of I");
  add_field(carlitz, o);
  carlitz->add_option("--I", o.i, "Polynomial I")->required();
  add_output(carlitz, o, {"text", "json"});

  CLI::App* verify = app.add_subcommand("verify-paper", "Check the pinned reference values and identities");
  add_output(verify, o, {"text", "json"});

  CLI::App* sweep = app.add_subcommand("sweep", "Class numbers for every monic irreducible P of degree d");
  add_field(sweep, o);
  sweep->add_option("--d", o.d, "Degree of P")->required();
  sweep->add_option("--l", o.ls, "Subfield degrees (repeatable); defaults to every l > 1 dividing q^d - 1");
  sweep->add_option("--verify", o.verify, "Cross-check with an independent route (repeatable)")
      ->check(CLI::IsMember({"charsum", "pointcount"}));
  sweep->add_option("--parallel", o.parallel, "Worker threads; row order is unaffected")->capture_default_str();
  add_output(sweep, o, {"csv", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  // The first listed format of the chosen subcommand is its default.
  if (o.out.format.empty()) o.out.format = *sweep ? "csv" : "text";

  try {
    if (*expand) return cmd_expand(o, out);
    if (*period) return cmd_period(o, out);
    if (*classnum) return cmd_classnum(o, out);
    if (*carlitz) return cmd_carlitz(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*sweep) return cmd_sweep(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kHypothesis;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kParseError;
}

}  // namespace fqd::cli
