// finortho command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 ok, 1 numerical failure, 2 verification failed,
// 3 parameter / admissibility error, 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "finortho/finortho.h"

namespace {

using nlohmann::json;

constexpr int kExitNumeric = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitParameter = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  fo_status status;
  ApiError(fo_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(fo_status s) {
  if (s != FO_OK) throw ApiError(s, std::string(fo_status_name(s)) + ": " + fo_last_error());
}

// Owns a string handed out by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  fo_string_free(s);
  return out;
}

// Family selection shared by every subcommand.
struct FamilyArgs {
  std::string family;
  std::map<std::string, std::string> values;
  bool lenient = false;

  void attach(CLI::App* cmd, bool with_bessel) {
    cmd->add_option("--family", family, with_bessel ? "M, N, I, J, bessel, phi or psi" : "M, N, I, J, phi or psi")
        ->required();
    for (const char* key : {"p", "q", "alpha", "a", "b", "m", "r", "s"})
      cmd->add_option(std::string("--") + key, values[key], std::string("parameter ") + key);
    cmd->add_flag("--lenient", lenient, "phi/psi: accept non-integer 2a (outside the proven scope)");
  }

  std::string kind() const {
    std::string k;
    for (char c : family) k += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (k == "m" || k == "n" || k == "i" || k == "j") return std::string(1, static_cast<char>(std::toupper(k[0])));
    if (k == "phi" || k == "psi" || k == "bessel") return k;
    throw UsageError("unknown family '" + family + "'");
  }

  std::set<std::string> given() const {
    std::set<std::string> out;
    for (const auto& [k, v] : values)
      if (!v.empty()) out.insert(k);
    return out;
  }

  // Parameter JSON for the library; numbers stay strings so they parse exactly.
  json params() const {
    static const std::map<std::string, std::pair<std::vector<std::string>, std::vector<std::string>>> shapes = {
        {"M", {{"p", "q"}, {}}},
        {"N", {{"p"}, {}}},
        {"I", {{"p"}, {}}},
        {"J", {{"p", "q"}, {}}},
        {"bessel", {{"alpha"}, {}}},
        {"phi", {{"a", "b"}, {"m", "r", "s"}}},
        {"psi", {{"a"}, {"m", "r", "s"}}},
    };
    static const std::regex number(R"(^[+-]?(\d+/\d+|\d+\.?\d*([eE][+-]?\d+)?|\.\d+([eE][+-]?\d+)?)$)");
    const std::string k = kind();
    const auto& [required, optional] = shapes.at(k);
    std::set<std::string> allowed(required.begin(), required.end());
    allowed.insert(optional.begin(), optional.end());
    json out = json::object();
    for (const auto& key : given()) {
      if (!allowed.count(key)) throw UsageError("--" + key + " does not apply to family " + family);
      const std::string& v = values.at(key);
      if (!std::regex_match(v, number)) throw UsageError("malformed number '" + v + "' for --" + key);
      out[key] = v;
    }
    for (const auto& key : required)
      if (!out.contains(key)) throw UsageError("family " + family + " needs --" + key);
    if (lenient) {
      if (k != "phi" && k != "psi") throw UsageError("--lenient applies only to phi and psi");
      out["mode"] = "lenient";
    }
    return out;
  }
};

struct Handle {
  fo_family* fam = nullptr;
  explicit Handle(const FamilyArgs& args) {
    const std::string k = args.kind();
    if (k == "bessel") throw UsageError("the bessel family only supports gen");
    check(fo_family_create(k.c_str(), args.params().dump().c_str(), &fam));
  }
  ~Handle() { fo_family_destroy(fam); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
};

std::string render_term(const json& t, bool first) {
  std::string num = t.at("num").get<std::string>();
  const std::string den = t.at("den").get<std::string>();
  const int e = t.at("exp").get<int>();
  bool neg = !num.empty() && num[0] == '-';
  if (neg) num.erase(0, 1);
  std::string coef = den == "1" ? num : num + "/" + den;
  std::string mono = e == 0 ? "" : (e == 1 ? "x" : "x^" + std::to_string(e));
  std::string body;
  if (mono.empty()) body = coef;
  else if (coef == "1") body = mono;
  else body = coef + "*" + mono;
  if (first) return (neg ? "-" : "") + body;
  return (neg ? " - " : " + ") + body;
}

std::string poly_text(const json& p) {
  const auto& terms = p.at("terms");
  if (terms.empty()) return "0";
  std::string out;
  // Highest degree first reads more naturally.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) out += render_term(*it, it == terms.rbegin());
  return out;
}

void require_format(const std::string& fmt) {
  if (fmt != "json" && fmt != "csv" && fmt != "text") throw UsageError("unknown format '" + fmt + "'");
}

int cmd_gen(const FamilyArgs& args, long n, const std::string& fmt) {
  require_format(fmt);
  const std::string k = args.kind();
  std::string out;
  if (k == "bessel") {
    const json prm = args.params();
    char* s = nullptr;
    check(fo_bessel_poly_json(n, prm.at("alpha").get<std::string>().c_str(), &s));
    out = take(s);
  } else {
    Handle h(args);
    char* s = nullptr;
    check(fo_family_poly_json(h.fam, n, &s));
    out = take(s);
  }
  const json p = json::parse(out);
  if (fmt == "json") {
    std::cout << out << "\n";
  } else if (fmt == "csv") {
    std::cout << "exp,num,den\n";
    for (const auto& t : p.at("terms"))
      std::cout << t.at("exp").get<int>() << "," << t.at("num").get<std::string>() << ","
                << t.at("den").get<std::string>() << "\n";
  } else {
    std::cout << poly_text(p) << "\n";
  }
  return 0;
}

int cmd_norms(const FamilyArgs& args, long n_max, const std::string& fmt) {
  require_format(fmt);
  Handle h(args);
  char* s = nullptr;
  check(fo_family_norms_json(h.fam, n_max, &s));
  const std::string out = take(s);
  if (fmt == "json") {
    std::cout << out << "\n";
    return 0;
  }
  const json rows = json::parse(out);
  if (fmt == "csv") std::cout << "n,degree,sign,log10,value\n";
  for (const auto& r : rows) {
    std::ostringstream value;
    value.precision(17);
    if (r.contains("value")) value << r.at("value").get<double>();
    if (fmt == "csv") {
      std::cout << r.at("n") << "," << r.at("degree") << "," << r.at("sign") << "," << r.at("log10") << ","
                << value.str() << "\n";
    } else {
      std::cout << "n=" << r.at("n") << " degree=" << r.at("degree") << " sign=" << r.at("sign")
                << " log10=" << r.at("log10");
      if (r.contains("value")) std::cout << " value=" << value.str();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_admissible(const FamilyArgs& args, const std::string& fmt) {
  require_format(fmt);
  Handle h(args);
  char* s = nullptr;
  check(fo_family_admissibility_json(h.fam, &s));
  const std::string out = take(s);
  const json j = json::parse(out);
  if (fmt == "json") {
    std::cout << out << "\n";
  } else if (fmt == "csv") {
    std::cout << "item,value\nbound," << j.at("bound").get<std::string>() << "\nmax_index,"
              << (j.at("max_index").is_null() ? "" : j.at("max_index").dump()) << "\n";
    for (const auto& c : j.at("conditions"))
      std::cout << "\"" << c.at("name").get<std::string>() << "\"," << (c.at("holds").get<bool>() ? "pass" : "fail")
                << "\n";
  } else {
    std::cout << "C = " << j.at("bound").get<std::string>() << "\n";
    std::cout << "max index = " << (j.at("max_index").is_null() ? "none" : j.at("max_index").dump()) << "\n";
    for (const auto& c : j.at("conditions"))
      std::cout << (c.at("holds").get<bool>() ? "pass  " : "FAIL  ") << c.at("name").get<std::string>() << "\n";
    if (j.contains("scope")) std::cout << "scope: " << j.at("scope").get<std::string>() << "\n";
  }
  if (!j.at("valid").get<bool>()) {
    std::cerr << "finortho: " << j.value("reason", std::string("parameters violate a condition")) << "\n";
    return kExitParameter;
  }
  return 0;
}

int cmd_verify(const FamilyArgs& args, const std::string& which, long n_max, double tol) {
  Handle h(args);
  char* s = nullptr;
  int pass = 0;
  check(fo_verify_json(h.fam, which.c_str(), n_max, tol, &s, &pass));
  const std::string out = take(s);
  std::cout << out << "\n";
  if (pass) return 0;
  if (which == "all") {
    const json j = json::parse(out);
    for (const auto& c : j.at("checks"))
      if (c.at("name") == "admissibility" && c.at("status") == "fail") {
        std::cerr << "finortho: admissibility failed: " << c.value("reason", std::string("")) << "\n";
        return kExitParameter;
      }
  }
  std::cerr << "finortho: verification failed\n";
  return kExitVerifyFail;
}

int cmd_approx(const FamilyArgs& args, const std::string& target, long n_max, const std::string& fmt) {
  require_format(fmt);
  Handle h(args);
  char* s = nullptr;
  check(fo_approx_json(h.fam, target.c_str(), n_max, &s));
  const std::string out = take(s);
  if (fmt == "json") {
    std::cout << out << "\n";
    return 0;
  }
  const json j = json::parse(out);
  std::ostringstream os;
  os.precision(17);
  if (fmt == "csv") os << "n,coefficient\n";
  const auto& c = j.at("coefficients");
  for (std::size_t n = 0; n < c.size(); ++n)
    os << (fmt == "csv" ? "" : "c_") << n << (fmt == "csv" ? "," : " = ") << c[n].get<double>() << "\n";
  if (fmt == "csv") {
    os << "error," << j.at("error").get<double>() << "\nrelative_error," << j.at("relative_error").get<double>()
       << "\n";
  } else {
    os << "error = " << j.at("error").get<double>() << "\nrelative error = " << j.at("relative_error").get<double>()
       << "\n";
  }
  std::cout << os.str();
  if (j.at("lower_accuracy").get<bool>()) std::cerr << "finortho: tabulated target, accuracy is reduced\n";
  return 0;
}

int exit_for(fo_status s) {
  switch (s) {
    case FO_ERR_PARAMETER:
    case FO_ERR_ADMISSIBILITY:
    case FO_ERR_POLE:
    case FO_ERR_REALNESS:
    case FO_ERR_UNSUPPORTED:
    case FO_ERR_DIVERGENCE:
      return kExitParameter;
    case FO_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return kExitNumeric;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite and incomplete orthogonal polynomial families"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string fmt = "json";
  long n = 0, n_max = 0;
  double tol = 1e-8;
  std::string target, which;

  FamilyArgs gen_args, norms_args, adm_args, ver_args, app_args;

  auto* gen = app.add_subcommand("gen", "Print one family member");
  gen_args.attach(gen, true);
  gen->add_option("--n", n, "index")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--format", fmt, "json, csv or text");

  auto* norms = app.add_subcommand("norms", "Closed-form norm squares for n = 0..nmax");
  norms_args.attach(norms, false);
  norms->add_option("--nmax", n_max, "largest index")->required()->check(CLI::NonNegativeNumber);
  norms->add_option("--format", fmt, "json, csv or text");

  auto* adm = app.add_subcommand("admissible", "Bound C, max index and conditions");
  adm_args.attach(adm, false);
  adm->add_option("--format", fmt, "json, csv or text");

  auto* ver = app.add_subcommand("verify", "Run verification checks and print a JSON report");
  ver->add_option("which", which, "gram, ode, oracle or all")
      ->required()
      ->check(CLI::IsMember({"gram", "ode", "oracle", "all"}));
  ver_args.attach(ver, false);
  ver->add_option("--nmax", n_max, "largest index")->required()->check(CLI::NonNegativeNumber);
  ver->add_option("--tol", tol, "off-diagonal and diagonal tolerance")->check(CLI::PositiveNumber);

  auto* apx = app.add_subcommand("approx", "Project a target onto the family");
  app_args.attach(apx, false);
  apx->add_option("--target", target, "monomial:J, gauss:J, member:N or table:PATH")->required();
  apx->add_option("--nmax", n_max, "largest index")->required()->check(CLI::NonNegativeNumber);
  apx->add_option("--format", fmt, "json, csv or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_args, n, fmt);
    if (*norms) return cmd_norms(norms_args, n_max, fmt);
    if (*adm) return cmd_admissible(adm_args, fmt);
    if (*ver) return cmd_verify(ver_args, which, n_max, tol);
    if (*apx) return cmd_approx(app_args, target, n_max, fmt);
  } catch (const UsageError& e) {
    std::cerr << "finortho: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "finortho: " << e.what() << "\n";
    return exit_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "finortho: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
