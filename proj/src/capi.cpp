#include "finortho/finortho.h"

#include <cstring>
#include <memory>
#include <string>

#include "finortho/approx.hpp"
#include "finortho/family.hpp"
#include "finortho/verify.hpp"

struct fo_family {
  std::unique_ptr<finortho::Family> impl;
};

namespace {

thread_local std::string g_last_error;

fo_status fail(fo_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fo_status emit(const std::string& text, char** out) {
  *out = dup_string(text);
  if (!*out) return fail(FO_ERR_INTERNAL, "out of memory");
  g_last_error.clear();
  return FO_OK;
}

fo_status emit(const nlohmann::json& j, char** out) { return emit(j.dump(), out); }

// Runs body and maps library exceptions onto status codes.
template <class Body>
fo_status guarded(Body&& body) {
  using namespace finortho;
  try {
    return body();
  } catch (const AdmissibilityError& e) {
    return fail(FO_ERR_ADMISSIBILITY, e.what());
  } catch (const ParameterError& e) {
    return fail(FO_ERR_PARAMETER, e.what());
  } catch (const PoleError& e) {
    return fail(FO_ERR_POLE, e.what());
  } catch (const DivergenceError& e) {
    return fail(FO_ERR_DIVERGENCE, e.what());
  } catch (const ConvergenceError& e) {
    return fail(FO_ERR_CONVERGENCE, e.what());
  } catch (const RealnessError& e) {
    return fail(FO_ERR_REALNESS, e.what());
  } catch (const UnsupportedShapeError& e) {
    return fail(FO_ERR_UNSUPPORTED, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(FO_ERR_INVALID_ARGUMENT, std::string("JSON error: ") + e.what());
  } catch (const std::exception& e) {
    return fail(FO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FO_ERR_INTERNAL, "unknown error");
  }
}

nlohmann::json logscaled_entry(const finortho::LogScaled& v) {
  nlohmann::json j = {{"sign", v.sign}, {"log10", v.is_zero() ? 0.0 : v.log10_abs()}};
  const double d = v.to_double();
  if (v.is_zero() || (std::isfinite(d) && d != 0.0)) j["value"] = d;
  return j;
}

}  // namespace

extern "C" {

fo_status fo_family_create(const char* kind, const char* params_json, fo_family** out) {
  if (!kind || !params_json || !out) return fail(FO_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto params = nlohmann::json::parse(params_json);
    auto fam = std::make_unique<fo_family>();
    fam->impl = finortho::make_family(kind, params);
    *out = fam.release();
    g_last_error.clear();
    return FO_OK;
  });
}

void fo_family_destroy(fo_family* fam) { delete fam; }

fo_status fo_family_max_index(const fo_family* fam, long* out) {
  if (!fam || !out) return fail(FO_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = fam->impl->max_index();
    return FO_OK;
  });
}

fo_status fo_family_poly_json(const fo_family* fam, long n, char** out) {
  if (!fam || !out) return fail(FO_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(finortho::to_json_string(fam->impl->poly(n)), out); });
}

fo_status fo_bessel_poly_json(long n, const char* alpha, char** out) {
  if (!alpha || !out) return fail(FO_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return emit(finortho::to_json_string(finortho::bessel_monic(n, finortho::Rational::parse(alpha))), out);
  });
}

fo_status fo_family_norms_json(const fo_family* fam, long n_max, char** out) {
  if (!fam || !out) return fail(FO_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    if (n_max < 0) throw finortho::ParameterError("n_max must be nonnegative");
    nlohmann::json rows = nlohmann::json::array();
    for (long n = 0; n <= n_max; ++n) {
      nlohmann::json row = logscaled_entry(fam->impl->norm_square(n));
      row["n"] = n;
      row["degree"] = fam->impl->expected_degree(n);
      rows.push_back(std::move(row));
    }
    return emit(rows, out);
  });
}

fo_status fo_family_admissibility_json(const fo_family* fam, char** out) {
  if (!fam || !out) return fail(FO_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& f = *fam->impl;
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : f.conditions()) conds.push_back({{"name", c.name}, {"holds", c.holds}});
    const finortho::Rational bound = f.bound();
    nlohmann::json j = {{"family", f.name()},
                        {"parameters", f.parameters()},
                        {"bound", bound.to_string()},
                        {"bound_decimal", bound.to_double()},
                        {"conditions", conds}};
    try {
      j["max_index"] = f.max_index();
      j["valid"] = true;
    } catch (const finortho::ParameterError& e) {
      j["max_index"] = nullptr;
      j["valid"] = false;
      j["reason"] = e.what();
    }
    if (!f.scope().empty()) j["scope"] = f.scope();
    return emit(j, out);
  });
}

fo_status fo_verify_json(const fo_family* fam, const char* which, long n_max, double tol, char** out,
                         int* verdict_pass) {
  if (!fam || !which || !out || !verdict_pass) return fail(FO_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    finortho::Tolerances t;
    if (tol > 0) t.offdiag = t.diag = tol;
    const std::string w = which;
    const auto& f = *fam->impl;
    nlohmann::json j;
    bool pass = false;
    if (w == "gram") {
      const auto rep = finortho::gram_matrix(f, n_max, t);
      j = rep.to_json();
      pass = rep.pass;
    } else if (w == "ode") {
      if (n_max > f.max_index())
        throw finortho::AdmissibilityError("n_max exceeds the max index " + std::to_string(f.max_index()));
      j = finortho::ode_check(f, n_max, t.ode_float);
      pass = j.at("pass").get<bool>();
      j["family"] = f.name();
      j["parameters"] = f.parameters();
      j["n_max"] = n_max;
      j["verdict"] = pass ? "pass" : "fail";
    } else if (w == "oracle") {
      if (n_max > f.max_index())
        throw finortho::AdmissibilityError("n_max exceeds the max index " + std::to_string(f.max_index()));
      j = finortho::oracle_check(f, n_max, t.oracle);
      pass = j.at("pass").get<bool>();
      j["family"] = f.name();
      j["parameters"] = f.parameters();
      j["n_max"] = n_max;
      j["verdict"] = pass ? "pass" : "fail";
    } else if (w == "all") {
      j = finortho::full_report(f, n_max, t);
      pass = j.at("verdict") == "pass";
    } else {
      throw finortho::ParameterError("unknown verification '" + w + "' (gram, ode, oracle, all)");
    }
    *verdict_pass = pass ? 1 : 0;
    return emit(j, out);
  });
}

fo_status fo_approx_json(const fo_family* fam, const char* target, long n_max, char** out) {
  if (!fam || !target || !out) return fail(FO_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& f = *fam->impl;
    const finortho::Target t = finortho::parse_target(target, f);
    finortho::Projection p = finortho::project(t.f, f, n_max, finortho::quad_options_for(t));
    p.lower_accuracy = t.lower_accuracy;
    nlohmann::json j = p.to_json();
    j["family"] = f.name();
    j["parameters"] = f.parameters();
    j["target"] = t.spec;
    j["n_max"] = n_max;
    return emit(j, out);
  });
}

void fo_string_free(char* s) { std::free(s); }

const char* fo_last_error(void) { return g_last_error.c_str(); }

const char* fo_status_name(fo_status status) {
  switch (status) {
    case FO_OK: return "ok";
    case FO_ERR_PARAMETER: return "parameter error";
    case FO_ERR_ADMISSIBILITY: return "admissibility error";
    case FO_ERR_POLE: return "pole error";
    case FO_ERR_DIVERGENCE: return "divergence error";
    case FO_ERR_CONVERGENCE: return "convergence error";
    case FO_ERR_REALNESS: return "realness error";
    case FO_ERR_UNSUPPORTED: return "unsupported shape";
    case FO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

}  // extern "C"
