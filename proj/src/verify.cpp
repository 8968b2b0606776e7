#include "finortho/verify.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <limits>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace finortho {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::mpfr_float_backend<100>, mp::et_off>;

constexpr double kInf = std::numeric_limits<double>::infinity();

Real to_real(const Rational& r) { return Real(r.numerator_string()) / Real(r.denominator_string()); }

Rational to_rational(const Real& x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x.backend().data());
  return Rational(q);
}

Real gamma_ratio(const Rational& x, const Rational& y) {
  // Beta(x, y) for positive x, y.
  return mp::exp(mp::lgamma(to_real(x)) + mp::lgamma(to_real(y)) - mp::lgamma(to_real(x + y)));
}

// High-precision moment; nullopt when it vanishes by symmetry.
std::optional<Real> mp_moment(const WeightSpec& w, long j) {
  const LogScaled check = weight_moment(w, j);  // throws for divergent or unsupported moments
  if (check.is_zero()) return std::nullopt;
  if (const auto* jt = std::get_if<JacobiType>(&w)) {
    const Rational alpha = (Rational(2) * jt->a + Rational(j + 1)) / Rational(2 * jt->m);
    return gamma_ratio(alpha, -jt->b - alpha) / Real(jt->m);
  }
  if (const auto* bt = std::get_if<BesselType>(&w)) {
    const Rational g = -(Rational(2) * bt->a + Rational(j + 1)) / Rational(2 * bt->m);
    return mp::exp(mp::lgamma(to_real(g))) / Real(bt->m);
  }
  if (const auto* hm = std::get_if<HalfLineM>(&w)) return gamma_ratio(hm->q + Rational(j + 1), hm->p - Rational(j + 1));
  if (const auto* hn = std::get_if<HalfLineN>(&w)) return mp::exp(mp::lgamma(to_real(-hn->p - Rational(j + 1))));
  const Rational c = std::holds_alternative<LineI>(w) ? std::get<LineI>(w).p - Rational(1, 2) : std::get<LineJ>(w).p;
  const Rational x = Rational(j + 1, 2);
  return gamma_ratio(x, c - x);
}

// Inner products of polynomials given as coefficient vectors over a lattice.
class MomentSpace {
 public:
  MomentSpace(const WeightSpec& w, std::vector<int> lattice) : w_(w), lattice_(std::move(lattice)) {}

  Real inner(const std::vector<Real>& u, const std::vector<Real>& v) {
    Real sum = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        const auto& mu = moment(lattice_[i] + lattice_[k]);
        if (mu) sum += u[i] * v[k] * *mu;
      }
    }
    return sum;
  }

  std::size_t size() const { return lattice_.size(); }
  int exponent(std::size_t i) const { return lattice_[i]; }

 private:
  const std::optional<Real>& moment(long j) {
    auto it = cache_.find(j);
    if (it == cache_.end()) it = cache_.emplace(j, mp_moment(w_, j)).first;
    return it->second;
  }

  WeightSpec w_;
  std::vector<int> lattice_;
  std::map<long, std::optional<Real>> cache_;
};

// Modified Gram-Schmidt over the first `count` lattice monomials.
std::vector<std::vector<Real>> orthogonalize(MomentSpace& space, std::size_t count, std::vector<Real>& norms) {
  std::vector<std::vector<Real>> q;
  norms.clear();
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Real> v(space.size(), Real(0));
    v[i] = 1;
    for (std::size_t j = 0; j < q.size(); ++j) {
      const Real c = space.inner(v, q[j]) / norms[j];
      for (std::size_t l = 0; l < v.size(); ++l) v[l] -= c * q[j][l];
    }
    norms.push_back(space.inner(v, v));
    if (!(norms.back() > 0)) throw ConvergenceError("Gram-Schmidt produced a non-positive norm");
    q.push_back(std::move(v));
  }
  return q;
}

nlohmann::json logscaled_json(const LogScaled& v) {
  nlohmann::json j = {{"sign", v.sign}, {"log10", v.sign == 0 ? 0.0 : v.log10_abs()}};
  const double d = v.to_double();
  if (v.sign != 0 && std::isfinite(d) && d != 0.0) j["value"] = d;
  if (v.sign == 0) j["value"] = 0.0;
  return j;
}

double finite_or_max(double x) {
  if (std::isnan(x)) return kInf;
  return x;
}

nlohmann::json check(const std::string& name, const std::string& status, nlohmann::json details = nullptr,
                     const std::string& reason = "") {
  nlohmann::json j = {{"name", name}, {"status", status}};
  if (!reason.empty()) j["reason"] = reason;
  if (!details.is_null()) j["details"] = std::move(details);
  return j;
}

}  // namespace

// ---------------------------------------------------------------- Gram

nlohmann::json GramReport::to_json() const {
  nlohmann::json fn = nlohmann::json::array(), qd = nlohmann::json::array();
  for (const auto& v : formula_norms) fn.push_back(logscaled_json(v));
  for (const auto& v : quad_diagonal) qd.push_back(logscaled_json(v));
  return {{"family", family},
          {"parameters", parameters},
          {"n_min", 0},
          {"n_max", n_max},
          {"gram", gram},
          {"normalized", normalized},
          {"formula_norms", fn},
          {"quad_diagonal", qd},
          {"max_offdiag_normalized", max_offdiag_normalized},
          {"max_diag_relerr", max_diag_relerr},
          {"ode_residual_ok", ode_residual_ok},
          {"verdict", pass ? "pass" : "fail"},
          {"tolerances", {{"offdiag", tol.offdiag}, {"diag", tol.diag}, {"quad", tol.quad.tol}}}};
}

GramReport gram_matrix(const Family& fam, long n_max, const Tolerances& tol) {
  if (n_max < 0) throw ParameterError("n_max must be nonnegative");
  const long top = fam.max_index();
  if (n_max > top)
    throw AdmissibilityError("n_max = " + std::to_string(n_max) + " exceeds the max index " + std::to_string(top));

  GramReport rep;
  rep.family = fam.name();
  rep.parameters = fam.parameters();
  rep.n_max = n_max;
  rep.tol = tol;

  const std::size_t count = static_cast<std::size_t>(n_max + 1);
  std::vector<NumericPoly> polys;
  for (long n = 0; n <= n_max; ++n) polys.emplace_back(fam.poly(n));

  const WeightSpec w = fam.weight();
  const bool half_line = fam.support() == Support::half_line;
  const bool split = fam.even_weight() && fam.parity_by_index();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t n = 0; n < count; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      if (!split || (n + k) % 2 == 0) pairs.emplace_back(n, k);

  std::vector<LogScaled> at_x(count), at_minus_x(count);
  const LogScaled two = LogScaled::from_double(2.0);
  auto eval = [&](double x, std::vector<LogScaled>& out) {
    const LogScaled wx{1, log_weight(w, x)};
    for (std::size_t n = 0; n < count; ++n) at_x[n] = polys[n].eval_log(x);
    if (half_line || split) {
      const LogScaled base = half_line ? wx : wx * two;
      for (std::size_t i = 0; i < pairs.size(); ++i) out[i] = base * at_x[pairs[i].first] * at_x[pairs[i].second];
      return;
    }
    const LogScaled wm{1, log_weight(w, -x)};
    for (std::size_t n = 0; n < count; ++n) at_minus_x[n] = polys[n].eval_log(-x);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [n, k] = pairs[i];
      out[i] = log_add(wx * at_x[n] * at_x[k], wm * at_minus_x[n] * at_minus_x[k]);
    }
  };
  const auto results = integrate_halfline_batch(pairs.size(), eval, tol.quad);

  std::vector<std::vector<LogScaled>> g(count, std::vector<LogScaled>(count, LogScaled::zero()));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [n, k] = pairs[i];
    g[n][k] = g[k][n] = results[i].scaled_value();
  }

  rep.gram.assign(count, std::vector<double>(count, 0.0));
  rep.normalized.assign(count, std::vector<double>(count, 0.0));
  for (std::size_t n = 0; n < count; ++n) {
    rep.quad_diagonal.push_back(g[n][n]);
    rep.formula_norms.push_back(fam.norm_square(static_cast<long>(n)));
    rep.max_diag_relerr =
        std::max(rep.max_diag_relerr, finite_or_max(relative_difference(g[n][n], rep.formula_norms.back())));
  }
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t k = 0; k < count; ++k) {
      rep.gram[n][k] = g[n][k].to_double();
      double norm = 0.0;
      if (g[n][n].sign <= 0 || g[k][k].sign <= 0) {
        norm = kInf;
      } else if (n == k) {
        norm = 1.0;
      } else if (!g[n][k].is_zero()) {
        norm = std::exp(g[n][k].log_abs - 0.5 * (g[n][n].log_abs + g[k][k].log_abs));
      }
      rep.normalized[n][k] = norm;
      if (n != k) rep.max_offdiag_normalized = std::max(rep.max_offdiag_normalized, norm);
    }
  }
  rep.ode_residual_ok = ode_residuals_ok(fam, n_max, tol.ode_float);
  rep.pass = rep.max_offdiag_normalized < tol.offdiag && rep.max_diag_relerr < tol.diag && rep.ode_residual_ok;
  return rep;
}

// ---------------------------------------------------------------- ODE

nlohmann::json ode_check(const Family& fam, long n_max, double float_tol) {
  if (n_max < 0) throw ParameterError("n_max must be nonnegative");
  const SLCoeffs eq = fam.equation();
  nlohmann::json members = nlohmann::json::array();
  bool all_ok = true;
  for (long n = 0; n <= n_max; ++n) {
    const SparseSymPoly y = fam.poly(n);
    nlohmann::json row = {{"n", n}};
    bool ok;
    if (fam.exact_coefficients()) {
      const SparseSymPoly r = residual(eq, y, n);
      ok = r.is_zero();
      row["exact"] = true;
      row["residual_terms"] = r.term_count();
    } else {
      const double rel = relative_residual(eq, y, n);
      ok = rel <= float_tol;
      row["exact"] = false;
      row["relative_residual"] = rel;
    }
    row["ok"] = ok;
    all_ok = all_ok && ok;
    members.push_back(std::move(row));
  }
  return {{"members", members}, {"pass", all_ok}};
}

bool ode_residuals_ok(const Family& fam, long n_max, double float_tol) {
  return ode_check(fam, n_max, float_tol).at("pass").get<bool>();
}

// ---------------------------------------------------------------- oracle

std::vector<SparseSymPoly> gs_oracle(const WeightSpec& w, const std::vector<int>& lattice, std::size_t count) {
  if (count > lattice.size()) throw ParameterError("oracle count exceeds the lattice size");
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice[i] < 0 || (i > 0 && lattice[i] <= lattice[i - 1]))
      throw ParameterError("oracle lattice must be strictly increasing nonnegative exponents");
  MomentSpace space(w, std::vector<int>(lattice.begin(), lattice.begin() + static_cast<long>(count)));
  std::vector<Real> norms;
  const auto q = orthogonalize(space, count, norms);
  std::vector<SparseSymPoly> out;
  for (const auto& v : q) {
    SparseSymPoly::Terms terms;
    for (std::size_t l = 0; l < v.size(); ++l)
      if (v[l] != 0) terms.emplace(space.exponent(l), to_rational(v[l]));
    out.emplace_back(std::move(terms));
  }
  return out;
}

LogScaled monomial_distance(const WeightSpec& w, int exponent, const std::vector<int>& span) {
  std::vector<int> lattice = span;
  lattice.push_back(exponent);
  MomentSpace space(w, lattice);
  std::vector<Real> norms;
  const auto q = orthogonalize(space, span.size(), norms);
  std::vector<Real> f(lattice.size(), Real(0));
  f.back() = 1;
  Real dist2 = space.inner(f, f);
  for (std::size_t j = 0; j < q.size(); ++j) {
    const Real c = space.inner(f, q[j]);
    dist2 -= c * c / norms[j];
  }
  if (dist2 < 0) dist2 = 0;
  if (dist2 == 0) return LogScaled::zero();
  return {1, static_cast<double>(mp::log(dist2)) / 2.0};
}

nlohmann::json oracle_check(const Family& fam, long n_max, double tol, std::size_t per_chain) {
  const WeightSpec w = fam.weight();
  nlohmann::json chains = nlohmann::json::array();
  double worst = 0.0;
  for (auto idx : fam.chains(n_max)) {
    if (per_chain > 0 && idx.size() > per_chain) idx.resize(per_chain);
    std::vector<int> lattice;
    for (long n : idx) lattice.push_back(static_cast<int>(fam.expected_degree(n)));
    const auto oracle = gs_oracle(w, lattice, lattice.size());
    double chain_worst = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const SparseSymPoly mine = fam.poly(idx[i]).monic();
      double max_abs = 0.0;
      for (const auto& [e, c] : oracle[i].terms()) max_abs = std::max(max_abs, std::fabs(c.to_double()));
      std::set<int> exps;
      for (const auto& [e, c] : mine.terms()) exps.insert(e);
      for (const auto& [e, c] : oracle[i].terms()) exps.insert(e);
      for (int e : exps) {
        const double ref = oracle[i].coefficient(e).to_double();
        const double diff = std::fabs((mine.coefficient(e) - oracle[i].coefficient(e)).to_double());
        const double rel = diff / std::max(std::fabs(ref), 1e-30 * max_abs);
        chain_worst = std::max(chain_worst, rel);
      }
    }
    worst = std::max(worst, chain_worst);
    chains.push_back({{"indices", idx}, {"lattice", lattice}, {"max_relerr", chain_worst}});
  }
  return {{"chains", chains}, {"max_relerr", worst}, {"tolerance", tol}, {"pass", worst < tol}};
}

// ---------------------------------------------------------------- report

nlohmann::json full_report(const Family& fam, long n_max, const Tolerances& tol) {
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json out = {{"family", fam.name()}, {"parameters", fam.parameters()}, {"n_max", n_max}};
  if (!fam.scope().empty()) out["scope"] = fam.scope();

  auto skip_rest = [&](const std::string& reason) {
    for (const char* name : {"degree_law", "parity", "ode", "gram", "norms", "oracle"})
      checks.push_back(check(name, "skipped", nullptr, reason));
  };

  // Admissibility gates everything else.
  bool admissible = false;
  try {
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : fam.conditions()) conds.push_back({{"name", c.name}, {"holds", c.holds}});
    const Rational c_bound = fam.bound();
    const long top = fam.max_index();
    bool decay = true;
    for (long n = 0; n <= std::min(n_max, top); ++n)
      for (long k = 0; k <= n; ++k) decay = decay && fam.decay_ok(n, k);
    nlohmann::json details = {{"bound", c_bound.to_string()}, {"max_index", top}, {"conditions", conds},
                              {"boundary_decay", decay}};
    if (n_max < 0 || n_max > top) {
      checks.push_back(check("admissibility", "fail", details,
                             "n_max = " + std::to_string(n_max) + " outside 0.." + std::to_string(top)));
    } else if (!decay) {
      checks.push_back(check("admissibility", "fail", details, "boundary decay fails for some index pair"));
    } else {
      checks.push_back(check("admissibility", "pass", details));
      admissible = true;
    }
  } catch (const Error& e) {
    checks.push_back(check("admissibility", "fail", nullptr, e.what()));
  }
  if (!admissible) {
    skip_rest("admissibility failed");
  } else {
    auto guarded = [&](const std::string& name, const std::function<nlohmann::json()>& body) {
      try {
        checks.push_back(body());
      } catch (const Error& e) {
        checks.push_back(check(name, "fail", nullptr, e.what()));
      }
    };
    guarded("degree_law", [&] {
      nlohmann::json bad = nlohmann::json::array();
      for (long n = 0; n <= n_max; ++n) {
        const SparseSymPoly p = fam.poly(n);
        if (p.degree() != fam.expected_degree(n)) bad.push_back({{"n", n}, {"degree", p.degree()}});
      }
      return check("degree_law", bad.empty() ? "pass" : "fail", {{"mismatches", bad}});
    });
    guarded("parity", [&] {
      if (!fam.parity_by_index()) return check("parity", "skipped", nullptr, "members have no definite parity");
      nlohmann::json bad = nlohmann::json::array();
      for (long n = 0; n <= n_max; ++n) {
        const SparseSymPoly p = fam.poly(n);
        for (const auto& [e, c] : p.terms())
          if (e % 2 != n % 2) bad.push_back({{"n", n}, {"exponent", e}});
      }
      return check("parity", bad.empty() ? "pass" : "fail", {{"violations", bad}});
    });
    guarded("ode", [&] {
      auto res = ode_check(fam, n_max, tol.ode_float);
      const bool ok = res.at("pass").get<bool>();
      return check("ode", ok ? "pass" : "fail", std::move(res));
    });
    try {
      const GramReport g = gram_matrix(fam, n_max, tol);
      checks.push_back(check("gram", g.max_offdiag_normalized < tol.offdiag ? "pass" : "fail",
                             {{"max_offdiag_normalized", g.max_offdiag_normalized}, {"tolerance", tol.offdiag}}));
      checks.push_back(check("norms", g.max_diag_relerr < tol.diag ? "pass" : "fail",
                             {{"max_diag_relerr", g.max_diag_relerr}, {"tolerance", tol.diag}}));
    } catch (const Error& e) {
      checks.push_back(check("gram", "fail", nullptr, e.what()));
      checks.push_back(check("norms", "skipped", nullptr, "gram matrix unavailable"));
    }
    try {
      auto res = oracle_check(fam, n_max, tol.oracle);
      const bool ok = res.at("pass").get<bool>();
      checks.push_back(check("oracle", ok ? "pass" : "fail", std::move(res)));
    } catch (const UnsupportedShapeError& e) {
      checks.push_back(check("oracle", "skipped", nullptr, e.what()));
    } catch (const Error& e) {
      checks.push_back(check("oracle", "fail", nullptr, e.what()));
    }
  }

  bool pass = true;
  for (const auto& c : checks) pass = pass && c.at("status") != "fail";
  out["checks"] = checks;
  out["verdict"] = pass ? "pass" : "fail";
  return out;
}

}  // namespace finortho
