#include "finortho/approx.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace finortho {

namespace {

long nonneg_int(const std::string& text, const std::string& spec) {
  const Rational v = Rational::parse(text);
  const auto n = v.to_long();
  if (!n || *n < 0 || *n > 100000) throw ParameterError("target '" + spec + "' needs a nonnegative integer");
  return *n;
}

LogScaled power(double x, long j) {
  if (j == 0) return LogScaled::one();
  if (x == 0.0) return LogScaled::zero();
  return {(x < 0 && j % 2 != 0) ? -1 : 1, static_cast<double>(j) * std::log(std::fabs(x))};
}

TargetFn table_target(const std::string& path, const std::string& spec) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open table '" + path + "' for target '" + spec + "'");
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double x, y;
    if (!(ls >> x >> y)) {
      if (rows.empty()) continue;  // header row
      throw ParameterError("malformed row '" + line + "' in table '" + path + "'");
    }
    rows.emplace_back(x, y);
  }
  if (rows.size() < 2) throw ParameterError("table '" + path + "' needs at least two rows");
  std::sort(rows.begin(), rows.end());
  return [rows = std::move(rows)](double x) {
    if (x < rows.front().first || x > rows.back().first) return LogScaled::zero();
    auto hi = std::lower_bound(rows.begin(), rows.end(), std::make_pair(x, -std::numeric_limits<double>::infinity()));
    if (hi == rows.begin()) return LogScaled::from_double(hi->second);
    auto lo = hi - 1;
    const double t = (x - lo->first) / (hi->first - lo->first);
    return LogScaled::from_double(lo->second + t * (hi->second - lo->second));
  };
}

}  // namespace

Target parse_target(const std::string& spec, const Family& fam) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParameterError("target must look like kind:value (got '" + spec + "')");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "monomial") {
    const long j = nonneg_int(arg, spec);
    return {spec, [j](double x) { return power(x, j); }, false};
  }
  if (kind == "gauss") {
    const long j = nonneg_int(arg, spec);
    return {spec,
            [j](double x) {
              LogScaled v = power(x, j);
              if (v.sign != 0) v.log_abs -= x * x;
              return v;
            },
            false};
  }
  if (kind == "member") {
    const long n = nonneg_int(arg, spec);
    NumericPoly p(fam.poly(n));
    return {spec, [p](double x) { return p.eval_log(x); }, false};
  }
  if (kind == "table") return {spec, table_target(arg, spec), true};
  throw ParameterError("unknown target kind '" + kind + "' (monomial, gauss, member, table)");
}

QuadOptions quad_options_for(const Target& t) {
  QuadOptions opt;
  if (t.lower_accuracy) opt.tol = 1e-6;
  return opt;
}

nlohmann::json Projection::to_json() const {
  return {{"coefficients", coefficients},
          {"f_norm_square", {{"sign", f_norm_square.sign}, {"log10", f_norm_square.log10_abs()}}},
          {"error", error},
          {"relative_error", relative_error},
          {"clamped", clamped},
          {"lower_accuracy", lower_accuracy}};
}

Projection project(const TargetFn& f, const Family& fam, long n_max, const QuadOptions& opt) {
  if (n_max < 0) throw ParameterError("n_max must be nonnegative");
  const long top = fam.max_index();
  if (n_max > top)
    throw AdmissibilityError("n_max = " + std::to_string(n_max) + " exceeds the max index " + std::to_string(top));

  const WeightSpec w = fam.weight();
  const bool half_line = fam.support() == Support::half_line;
  const std::size_t count = static_cast<std::size_t>(n_max + 1);
  std::vector<NumericPoly> polys;
  for (long n = 0; n <= n_max; ++n) polys.emplace_back(fam.poly(n));

  // Slots [0, count) hold <f, P_n>, [count, 2 count) hold <P_n, P_n>, the last one ||f||^2.
  auto eval = [&](double x, std::vector<LogScaled>& out) {
    const LogScaled wx{1, log_weight(w, x)};
    const LogScaled fx = f(x);
    if (half_line) {
      for (std::size_t n = 0; n < count; ++n) {
        const LogScaled p = polys[n].eval_log(x);
        out[n] = wx * fx * p;
        out[count + n] = wx * p * p;
      }
      out[2 * count] = wx * fx * fx;
      return;
    }
    const LogScaled wm{1, log_weight(w, -x)};
    const LogScaled fm = f(-x);
    for (std::size_t n = 0; n < count; ++n) {
      const LogScaled p = polys[n].eval_log(x);
      const LogScaled pm = polys[n].eval_log(-x);
      out[n] = log_add(wx * fx * p, wm * fm * pm);
      out[count + n] = log_add(wx * p * p, wm * pm * pm);
    }
    out[2 * count] = log_add(wx * fx * fx, wm * fm * fm);
  };

  // Odd-against-even products fold to near zero; judge them by the
  // Cauchy-Schwarz bound ||f|| ||P_n|| instead of their own tiny l1.
  QuadOptions local = opt;
  local.reference = [count](std::size_t i, const std::vector<QuadResult>& r) {
    if (i >= count) return LogScaled::zero();
    const LogScaled f2 = r[2 * count].scaled_value(), p2 = r[count + i].scaled_value();
    if (f2.sign <= 0 || p2.sign <= 0) return LogScaled::zero();
    return LogScaled{1, 0.5 * (f2.log_abs + p2.log_abs)};
  };

  std::vector<QuadResult> res;
  try {
    res = integrate_halfline_batch(2 * count + 1, eval, local);
  } catch (const ConvergenceError& e) {
    throw DivergenceError(std::string("weighted norm of the target is not finite or not computable: ") + e.what());
  }

  Projection out;
  out.f_norm_square = res[2 * count].scaled_value();
  if (out.f_norm_square.sign <= 0 || !std::isfinite(out.f_norm_square.log_abs))
    throw DivergenceError("the target has no finite positive weighted norm");

  // The Parseval sum uses the quadrature norms from the same nodes: with them
  // the discrete Bessel inequality holds, so members of the span give ~0.
  double captured = 0.0;  // sum <f,P_n>^2 / <P_n,P_n> / ||f||^2
  for (std::size_t n = 0; n < count; ++n) {
    const LogScaled inner = res[n].scaled_value();
    const LogScaled c = inner / fam.norm_square(static_cast<long>(n));
    out.coefficients.push_back(c.to_double());
    const LogScaled quad_norm = res[count + n].scaled_value();
    if (!inner.is_zero() && quad_norm.sign > 0)
      captured += std::exp(2.0 * inner.log_abs - quad_norm.log_abs - out.f_norm_square.log_abs);
  }
  double rest = 1.0 - captured;
  if (rest < 0.0) {
    out.clamped = true;
    rest = 0.0;
  }
  out.relative_error = std::sqrt(rest);
  out.error = rest == 0.0 ? 0.0 : std::exp(0.5 * (std::log(rest) + out.f_norm_square.log_abs));
  return out;
}

}  // namespace finortho
