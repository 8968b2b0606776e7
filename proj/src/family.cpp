#include "finortho/family.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace finortho {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

int int_from_json(const nlohmann::json& params, const std::string& key, int fallback) {
  if (!params.contains(key)) return fallback;
  const Rational v = rational_from_json(params.at(key), key);
  const auto as_long = v.to_long();
  if (!as_long || *as_long < -1000000 || *as_long > 1000000)
    throw ParameterError("parameter '" + key + "' must be an integer (got " + v.to_string() + ")");
  return static_cast<int>(*as_long);
}

Rational required(const nlohmann::json& params, const std::string& key) {
  if (!params.contains(key)) throw ParameterError("missing parameter '" + key + "'");
  return rational_from_json(params.at(key), key);
}

ParamMode mode_from_json(const nlohmann::json& params) {
  if (!params.contains("mode")) return ParamMode::strict;
  const auto& v = params.at("mode");
  if (!v.is_string()) throw ParameterError("parameter 'mode' must be \"strict\" or \"lenient\"");
  const std::string s = v.get<std::string>();
  if (s == "strict") return ParamMode::strict;
  if (s == "lenient") return ParamMode::lenient;
  throw ParameterError("parameter 'mode' must be \"strict\" or \"lenient\" (got \"" + s + "\")");
}

void reject_unknown(const nlohmann::json& params, std::set<std::string> allowed) {
  if (!params.is_object()) throw ParameterError("family parameters must be a JSON object");
  for (const auto& [key, value] : params.items())
    if (!allowed.count(key)) throw ParameterError("unknown parameter '" + key + "'");
}

class MFamily final : public Family {
 public:
  explicit MFamily(ParamsM p) : prm_(std::move(p)) {}
  FamilyKind kind() const override { return FamilyKind::M; }
  nlohmann::json parameters() const override { return {{"p", prm_.p.to_string()}, {"q", prm_.q.to_string()}}; }
  SparseSymPoly poly(long n) const override { return m_poly(n, prm_); }
  long expected_degree(long n) const override { return n; }
  long max_index() const override { return prm_.max_index(); }
  Rational bound() const override { return (prm_.p - Rational(1)) / Rational(2); }
  std::vector<Condition> conditions() const override { return {{"q > -1", prm_.q > Rational(-1)}}; }
  LogScaled norm_square(long n) const override { return m_norm(n, prm_); }
  WeightSpec weight() const override { return m_weight(prm_); }
  SLCoeffs equation() const override { return m_equation(prm_); }

 private:
  ParamsM prm_;
};

class NFamily final : public Family {
 public:
  explicit NFamily(ParamsN p) : prm_(std::move(p)) {}
  FamilyKind kind() const override { return FamilyKind::N; }
  nlohmann::json parameters() const override { return {{"p", prm_.p.to_string()}}; }
  SparseSymPoly poly(long n) const override { return n_poly(n, prm_); }
  long expected_degree(long n) const override { return n; }
  long max_index() const override { return prm_.max_index(); }
  Rational bound() const override { return (-prm_.p - Rational(1)) / Rational(2); }
  LogScaled norm_square(long n) const override { return n_norm(n, prm_); }
  WeightSpec weight() const override { return n_weight(prm_); }
  SLCoeffs equation() const override { return n_equation(prm_); }

 private:
  ParamsN prm_;
};

class IFamily final : public Family {
 public:
  explicit IFamily(ParamsI p) : prm_(std::move(p)) {}
  FamilyKind kind() const override { return FamilyKind::I; }
  nlohmann::json parameters() const override { return {{"p", prm_.p.to_string()}}; }
  SparseSymPoly poly(long n) const override { return i_poly(n, prm_); }
  long expected_degree(long n) const override { return n; }
  long max_index() const override { return prm_.max_index(); }
  Rational bound() const override { return prm_.p - Rational(1); }
  LogScaled norm_square(long n) const override { return i_norm(n, prm_); }
  WeightSpec weight() const override { return i_weight(prm_); }
  SLCoeffs equation() const override { return i_equation(prm_); }
  bool parity_by_index() const override { return true; }

 private:
  ParamsI prm_;
};

class JFamily final : public Family {
 public:
  explicit JFamily(ParamsJ p) : prm_(std::move(p)) {}
  FamilyKind kind() const override { return FamilyKind::J; }
  nlohmann::json parameters() const override { return {{"p", prm_.p.to_string()}, {"q", prm_.q.to_string()}}; }
  SparseSymPoly poly(long n) const override { return j_poly(n, prm_); }
  long expected_degree(long n) const override { return n; }
  long max_index() const override { return prm_.max_index(); }
  Rational bound() const override { return prm_.p - Rational(1, 2); }
  LogScaled norm_square(long n) const override { return LogScaled::from_double(j_norm(n, prm_)); }
  WeightSpec weight() const override { return j_weight(prm_); }
  SLCoeffs equation() const override { return j_equation(prm_); }
  bool exact_coefficients() const override { return false; }
  bool parity_by_index() const override { return prm_.q.is_zero(); }

 private:
  ParamsJ prm_;
};

std::string condition_scope(ParamMode mode, const std::vector<Condition>& conds) {
  if (mode != ParamMode::lenient) return "";
  for (const auto& c : conds)
    if (c.name == "2a even integer" && !c.holds) return "outside-strict-conditions";
  return "";
}

class PhiFamily final : public Family {
 public:
  explicit PhiFamily(PhiParams p) : prm_(std::move(p)) { (void)prm_.conditions(); }  // rejects m < 1, r < 0, s < 0
  FamilyKind kind() const override { return FamilyKind::Phi; }
  nlohmann::json parameters() const override {
    return {{"a", prm_.a.to_string()}, {"b", prm_.b.to_string()}, {"m", prm_.m}, {"r", prm_.r}, {"s", prm_.s},
            {"mode", prm_.mode == ParamMode::strict ? "strict" : "lenient"}};
  }
  SparseSymPoly poly(long n) const override { return phi_poly(n, prm_); }
  long expected_degree(long n) const override { return phi_degree(n, prm_); }
  long max_index() const override { return phi_max_index(prm_); }
  Rational bound() const override { return phi_bound(prm_); }
  std::vector<Condition> conditions() const override { return prm_.conditions(); }
  LogScaled norm_square(long n) const override { return phi_norm(n, prm_); }
  WeightSpec weight() const override { return phi_weight(prm_); }
  SLCoeffs equation() const override { return phi_sl_equation(prm_); }
  bool parity_by_index() const override { return true; }
  bool decay_ok(long n, long k) const override { return boundary_decay_ok(prm_, n, k); }
  std::string scope() const override { return condition_scope(prm_.mode, prm_.conditions()); }

 private:
  PhiParams prm_;
};

class PsiFamily final : public Family {
 public:
  explicit PsiFamily(PsiParams p) : prm_(std::move(p)) { (void)prm_.conditions(); }
  FamilyKind kind() const override { return FamilyKind::Psi; }
  nlohmann::json parameters() const override {
    return {{"a", prm_.a.to_string()}, {"m", prm_.m}, {"r", prm_.r}, {"s", prm_.s},
            {"mode", prm_.mode == ParamMode::strict ? "strict" : "lenient"}};
  }
  SparseSymPoly poly(long n) const override { return psi_poly(n, prm_); }
  long expected_degree(long n) const override { return psi_degree(n, prm_); }
  long max_index() const override { return psi_max_index(prm_); }
  Rational bound() const override { return psi_bound(prm_); }
  std::vector<Condition> conditions() const override { return prm_.conditions(); }
  LogScaled norm_square(long n) const override { return psi_norm(n, prm_); }
  WeightSpec weight() const override { return psi_weight(prm_); }
  SLCoeffs equation() const override { return psi_sl_equation(prm_); }
  bool parity_by_index() const override { return true; }
  bool decay_ok(long n, long k) const override { return boundary_decay_ok(prm_, n, k); }
  std::string scope() const override { return condition_scope(prm_.mode, prm_.conditions()); }

 private:
  PsiParams prm_;
};

}  // namespace

std::string kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::M: return "M";
    case FamilyKind::N: return "N";
    case FamilyKind::I: return "I";
    case FamilyKind::J: return "J";
    case FamilyKind::Phi: return "phi";
    case FamilyKind::Psi: return "psi";
  }
  return "?";
}

FamilyKind parse_kind(const std::string& name) {
  const std::string s = lower(name);
  if (s == "m") return FamilyKind::M;
  if (s == "n") return FamilyKind::N;
  if (s == "i") return FamilyKind::I;
  if (s == "j") return FamilyKind::J;
  if (s == "phi") return FamilyKind::Phi;
  if (s == "psi") return FamilyKind::Psi;
  throw ParameterError("unknown family '" + name + "'");
}

Rational rational_from_json(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number_float()) return Rational::parse(v.dump());
  throw ParameterError("parameter '" + key + "' must be a number or a rational string");
}

std::vector<std::vector<long>> Family::chains(long n_max) const {
  std::vector<std::vector<long>> out;
  if (even_weight() && parity_by_index()) {
    out.resize(2);
    for (long n = 0; n <= n_max; ++n) out[n % 2].push_back(n);
    if (out[1].empty()) out.pop_back();
  } else {
    out.emplace_back();
    for (long n = 0; n <= n_max; ++n) out[0].push_back(n);
  }
  return out;
}

std::unique_ptr<Family> make_family(FamilyKind kind, const nlohmann::json& params) {
  switch (kind) {
    case FamilyKind::M:
      reject_unknown(params, {"p", "q"});
      return std::make_unique<MFamily>(ParamsM{required(params, "p"), required(params, "q")});
    case FamilyKind::N:
      reject_unknown(params, {"p"});
      return std::make_unique<NFamily>(ParamsN{required(params, "p")});
    case FamilyKind::I:
      reject_unknown(params, {"p"});
      return std::make_unique<IFamily>(ParamsI{required(params, "p")});
    case FamilyKind::J:
      reject_unknown(params, {"p", "q"});
      return std::make_unique<JFamily>(ParamsJ{required(params, "p"), required(params, "q")});
    case FamilyKind::Phi: {
      reject_unknown(params, {"a", "b", "m", "r", "s", "mode"});
      PhiParams p{required(params, "a"), required(params, "b"), int_from_json(params, "m", 1),
                  int_from_json(params, "r", 0), int_from_json(params, "s", 0), mode_from_json(params)};
      return std::make_unique<PhiFamily>(std::move(p));
    }
    case FamilyKind::Psi: {
      reject_unknown(params, {"a", "m", "r", "s", "mode"});
      PsiParams p{required(params, "a"), int_from_json(params, "m", 1), int_from_json(params, "r", 0),
                  int_from_json(params, "s", 0), mode_from_json(params)};
      return std::make_unique<PsiFamily>(std::move(p));
    }
  }
  throw ParameterError("unknown family kind");
}

std::unique_ptr<Family> make_family(const std::string& kind, const nlohmann::json& params) {
  return make_family(parse_kind(kind), params);
}

}  // namespace finortho
