#include "akl/checks.hpp"

#include "akl/error.hpp"
#include "akl/frames.hpp"
#include "akl/sampling.hpp"
#include "akl/tensors.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

namespace akl {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kNegativeControlFactor = 10.0;

enum class Expect { Zero, Nonzero, Observation };

struct CheckDef {
  std::string id;
  Expect expect;
  std::string notes;
};

/// Residuals recorded at one sample point.
struct PointOutcome {
  std::map<std::string, double> values;
  std::string error;
};

class Recorder {
public:
  Recorder(std::uint64_t seed, std::size_t index) : seed_(seed), index_(index) {}

  void record(const std::string& id, double value) {
    auto [it, inserted] = out_.values.try_emplace(id, value);
    if (!inserted) it->second = std::max(it->second, value);
  }
  /// Random stream private to (check, point).
  Rng rng(std::string_view id) const { return Rng(stream_seed(seed_, id, index_)); }
  PointOutcome& outcome() { return out_; }

private:
  std::uint64_t seed_;
  std::size_t index_;
  PointOutcome out_;
};

using Evaluator = std::function<void(const Point&, Recorder&)>;

std::vector<PointOutcome> evaluate_points(const std::vector<Point>& points, std::uint64_t seed,
                                          const Evaluator& eval) {
  std::vector<PointOutcome> outcomes(points.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t k = begin; k < points.size(); k += step) {
      Recorder rec(seed, k);
      try {
        eval(points[k], rec);
      } catch (const std::exception& e) {
        rec.outcome().error = e.what();
      }
      outcomes[k] = std::move(rec.outcome());
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(points.size(), 1));
  std::vector<std::future<void>> futures;
  for (std::size_t w = 1; w < workers; ++w)
    futures.push_back(std::async(std::launch::async, work, w, workers));
  work(0, workers);
  for (auto& f : futures) f.get();
  return outcomes;
}

CheckStatus classify(Expect expect, double residual, double tol) {
  switch (expect) {
  case Expect::Zero: return residual < tol ? CheckStatus::Pass : CheckStatus::Fail;
  case Expect::Nonzero:
    return residual > kNegativeControlFactor * tol ? CheckStatus::NegativeControlPass
                                                   : CheckStatus::Fail;
  case Expect::Observation:
    if (residual < tol) return CheckStatus::Pass;
    return residual > kNegativeControlFactor * tol ? CheckStatus::NegativeControlPass
                                                   : CheckStatus::Fail;
  }
  return CheckStatus::Fail;
}

std::vector<CheckResult> reduce(const std::vector<CheckDef>& defs,
                                const std::vector<PointOutcome>& outcomes, double tol) {
  std::vector<CheckResult> results;
  for (const auto& def : defs) {
    CheckResult r{def.id, 0, 0.0, tol, CheckStatus::Fail, def.notes};
    std::size_t failures = 0;
    std::string first_error;
    for (const auto& o : outcomes) {
      const auto it = o.values.find(def.id);
      if (it != o.values.end() && std::isfinite(it->second)) {
        ++r.points_sampled;
        r.max_residual = std::max(r.max_residual, it->second);
      } else {
        ++failures;
        if (first_error.empty())
          first_error = o.error.empty() ? std::string("non-finite residual") : o.error;
      }
    }
    r.status = classify(def.expect, r.max_residual, tol);
    if (failures > 0) {
      r.status = CheckStatus::Fail;
      r.notes += "; failed at " + std::to_string(failures) + " point(s): " + first_error;
    }
    results.push_back(std::move(r));
  }
  return results;
}

CVec random_type10(const LocalGeometry& geo, Rng& rng) {
  return geo.project_10(random_complex_vector(geo.dim(), rng));
}

JetVec random_type10_germ(const LocalGeometry& geo, Rng& rng) {
  return type10_germ(geo, random_field(geo.point(), rng));
}

double max_nijenhuis(const ChartedStructure& chart, const std::vector<Point>& points) {
  double m = 0.0;
  for (const auto& p : points) {
    const TensorValue n = nijenhuis_tensor(LocalGeometry(chart, p));
    for (const auto& c : n.components) m = std::max(m, std::abs(c.value()));
  }
  return m;
}

// ---------------------------------------------------------------- STRUCTURE

std::vector<CheckDef> structure_defs() {
  return {
      {"kappa_antisymmetric", Expect::Zero, "kappa(X,Y) + kappa(Y,X) = 0"},
      {"j_squared_minus_identity", Expect::Zero, "J^2 = -Id"},
      {"kappa_j_invariant", Expect::Zero, "kappa(JX,JY) = kappa(X,Y)"},
      {"metric_positive_definite", Expect::Zero,
       "g = kappa(J.,.) positive definite; residual max(0, 1 - lambda_min / 1e-6)"},
      {"kappa_closed", Expect::Zero, "d kappa = 0"},
      {"kappa_nondegenerate", Expect::Zero,
       "kappa non-degenerate; residual max(0, 1 - |det kappa| / 1e-6)"},
  };
}

void eval_structure(const ChartedStructure& chart, const Point& p, Recorder& rec) {
  const StructureResiduals r = structure_residuals(chart, p);
  rec.record("kappa_antisymmetric", r.kappa_antisymmetry);
  rec.record("j_squared_minus_identity", r.j_squared);
  rec.record("kappa_j_invariant", r.kappa_invariance);
  rec.record("metric_positive_definite", r.metric_positivity);
  rec.record("kappa_closed", r.kappa_closedness);
  rec.record("kappa_nondegenerate", r.kappa_nondegeneracy);
}

// --------------------------------------------------------------- IDENTITIES

std::vector<CheckDef> identity_defs(bool symplectic) {
  std::vector<CheckDef> s{
      {"hermitian_relation", Expect::Zero,
       "2g((nabla_X J)Y,Z) = dkappa(X,JY,JZ) - dkappa(X,Y,Z) + g(N(Y,Z),JX)"},
  };
  if (symplectic)
    s.push_back({"symplectic_relation", Expect::Zero, "2g((nabla_X J)Y,Z) = g(N(Y,Z),JX)"});
  else
    s.push_back({"symplectic_relation_negative_control", Expect::Nonzero,
                 "2g((nabla_X J)Y,Z) = g(N(Y,Z),JX) must fail when dkappa != 0"});
  s.insert(s.end(),
           {
               {"nijenhuis_mixed_type", Expect::Zero, "N(Z1, Zbar2) = 0 for (1,0) Z1, Z2"},
               {"nijenhuis_antisymmetry", Expect::Zero, "N(X,Y) + N(Y,X) = 0"},
               {"nijenhuis_bracket_vs_components", Expect::Zero,
                "bracket formula [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y] equals the component formula"},
               {"nijenhuis_tensoriality", Expect::Zero, "N(fX,Y) = f N(X,Y) for polynomial f"},
               {"b_property1", Expect::Zero, "B(X,Y) - B(Y,X) = -N(X,Y)"},
               {"b_property2", Expect::Zero,
                "B(Z1,Z2) = 2iJ nabla_{Z1} Z2 + 2 nabla_{Z1} Z2, Z2 = P^{1,0}(constant)"},
               {"b_property3", Expect::Zero, "B(Z1,Z2) is of type (0,1)"},
               {"b_property4", Expect::Zero, "B(Z1,Zbar2) = 0"},
               {"lemma2_zero_sets", Expect::Zero,
                "points where |N| < 1e-9 and |B| < 1e-8 disagree (count)"},
           });
  if (symplectic) {
    s.push_back({"corollary1_type10", Expect::Zero,
                 "nabla_{Zbar1} Z2 is of type (1,0) for (1,0) fields Z1, Z2"});
    s.push_back({"lemma3_identity", Expect::Zero,
                 "(1/2)(nabla_Zbar B)(W,H) = R(Zbar,W)H + i nabla_Zbar(J nabla_W H) - iJ nabla_W "
                 "nabla_Zbar H - iJ nabla_{nabla_Zbar W} H - nabla_{nabla_W Zbar} H"});
  } else {
    s.push_back({"corollary1_negative_control", Expect::Nonzero,
                 "nabla_{Zbar1} Z2 acquires a (0,1) part when dkappa != 0"});
  }
  return s;
}

void eval_identities(const ChartedStructure& chart, const Point& p, Recorder& rec) {
  const LocalGeometry geo(chart, p);
  const std::size_t dim = geo.dim();
  const Eigen::MatrixXcd j = geo.j().value();
  const TensorValue nij = nijenhuis_tensor(geo);
  const TensorValue b = b_tensor(geo);

  {
    Rng rng = rec.rng("hermitian_relation");
    const CVec x = random_complex_vector(dim, rng), y = random_complex_vector(dim, rng),
               z = random_complex_vector(dim, rng);
    rec.record("hermitian_relation", std::abs(hermitian_relation_residual(geo, x, y, z)));
    const double r = std::abs(symplectic_relation_residual(geo, x, y, z));
    rec.record(chart.symplectic() ? "symplectic_relation" : "symplectic_relation_negative_control",
               r);
  }
  {
    Rng rng = rec.rng("nijenhuis_mixed_type");
    const CVec z1 = random_type10(geo, rng), z2 = random_type10(geo, rng);
    rec.record("nijenhuis_mixed_type", max_abs(contract(nij, z1, CVec(z2.conjugate()))));
  }
  {
    Rng rng = rec.rng("nijenhuis_antisymmetry");
    const CVec x = random_complex_vector(dim, rng), y = random_complex_vector(dim, rng);
    rec.record("nijenhuis_antisymmetry",
               max_abs(CVec(contract(nij, x, y) + contract(nij, y, x))));
    const CVec via_brackets = values(nijenhuis(geo, geo.constant(x), geo.constant(y)));
    rec.record("nijenhuis_bracket_vs_components", max_abs(CVec(via_brackets - contract(nij, x, y))));
  }
  {
    Rng rng = rec.rng("nijenhuis_tensoriality");
    const CVec x = random_complex_vector(dim, rng), y = random_complex_vector(dim, rng);
    const Jet2 f = random_polynomial(dim, 2, rng).jet(Point(dim, 0.0));
    const JetVec fx = f * geo.constant(x);
    const CVec lhs = values(nijenhuis(geo, fx, geo.constant(y)));
    rec.record("nijenhuis_tensoriality", max_abs(CVec(lhs - f.value() * contract(nij, x, y))));
  }
  {
    Rng rng = rec.rng("b_property1");
    const CVec x = random_complex_vector(dim, rng), y = random_complex_vector(dim, rng);
    rec.record("b_property1",
               max_abs(CVec(contract(b, x, y) - contract(b, y, x) + contract(nij, x, y))));
  }
  {
    Rng rng = rec.rng("b_properties");
    const CVec z1 = random_type10(geo, rng), z2 = random_type10(geo, rng);
    const CVec bzz = contract(b, z1, z2);
    const CVec nabla = values(
        covariant_derivative(geo, geo.constant(z1), geo.project_10(geo.constant(z2))));
    rec.record("b_property2", max_abs(CVec(bzz - (2.0 * kI * (j * nabla) + 2.0 * nabla))));
    rec.record("b_property3", max_abs(geo.project_10(bzz)));
    rec.record("b_property4", max_abs(contract(b, z1, CVec(z2.conjugate()))));
  }
  {
    double n_max = 0.0, b_max = 0.0;
    for (const auto& c : nij.components) n_max = std::max(n_max, std::abs(c.value()));
    for (const auto& c : b.components) b_max = std::max(b_max, std::abs(c.value()));
    rec.record("lemma2_zero_sets", (n_max < 1e-9) == (b_max < 1e-8) ? 0.0 : 1.0);
  }
  {
    Rng rng = rec.rng("corollary1");
    const PolyVectorField z1 = type10_field(geo, random_field(p, rng));
    const PolyVectorField z2 = type10_field(geo, random_field(p, rng));
    rec.record(chart.symplectic() ? "corollary1_type10" : "corollary1_negative_control",
               verify_corollary1(chart, p, z1, z2));
  }
  if (chart.symplectic()) {
    Rng rng = rec.rng("lemma3_identity");
    const JetVec z = random_type10_germ(geo, rng), w = random_type10_germ(geo, rng),
                 h = random_type10_germ(geo, rng);
    rec.record("lemma3_identity", max_abs(lemma3_identity(geo, z, w, h).residual));
  }
}

// ------------------------------------------------------------------- FRAMES

std::vector<CheckDef> frame_defs(bool integrable) {
  std::vector<CheckDef> s{
      {"special_bracket_zz", Expect::Zero, "special frame: [Z_i,Z_j](o) = -(1/4)N(Z_i,Z_j)(o)"},
      {"special_bracket_mixed", Expect::Zero, "special frame: [Zbar_i,Z_j](o) = 0"},
      {"special_dG", Expect::Zero, "special frame: G_ik(o) = delta_ik, dG_ik[o] = 0"},
      {"step1_nabla_zbar_z", Expect::Zero,
       "special frame: nabla_{Zbar_k} Z_r(o) = 0 and nabla_{Z_r} Zbar_k(o) = 0"},
      {"step1_nabla_z_z_type01", Expect::Zero, "special frame: nabla_{Z_k} Z_i(o) is of type (0,1)"},
      {"step1_second_derivative_type10", Expect::Zero,
       "special frame: nabla_{Z_r} nabla_{Zbar_k} Z_i(o) is of type (1,0)"},
      {"gnh_type10", Expect::Zero, "GNH frame: W_i(o) is of type (1,0)"},
      {"gnh_cond1", Expect::Zero, "GNH frame: nabla_{W_k} Wbar_i(o) = 0"},
      {"gnh_cond2", Expect::Zero, "GNH frame: nabla_{W_k} W_i(o) is of type (0,1)"},
      {"gnh_cond3_G", Expect::Zero, "GNH frame: G_rs(o) = delta_rs"},
      {"gnh_cond3_dG", Expect::Zero, "GNH frame: dG_rs[o] = 0"},
      {"gnh_cond4", Expect::Zero, "GNH frame: nabla_{W_r} nabla_{Wbar_k} W_i(o) = 0"},
      {"gnh_degree", Expect::Zero, "GNH frame coefficients have degree <= 2 (excess degree)"},
  };
  if (integrable) {
    s.push_back({"kahler_reduction", Expect::Zero,
                 "integrable J: GNH frames are normal holomorphic, nabla_{W_i} W_j(o) = 0"});
    s.push_back({"alternative_condition", Expect::Zero,
                 "integrable J: nabla_{W_k} nabla_{W_j} Wbar_i(o) = 0 as well"});
  } else {
    s.push_back({"kahler_reduction_nonzero", Expect::Nonzero,
                 "non-integrable J: nabla_{W_i} W_j(o) != 0 somewhere"});
    s.push_back({"alternative_condition_observation", Expect::Observation,
                 "non-integrable J: nabla_{W_k} nabla_{W_j} Wbar_i(o), observed alongside gnh_cond4"});
  }
  return s;
}

void eval_frames(const ChartedStructure& chart, bool integrable, const Point& p, Recorder& rec) {
  const GnhConstruction c = gnh_construction(chart, p);
  const FrameDiagnostics ds = verify_frame(chart, c.special);
  rec.record("special_bracket_zz", ds.at("special_bracket_zz"));
  rec.record("special_bracket_mixed", ds.at("special_bracket_mixed"));
  rec.record("special_dG", std::max(ds.at("special_dG"), ds.at("gnh_cond3_G")));
  const Step1Residuals s1 = step1_residuals(chart, c.special);
  rec.record("step1_nabla_zbar_z", s1.eq5);
  rec.record("step1_nabla_z_z_type01", s1.eq6);
  rec.record("step1_second_derivative_type10", s1.item3);

  const FrameDiagnostics dg = verify_frame(chart, c.gnh);
  rec.record("gnh_type10", dg.at("type10"));
  for (const char* id : {"gnh_cond1", "gnh_cond2", "gnh_cond3_G", "gnh_cond3_dG", "gnh_cond4"})
    rec.record(id, dg.at(id));
  int degree = 0;
  for (const auto& f : c.gnh.fields) degree = std::max(degree, f.degree());
  rec.record("gnh_degree", std::max(0, degree - 2));
  const double r2 = mutual_exclusivity_probe(chart, c.gnh).second;
  rec.record(integrable ? "kahler_reduction" : "kahler_reduction_nonzero",
             dg.at("kahler_reduction"));
  rec.record(integrable ? "alternative_condition" : "alternative_condition_observation", r2);
}

// ------------------------------------------------------------ INTEGRABILITY

std::vector<CheckDef> integrability_defs(bool integrable) {
  std::vector<CheckDef> s;
  if (integrable) {
    s = {
        {"nabla_pp_b_zero", Expect::Zero, "integrable J: nabla''B = 0"},
        {"remark_scalar_zero", Expect::Zero, "integrable J: g((nabla_{Zbar1} B)(Z1,Z2), Zbar2) = 0"},
        {"nabla_j_condition_zero", Expect::Zero,
         "integrable J: (nabla_Zbar J)(nabla_W H) = 0 for (1,0) fields"},
    };
  } else {
    s = {
        {"nabla_pp_b_nonzero", Expect::Nonzero,
         "non-integrable J: nabla''B != 0 somewhere (nabla''B = 0 forces Kahler)"},
        {"remark_scalar_nonzero", Expect::Nonzero,
         "non-integrable J: g((nabla_{Zbar1} B)(Z1,Z2), Zbar2) != 0 somewhere"},
        {"nabla_j_condition_nonzero", Expect::Nonzero,
         "non-integrable J: (nabla_Zbar J)(nabla_W H) != 0 somewhere ((nabla J)nabla = 0 forces "
         "Kahler)"},
    };
  }
  s.push_back({"lemma3_identity", Expect::Zero,
               "(1/2)(nabla_Zbar B)(W,H) = R(Zbar,W)H + i nabla_Zbar(J nabla_W H) - iJ nabla_W "
               "nabla_Zbar H - iJ nabla_{nabla_Zbar W} H - nabla_{nabla_W Zbar} H"});
  s.push_back({"lemma3_proof_line", Expect::Zero,
               "GNH frame: g((nabla_{Zbar_i} J) nabla_{Z_j} Z_k, Zbar_r) = 2i g(nabla_{Z_j} Z_k, "
               "nabla_{Zbar_i} Zbar_r)"});
  return s;
}

void eval_integrability(const ChartedStructure& chart, bool integrable, const Point& p,
                        Recorder& rec) {
  const LocalGeometry geo(chart, p);
  const std::size_t dim = geo.dim();
  const std::string suffix = integrable ? "_zero" : "_nonzero";
  {
    Rng rng = rec.rng("nabla_pp_b");
    const CVec u = random_complex_vector(dim, rng), x = random_complex_vector(dim, rng),
               y = random_complex_vector(dim, rng);
    rec.record("nabla_pp_b" + suffix, max_abs(nabla_pp_b(geo, u, x, y)));
  }
  {
    Rng rng = rec.rng("remark_scalar");
    const CVec z1 = random_type10(geo, rng), z2 = random_type10(geo, rng);
    const CVec v = nabla_b(geo, CVec(z1.conjugate()), z1, z2);
    rec.record("remark_scalar" + suffix, std::abs(geo.pairing(v, CVec(z2.conjugate()))));
  }
  {
    Rng rng = rec.rng("lemma3");
    const JetVec z = random_type10_germ(geo, rng), w = random_type10_germ(geo, rng),
                 h = random_type10_germ(geo, rng);
    const CVec nabla_w_h = values(covariant_derivative(geo, w, h));
    rec.record("nabla_j_condition" + suffix,
               max_abs(contract(nabla_j(geo), CVec(values(z).conjugate()), nabla_w_h)));
    rec.record("lemma3_identity", max_abs(lemma3_identity(geo, z, w, h).residual));
  }
  rec.record("lemma3_proof_line", proof_line_residual(chart, gnh_frame(chart, p)));
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

nlohmann::json report_json(const CheckReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"check_id", c.check_id},
                      {"points_sampled", c.points_sampled},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance},
                      {"status", std::string(to_string(c.status))},
                      {"notes", c.notes}});
  return {{"chart", r.chart},     {"suite", std::string(to_string(r.suite))},
          {"seed", r.seed},       {"tol", r.tol},
          {"npoints", r.npoints}, {"checks", checks},
          {"version", r.version}, {"timestamp", r.timestamp}};
}

} // namespace

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
  case Suite::Structure: return "STRUCTURE";
  case Suite::Identities: return "IDENTITIES";
  case Suite::Frames: return "FRAMES";
  case Suite::Integrability: return "INTEGRABILITY";
  }
  return "UNKNOWN";
}

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
  case CheckStatus::Pass: return "PASS";
  case CheckStatus::Fail: return "FAIL";
  case CheckStatus::NegativeControlPass: return "NEGATIVE_CONTROL_PASS";
  }
  return "UNKNOWN";
}

Suite suite_from_string(std::string_view name) {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  throw Error(ErrorKind::UnknownSuite, "unknown suite '" + std::string(name) + "'");
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{Suite::Structure, Suite::Identities, Suite::Frames,
                                         Suite::Integrability};
  return suites;
}

bool CheckReport::all_passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult& CheckReport::find(std::string_view check_id) const {
  for (const auto& c : checks)
    if (c.check_id == check_id) return c;
  throw Error(ErrorKind::IndexOutOfRange, "no check " + std::string(check_id));
}

CheckReport run_suite(const ChartedStructure& chart, Suite suite, std::size_t npoints,
                      std::uint64_t seed, double tol) {
  CheckReport report;
  report.chart = chart.name();
  report.suite = suite;
  report.seed = seed;
  report.tol = tol;
  report.npoints = npoints;
  report.timestamp = utc_timestamp();

  const std::vector<Point> points = sample_points(chart, npoints, seed);
  const bool needs_symplectic = suite == Suite::Frames || suite == Suite::Integrability;
  if (needs_symplectic && !chart.symplectic()) {
    report.checks.push_back({"precondition_symplectic", 0, 0.0, tol, CheckStatus::Fail,
                             "suite requires a closed kappa; chart is a non-closed control"});
    return report;
  }

  std::vector<CheckDef> defs;
  Evaluator eval;
  std::string branch;
  if (needs_symplectic) {
    const double n_max = max_nijenhuis(chart, points);
    const bool integrable = n_max < tol;
    std::ostringstream os;
    os << " [" << (integrable ? "integrable" : "non-integrable") << ": sampled max |N| = "
       << std::setprecision(6) << n_max << "]";
    branch = os.str();
    if (suite == Suite::Frames) {
      defs = frame_defs(integrable);
      eval = [&chart, integrable](const Point& p, Recorder& r) {
        eval_frames(chart, integrable, p, r);
      };
    } else {
      defs = integrability_defs(integrable);
      eval = [&chart, integrable](const Point& p, Recorder& r) {
        eval_integrability(chart, integrable, p, r);
      };
    }
  } else if (suite == Suite::Structure) {
    defs = structure_defs();
    eval = [&chart](const Point& p, Recorder& r) { eval_structure(chart, p, r); };
  } else {
    defs = identity_defs(chart.symplectic());
    eval = [&chart](const Point& p, Recorder& r) { eval_identities(chart, p, r); };
  }
  for (auto& s : defs) s.notes += branch;

  report.checks = reduce(defs, evaluate_points(points, seed, eval), tol);
  return report;
}

std::string to_json(const CheckReport& report) { return report_json(report).dump(2); }

std::string to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : reports) all.push_back(report_json(r));
  return all.dump(2);
}

std::string to_text(const CheckReport& report) {
  std::ostringstream os;
  os << "chart " << report.chart << "  suite " << to_string(report.suite) << "  npoints "
     << report.npoints << "  seed " << report.seed << "  tol " << std::setprecision(6)
     << report.tol << "\n";
  std::size_t width = 8;
  for (const auto& c : report.checks) width = std::max(width, c.check_id.size());
  for (const auto& c : report.checks) {
    os << std::left << std::setw(static_cast<int>(width) + 2) << c.check_id << std::setw(23)
       << to_string(c.status) << std::right << std::setw(13) << std::setprecision(6)
       << c.max_residual << "  (" << c.points_sampled << " pts)  " << c.notes << "\n";
  }
  os << (report.all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

} // namespace akl
