// One line per acceptance criterion; exit status is nonzero if any fails.
#include "akl/checks.hpp"
#include "akl/manifolds.hpp"
#include "akl/sampling.hpp"
#include "akl/tensors.hpp"
#include "jet_composition.hpp"
#include "oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace akl;

namespace {

const std::vector<std::string> kSymplectic{"flat_c1", "flat_c2", "kahler_potential_c1",
                                           "kahler_potential_c2", "perturbed_c2"};
const std::vector<std::string> kKahler{"flat_c1", "flat_c2", "kahler_potential_c1",
                                       "kahler_potential_c2"};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double residual(const CheckReport& r, const std::string& id) { return r.find(id).max_residual; }
bool status_is(const CheckReport& r, const std::string& id, CheckStatus s) {
  return r.find(id).status == s;
}

Outcome jet_arithmetic() {
  Outcome o;
  Rng rng(stream_seed(1, "acceptance_jets", 0));
  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing::ComposedFunction::random(rng);
    Point x(4);
    for (auto& v : x) v = coord(rng);
    const Jet2 j = f.jet(x);
    const oracle::ScalarFn fn = [&](const Point& p) { return f.at(p); };
    for (std::size_t a = 0; a < 4; ++a) {
      const Complex fd = oracle::fd_partial(fn, x, a);
      worst = std::max(worst, std::abs(j.grad(a) - fd) / std::max(1.0, std::abs(fd)));
      for (std::size_t b = 0; b < 4; ++b) {
        const Complex fd2 = oracle::fd_second(fn, x, a, b);
        worst = std::max(worst, std::abs(j.hess(a, b) - fd2) / std::max(1.0, std::abs(fd2)));
      }
    }
  }
  o.detail << "100 composed functions, max relative error " << worst;
  o.require(worst < 1e-6, "relative error < 1e-6");
  return o;
}

Outcome structure_validation() {
  Outcome o;
  double worst = 0.0;
  for (const auto& name : builtin_names()) {
    const ChartedStructure chart = builtin(name);
    const StructureResiduals r = validate(chart, sample_points(chart, 100, 42));
    const auto failing = r.failing(1e-9);
    if (chart.symplectic()) {
      o.require(failing.empty(), name + " invariants");
      for (double v : {r.kappa_antisymmetry, r.j_squared, r.kappa_invariance, r.metric_positivity,
                       r.kappa_closedness, r.kappa_nondegeneracy})
        worst = std::max(worst, v);
    } else {
      o.require(failing == std::vector<std::string>{"kappa_closed"}, name + " fails only dkappa");
      o.detail << name << " dkappa residual " << r.kappa_closedness << "; ";
    }
  }
  o.detail << "max residual on valid charts " << worst;
  return o;
}

Outcome hermitian_relation() {
  Outcome o;
  double herm = 0.0, symp = 0.0;
  for (const auto& name : builtin_names()) {
    const ChartedStructure chart = builtin(name);
    const CheckReport r = run_suite(chart, Suite::Identities, 100, 42, 1e-9);
    herm = std::max(herm, residual(r, "hermitian_relation"));
    o.require(status_is(r, "hermitian_relation", CheckStatus::Pass), name + " hermitian relation");
    if (chart.symplectic()) {
      symp = std::max(symp, residual(r, "symplectic_relation"));
      o.require(status_is(r, "symplectic_relation", CheckStatus::Pass), name + " symplectic relation");
    }
  }
  o.detail << "hermitian max " << herm << ", symplectic-chart max " << symp;
  return o;
}

Outcome corollary1() {
  Outcome o;
  double mixed = 0.0, cor = 0.0;
  for (const auto& name : kSymplectic) {
    const CheckReport r = run_suite(builtin(name), Suite::Identities, 100, 42, 1e-9);
    mixed = std::max(mixed, residual(r, "nijenhuis_mixed_type"));
    cor = std::max(cor, residual(r, "corollary1_type10"));
    o.require(status_is(r, "nijenhuis_mixed_type", CheckStatus::Pass), name + " N(Z1,Zbar2)");
    o.require(status_is(r, "corollary1_type10", CheckStatus::Pass), name + " corollary");
  }
  const CheckReport nc = run_suite(builtin("nonclosed_control_c2"), Suite::Identities, 100, 42, 1e-9);
  const double control = residual(nc, "corollary1_negative_control");
  o.require(control > 1e-3, "negative control > 1e-3");
  o.detail << "N(Z1,Zbar2) max " << mixed << ", P01 nabla max " << cor << ", control " << control;
  return o;
}

Outcome b_properties() {
  Outcome o;
  double worst = 0.0;
  for (const auto& name : builtin_names()) {
    const CheckReport r = run_suite(builtin(name), Suite::Identities, 100, 42, 1e-9);
    for (const auto& id : {"b_property1", "b_property2", "b_property3", "b_property4"}) {
      worst = std::max(worst, residual(r, id));
      o.require(status_is(r, id, CheckStatus::Pass), name + " " + id);
    }
    o.require(residual(r, "lemma2_zero_sets") == 0.0, name + " zero-set agreement");
  }
  o.detail << "B-property max " << worst << ", zero-set disagreements 0";
  return o;
}

Outcome lemma3() {
  Outcome o;
  double worst = 0.0, perturbed_terms = 0.0;
  for (const auto& name : kSymplectic) {
    const ChartedStructure chart = builtin(name);
    const auto points = sample_points(chart, 50, 42);
    for (std::size_t k = 0; k < points.size(); ++k) {
      Rng rng(stream_seed(42, "acceptance_lemma3_" + name, k));
      const LocalGeometry geo(chart, points[k]);
      const JetVec z = type10_germ(geo, random_field(points[k], rng));
      const JetVec w = type10_germ(geo, random_field(points[k], rng));
      const JetVec h = type10_germ(geo, random_field(points[k], rng));
      const Lemma3Evaluation e = lemma3_identity(geo, z, w, h);
      worst = std::max(worst, max_abs(e.residual));
      if (name == "perturbed_c2") perturbed_terms = std::max(perturbed_terms, e.max_term);
    }
  }
  o.require(worst < 1e-8, "residual < 1e-8");
  o.require(perturbed_terms > 1e-1, "perturbed_c2 terms of order 1e-1");
  o.detail << "50 triples per chart, max residual " << worst << ", largest perturbed_c2 term "
           << perturbed_terms;
  return o;
}

Outcome special_frames() {
  Outcome o;
  double worst = 0.0;
  for (const auto& name : kSymplectic) {
    const CheckReport r = run_suite(builtin(name), Suite::Frames, 20, 42, 1e-8);
    for (const auto& id : {"special_bracket_zz", "special_bracket_mixed", "special_dG",
                           "step1_nabla_zbar_z", "step1_nabla_z_z_type01"}) {
      worst = std::max(worst, residual(r, id));
      o.require(status_is(r, id, CheckStatus::Pass), name + " " + id);
    }
  }
  o.detail << "20 base points per chart, max residual " << worst;
  return o;
}

Outcome gnh_frames() {
  Outcome o;
  double worst = 0.0, kahler = 0.0;
  for (const auto& name : kSymplectic) {
    const CheckReport r = run_suite(builtin(name), Suite::Frames, 20, 42, 1e-8);
    for (const auto& id : {"gnh_cond1", "gnh_cond2", "gnh_cond3_G", "gnh_cond3_dG", "gnh_cond4"}) {
      worst = std::max(worst, residual(r, id));
      o.require(status_is(r, id, CheckStatus::Pass), name + " " + id);
    }
    if (name == "perturbed_c2") {
      o.require(status_is(r, "kahler_reduction_nonzero", CheckStatus::NegativeControlPass),
                "perturbed kahler_reduction > 1e-7");
      o.detail << "perturbed_c2 kahler_reduction " << residual(r, "kahler_reduction_nonzero") << ", ";
    } else {
      kahler = std::max(kahler, residual(r, "kahler_reduction"));
      o.require(status_is(r, "kahler_reduction", CheckStatus::Pass), name + " kahler_reduction");
    }
  }
  o.detail << "conditions max " << worst << ", Kaehler-chart reduction max " << kahler;
  return o;
}

Outcome integrability() {
  Outcome o;
  double kahler = 0.0, proof = 0.0;
  for (const auto& name : kSymplectic) {
    const CheckReport r = run_suite(builtin(name), Suite::Integrability, 20, 42, 1e-8);
    proof = std::max(proof, residual(r, "lemma3_proof_line"));
    o.require(status_is(r, "lemma3_proof_line", CheckStatus::Pass), name + " proof line");
    if (name == "perturbed_c2") {
      for (const auto& id : {"nabla_pp_b_nonzero", "nabla_j_condition_nonzero"}) {
        o.require(status_is(r, id, CheckStatus::NegativeControlPass), std::string("perturbed ") + id);
        o.detail << id << " " << residual(r, id) << ", ";
      }
    } else {
      for (const auto& id : {"nabla_pp_b_zero", "nabla_j_condition_zero"}) {
        kahler = std::max(kahler, residual(r, id));
        o.require(status_is(r, id, CheckStatus::Pass), name + " " + id);
      }
    }
  }
  o.detail << "Kaehler-chart max " << kahler << ", proof line max " << proof;
  return o;
}

std::string run_cli(const std::string& args, const std::string& out) {
  const std::string cmd = std::string(AKL_BINARY) + " " + args + " --output " + out;
  const int status = std::system(cmd.c_str());
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {};
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out.c_str());
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  const std::string args = "all --chart perturbed_c2 --npoints 20 --seed 42 --format json";
  const std::string a = run_cli(args, "acceptance_run_a.json");
  const std::string b = run_cli(args, "acceptance_run_b.json");
  o.require(!a.empty() && !b.empty(), "both runs exit 0");
  if (!o.pass) return o;
  nlohmann::json ja = nlohmann::json::parse(a), jb = nlohmann::json::parse(b);
  for (auto& r : ja) r.erase("timestamp");
  for (auto& r : jb) r.erase("timestamp");
  o.require(ja.dump() == jb.dump(), "identical reports");
  o.detail << "two runs of `akl " << args << "`, " << a.size() << " bytes each, identical modulo timestamp";
  return o;
}

} // namespace

int main() {
  using Criterion = Outcome (*)();
  const std::vector<std::pair<const char*, Criterion>> criteria{
      {"jet arithmetic vs central differences", jet_arithmetic},
      {"structure validation", structure_validation},
      {"fundamental Hermitian relation", hermitian_relation},
      {"mixed Nijenhuis and (0,1) derivative of (1,0) fields", corollary1},
      {"B-properties and zero sets", b_properties},
      {"curvature identity for (1,0) triples", lemma3},
      {"special frames and first consequences", special_frames},
      {"GNH frames", gnh_frames},
      {"integrability probes", integrability},
      {"determinism", determinism},
  };
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "error: " << e.what();
    }
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << ": " << o.detail.str() << std::endl;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total " << secs << " s" << std::endl;
  return all ? 0 : 1;
}
