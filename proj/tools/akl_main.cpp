#include "akl/checks.hpp"
#include "akl/error.hpp"
#include "akl/frames.hpp"
#include "akl/manifolds.hpp"
#include "akl/sampling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string chart;
  std::string suite;
  std::string point;
  std::size_t npoints = 50;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  std::string format = "text";
  std::string output;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw UsageError("cannot write " + cfg.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

akl::Point parse_point(const std::string& s, std::size_t dim) {
  akl::Point p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      p.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--point entry '" + item + "' is not a number");
    }
  }
  if (p.size() != dim)
    throw UsageError("--point needs " + std::to_string(dim) + " coordinates, got " +
                     std::to_string(p.size()));
  return p;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string format_complex(akl::Complex c) {
  std::ostringstream os;
  os << std::setprecision(6) << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag())
     << "i)";
  return os.str();
}

int run_list(const Config& cfg) {
  if (cfg.format == "json") {
    emit(cfg, nlohmann::json(akl::builtin_names()).dump(2));
  } else {
    std::string text;
    for (const auto& n : akl::builtin_names()) text += n + "\n";
    emit(cfg, text);
  }
  return kExitPass;
}

int run_validate(const Config& cfg) {
  const akl::ChartedStructure chart = akl::load_chart(cfg.chart);
  const akl::StructureResiduals r =
      akl::validate(chart, akl::sample_points(chart, cfg.npoints, cfg.seed));
  const std::vector<std::pair<std::string, double>> rows{
      {"kappa_antisymmetric", r.kappa_antisymmetry},
      {"j_squared_minus_identity", r.j_squared},
      {"kappa_j_invariant", r.kappa_invariance},
      {"metric_positive_definite", r.metric_positivity},
      {"kappa_closed", r.kappa_closedness},
      {"kappa_nondegenerate", r.kappa_nondegeneracy}};
  const auto failing = r.failing(cfg.tol);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["chart"] = chart.name();
    j["npoints"] = cfg.npoints;
    j["seed"] = cfg.seed;
    j["tol"] = cfg.tol;
    for (const auto& [name, v] : rows) j["residuals"][name] = v;
    j["failing"] = failing;
    emit(cfg, j.dump(2));
  } else {
    std::string text = "chart " + chart.name() + "\n";
    for (const auto& [name, v] : rows)
      text += name + "  " + format_number(v) + (v < cfg.tol ? "  ok" : "  FAIL") + "\n";
    emit(cfg, text);
  }
  return failing.empty() ? kExitPass : kExitFail;
}

int run_check(const Config& cfg, const std::vector<akl::Suite>& suites) {
  const akl::ChartedStructure chart = akl::load_chart(cfg.chart);
  std::vector<akl::CheckReport> reports;
  for (akl::Suite s : suites) reports.push_back(akl::run_suite(chart, s, cfg.npoints, cfg.seed, cfg.tol));
  if (cfg.format == "json") {
    emit(cfg, reports.size() == 1 ? akl::to_json(reports.front()) : akl::to_json(reports));
  } else {
    std::string text;
    for (const auto& r : reports) text += akl::to_text(r);
    emit(cfg, text);
  }
  for (const auto& r : reports)
    if (!r.all_passed()) return kExitFail;
  return kExitPass;
}

int run_frame(const Config& cfg) {
  const akl::ChartedStructure chart = akl::load_chart(cfg.chart);
  if (cfg.point.empty()) throw UsageError("frame needs --point");
  const akl::Point o = parse_point(cfg.point, chart.dim());
  if (!chart.contains(o)) throw UsageError("--point lies outside the chart domain");
  if (!chart.symplectic()) throw UsageError("frames need a chart with closed kappa");

  akl::GnhConstruction c;
  try {
    c = akl::gnh_construction(chart, o);
  } catch (const akl::ConstructionFailed& e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  }
  const akl::FrameDiagnostics d = akl::verify_frame(chart, c.gnh);
  const std::vector<std::string> asserted{"type10",      "gnh_cond1",    "gnh_cond2",
                                          "gnh_cond3_G", "gnh_cond3_dG", "gnh_cond4"};
  bool ok = true;
  for (const auto& name : asserted) ok = ok && d.at(name) < cfg.tol;

  if (cfg.format == "json") {
    nlohmann::json j;
    j["chart"] = chart.name();
    j["base_point"] = o;
    j["tol"] = cfg.tol;
    j["diagnostics"] = d.residuals;
    nlohmann::json fields = nlohmann::json::array();
    for (const auto& f : c.gnh.fields) {
      nlohmann::json comps = nlohmann::json::array();
      for (const auto& p : f.components) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, coeff] : p.terms())
          terms.push_back({{"exponents", e}, {"coeff_re", coeff.real()}, {"coeff_im", coeff.imag()}});
        comps.push_back(terms);
      }
      fields.push_back(comps);
    }
    j["fields"] = fields;
    emit(cfg, j.dump(2));
  } else {
    std::ostringstream os;
    os << "GNH frame on " << chart.name() << " at (";
    for (std::size_t i = 0; i < o.size(); ++i) os << (i ? "," : "") << o[i];
    os << "), polynomials in t = x - o\n";
    for (std::size_t i = 0; i < c.gnh.size(); ++i)
      for (std::size_t comp = 0; comp < c.gnh.fields[i].dim(); ++comp) {
        os << "W_" << i + 1 << "[" << comp << "] =";
        const auto& terms = c.gnh.fields[i].components[comp].terms();
        if (terms.empty()) os << " 0";
        for (const auto& [e, coeff] : terms) {
          os << " " << format_complex(coeff);
          for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) os << "*t" << v << (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
        }
        os << "\n";
      }
    os << "diagnostics\n";
    for (const auto& [name, v] : d.residuals) os << "  " << name << "  " << format_number(v) << "\n";
    os << (ok ? "frame conditions hold" : "frame conditions FAILED") << "\n";
    emit(cfg, os.str());
  }
  return ok ? kExitPass : kExitFail;
}

void add_common(CLI::App* sub, Config& cfg, bool chart, bool sampling) {
  if (chart) sub->add_option("--chart", cfg.chart, "builtin chart name or descriptor JSON path")->required();
  if (sampling) {
    sub->add_option("--npoints", cfg.npoints, "number of sample points")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "sampling seed");
  }
  sub->add_option("--tol", cfg.tol, "tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--output", cfg.output, "output file (default standard output)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost-Kahler chart toolkit: structure checks, identities, frames"};
  app.require_subcommand(1);
  Config cfg;

  auto* list = app.add_subcommand("list", "list builtin charts");
  add_common(list, cfg, false, false);
  auto* validate = app.add_subcommand("validate", "check the six structure invariants");
  add_common(validate, cfg, true, true);
  auto* check = app.add_subcommand("check", "run one check suite");
  add_common(check, cfg, true, true);
  check->add_option("--suite", cfg.suite, "STRUCTURE, IDENTITIES, FRAMES or INTEGRABILITY")
      ->required();
  auto* frame = app.add_subcommand("frame", "construct and verify a GNH frame at a point");
  add_common(frame, cfg, true, false);
  frame->add_option("--point", cfg.point, "comma-separated coordinates")->required();
  auto* all = app.add_subcommand("all", "run every suite");
  add_common(all, cfg, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (list->parsed()) return run_list(cfg);
    if (validate->parsed()) return run_validate(cfg);
    if (check->parsed()) return run_check(cfg, {akl::suite_from_string(cfg.suite)});
    if (frame->parsed()) return run_frame(cfg);
    if (all->parsed()) return run_check(cfg, akl::all_suites());
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const akl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
    case akl::ErrorKind::UnknownChart:
    case akl::ErrorKind::UnknownSuite:
    case akl::ErrorKind::MalformedDescriptor:
    case akl::ErrorKind::ValidationFailed:
    case akl::ErrorKind::DomainViolation:
      return kExitUsage;
    default:
      return kExitFail;
    }
  }
  return kExitUsage;
}
