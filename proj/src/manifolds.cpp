#include "akl/manifolds.hpp"

#include "akl/error.hpp"
#include "akl/sampling.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>

namespace akl {

namespace {

using nlohmann::json;

constexpr Complex kI{0.0, 1.0};
constexpr std::uint64_t kValidationSeed = 0;

struct KindName {
  ChartKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {ChartKind::Flat, "FLAT"},
    {ChartKind::KahlerPotential, "KAHLER_POTENTIAL"},
    {ChartKind::Retraction, "RETRACTION"},
    {ChartKind::Explicit, "EXPLICIT"},
    {ChartKind::NonclosedControl, "NONCLOSED_CONTROL"},
};

ChartKind kind_from_string(const std::string& s) {
  for (const auto& kn : kKindNames)
    if (s == kn.name) return kn.kind;
  throw Error(ErrorKind::MalformedDescriptor, "unknown chart kind '" + s + "'");
}

/// Row-major dim x dim table of polynomials in the absolute coordinates.
using PolyMatrix = std::vector<Polynomial>;

PolyMatrix constant_matrix(const Eigen::MatrixXcd& m) {
  const std::size_t dim = m.rows();
  PolyMatrix p;
  p.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) p.push_back(Polynomial::constant(dim, m(r, c)));
  return p;
}

MatrixProvider provider(PolyMatrix entries) {
  auto shared = std::make_shared<const PolyMatrix>(std::move(entries));
  return [shared](const Point& x) {
    const std::size_t dim = x.size();
    JetMatrix m(dim, dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = (*shared)[r * dim + c].jet(x);
    return m;
  };
}

Complex dz(std::size_t j, std::size_t a) {
  if (a == 2 * j) return 1.0;
  if (a == 2 * j + 1) return kI;
  return 0.0;
}

/// kappa = -(i/2) sum h_jk dz_j ^ dzbar_k with h_jk = d_{z_j} d_{zbar_k} phi,
/// so that phi = |z|^2 gives the standard form.
PolyMatrix kappa_from_potential(const Polynomial& phi, int n) {
  const std::size_t dim = 2 * static_cast<std::size_t>(n);
  std::vector<Polynomial> h;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Polynomial dk = 0.5 * (phi.derivative(2 * k) + kI * phi.derivative(2 * k + 1));
      h.push_back(0.5 * (dk.derivative(2 * j) - kI * dk.derivative(2 * j + 1)));
    }
  PolyMatrix kappa(dim * dim, Polynomial(dim));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Complex w = dz(j, a) * std::conj(dz(k, b)) - dz(j, b) * std::conj(dz(k, a));
          if (w != Complex{})
            kappa[a * dim + b] += (-0.5 * kI * w) * h[static_cast<std::size_t>(j * n + k)];
        }
  return kappa;
}

void check_term(const ChartDescriptor& d, const DescriptorTerm& t) {
  const std::size_t dim = 2 * static_cast<std::size_t>(d.n);
  if (t.exponents.size() != dim)
    throw Error(ErrorKind::MalformedDescriptor,
                "term for " + t.target + " needs " + std::to_string(dim) + " exponents");
  if (std::any_of(t.exponents.begin(), t.exponents.end(), [](int e) { return e < 0; }))
    throw Error(ErrorKind::MalformedDescriptor, "negative exponent");
  if (std::accumulate(t.exponents.begin(), t.exponents.end(), 0) > kMaxDescriptorDegree)
    throw Error(ErrorKind::MalformedDescriptor,
                "term degree exceeds " + std::to_string(kMaxDescriptorDegree));
  const std::size_t want = t.target == "phi" ? 0 : 2;
  if (t.target != "phi" && t.target != "kappa_ab" && t.target != "h_ab" && t.target != "J_a_b")
    throw Error(ErrorKind::MalformedDescriptor, "unknown term target '" + t.target + "'");
  if (t.indices.size() != want)
    throw Error(ErrorKind::MalformedDescriptor, t.target + " term needs " + std::to_string(want) +
                                                    " indices");
  for (int i : t.indices)
    if (i < 0 || static_cast<std::size_t>(i) >= dim)
      throw Error(ErrorKind::MalformedDescriptor, "term index out of range");
  if (t.target == "kappa_ab" && t.indices[0] == t.indices[1])
    throw Error(ErrorKind::MalformedDescriptor, "kappa_ab term on the diagonal");

  bool allowed = false;
  switch (d.kind) {
  case ChartKind::Flat: allowed = false; break;
  case ChartKind::KahlerPotential: allowed = t.target == "phi"; break;
  case ChartKind::Retraction: allowed = t.target == "kappa_ab" || t.target == "h_ab"; break;
  case ChartKind::Explicit: allowed = t.target == "kappa_ab" || t.target == "J_a_b"; break;
  case ChartKind::NonclosedControl: allowed = t.target != "phi"; break;
  }
  if (!allowed)
    throw Error(ErrorKind::MalformedDescriptor, t.target + " term not allowed for kind " +
                                                    std::string(to_string(d.kind)));
}

void check_descriptor(const ChartDescriptor& d) {
  if (d.n <= 0) throw Error(ErrorKind::MalformedDescriptor, "complex dimension must be positive");
  if (d.domain_box.size() != 2 * static_cast<std::size_t>(d.n))
    throw Error(ErrorKind::MalformedDescriptor, "domain box needs one interval per coordinate");
  for (const auto& iv : d.domain_box)
    if (!(iv.lo < iv.hi)) throw Error(ErrorKind::MalformedDescriptor, "empty domain interval");
  for (const auto& t : d.terms) check_term(d, t);
}

PolyMatrix accumulate(const ChartDescriptor& d, const std::string& target, PolyMatrix base,
                      Complex scale) {
  const std::size_t dim = 2 * static_cast<std::size_t>(d.n);
  for (const auto& t : d.terms) {
    if (t.target != target) continue;
    const auto a = static_cast<std::size_t>(t.indices[0]);
    const auto b = static_cast<std::size_t>(t.indices[1]);
    const Complex c = scale * t.coeff;
    base[a * dim + b].add_term(t.exponents, c);
    if (target == "kappa_ab") base[b * dim + a].add_term(t.exponents, -c);
    if (target == "h_ab" && a != b) base[b * dim + a].add_term(t.exponents, c);
  }
  return base;
}

bool has_target(const ChartDescriptor& d, const std::string& target) {
  return std::any_of(d.terms.begin(), d.terms.end(),
                     [&](const DescriptorTerm& t) { return t.target == target; });
}

DescriptorTerm term(std::string target, std::vector<int> indices, Exponents e, double c) {
  return DescriptorTerm{std::move(target), std::move(indices), std::move(e), Complex(c, 0.0)};
}

void append_potential(ChartDescriptor& d, const Polynomial& phi) {
  for (const auto& [e, c] : phi.terms()) d.terms.push_back({"phi", {}, e, c});
}

std::vector<Interval> unit_box(int n) { return std::vector<Interval>(2 * n, Interval{-0.5, 0.5}); }

Polynomial sq(std::size_t nvars, std::size_t var) {
  Exponents e(nvars, 0);
  e[var] = 2;
  return Polynomial::monomial(e, 1.0);
}

ChartDescriptor flat(const std::string& name, int n) {
  return ChartDescriptor{name, n, ChartKind::Flat, unit_box(n), {}, 0.0};
}

ChartDescriptor kahler_c1() {
  ChartDescriptor d{"kahler_potential_c1", 1, ChartKind::KahlerPotential, unit_box(1), {}, 0.0};
  const Polynomial r = sq(2, 0) + sq(2, 1);
  append_potential(d, r + 0.25 * (r * r));
  return d;
}

ChartDescriptor kahler_c2() {
  ChartDescriptor d{"kahler_potential_c2", 2, ChartKind::KahlerPotential, unit_box(2), {}, 0.0};
  const Polynomial r1 = sq(4, 0) + sq(4, 1);
  const Polynomial r2 = sq(4, 2) + sq(4, 3);
  Polynomial phi = r1 + r2 + 0.25 * (r1 * r1 + r2 * r2) + 0.5 * (r1 * r2);
  phi += 0.2 * (Polynomial::linear(4, 0) * r2);
  phi += Polynomial::monomial({0, 2, 2, 0}, 0.1);
  append_potential(d, phi);
  return d;
}

ChartDescriptor perturbed_c2() {
  ChartDescriptor d{"perturbed_c2", 2, ChartKind::Retraction, unit_box(2), {}, 0.1};
  d.terms = {
      term("h_ab", {0, 0}, {1, 0, 0, 1}, 1.0), term("h_ab", {0, 0}, {0, 0, 2, 0}, 1.0),
      term("h_ab", {1, 1}, {0, 2, 0, 0}, 1.0), term("h_ab", {1, 1}, {0, 0, 1, 0}, -1.0),
      term("h_ab", {2, 2}, {1, 0, 0, 0}, 1.0), term("h_ab", {2, 2}, {0, 1, 0, 1}, 1.0),
      term("h_ab", {3, 3}, {0, 1, 1, 0}, 1.0), term("h_ab", {0, 1}, {0, 0, 1, 0}, 1.0),
      term("h_ab", {0, 1}, {0, 0, 0, 2}, 1.0), term("h_ab", {0, 2}, {1, 1, 0, 0}, 1.0),
      term("h_ab", {1, 3}, {2, 0, 0, 0}, 1.0), term("h_ab", {1, 3}, {0, 0, 0, 1}, -1.0),
      term("h_ab", {2, 3}, {0, 0, 1, 1}, 1.0), term("h_ab", {2, 3}, {0, 1, 0, 0}, 1.0),
      term("h_ab", {0, 3}, {0, 1, 0, 0}, 1.0), term("h_ab", {1, 2}, {1, 0, 1, 0}, 1.0),
  };
  return d;
}

ChartDescriptor nonclosed_c2() {
  ChartDescriptor d{"nonclosed_control_c2", 2, ChartKind::NonclosedControl, unit_box(2), {}, 0.0};
  d.terms = {
      term("kappa_ab", {2, 3}, {1, 0, 0, 0}, 0.5),
      term("kappa_ab", {0, 1}, {0, 0, 0, 1}, 0.3),
  };
  return d;
}

} // namespace

std::string_view to_string(ChartKind kind) noexcept {
  for (const auto& kn : kKindNames)
    if (kn.kind == kind) return kn.name;
  return "UNKNOWN";
}

ChartDescriptor parse_descriptor(std::string_view json_text) {
  try {
    const json j = json::parse(json_text);
    ChartDescriptor d;
    d.name = j.at("name").get<std::string>();
    d.n = j.at("n").get<int>();
    d.kind = kind_from_string(j.at("kind").get<std::string>());
    for (const auto& iv : j.at("domain_box")) {
      if (iv.size() != 2) throw Error(ErrorKind::MalformedDescriptor, "interval needs [lo, hi]");
      d.domain_box.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
    }
    if (j.contains("payload") && j.at("payload").contains("terms"))
      for (const auto& t : j.at("payload").at("terms")) {
        DescriptorTerm term;
        term.target = t.at("target").get<std::string>();
        term.indices = t.value("indices", std::vector<int>{});
        term.exponents = t.at("exponents").get<Exponents>();
        term.coeff = Complex(t.value("coeff_re", 0.0), t.value("coeff_im", 0.0));
        d.terms.push_back(std::move(term));
      }
    d.epsilon = j.value("epsilon", 0.0);
    check_descriptor(d);
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedDescriptor, e.what());
  }
}

ChartDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedDescriptor, "cannot read descriptor file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_descriptor(os.str());
}

std::string to_json(const ChartDescriptor& d) {
  json j;
  j["name"] = d.name;
  j["n"] = d.n;
  j["kind"] = std::string(to_string(d.kind));
  j["domain_box"] = json::array();
  for (const auto& iv : d.domain_box) j["domain_box"].push_back({iv.lo, iv.hi});
  json terms = json::array();
  for (const auto& t : d.terms)
    terms.push_back({{"target", t.target},
                     {"indices", t.indices},
                     {"exponents", t.exponents},
                     {"coeff_re", t.coeff.real()},
                     {"coeff_im", t.coeff.imag()}});
  j["payload"] = {{"terms", terms}};
  j["epsilon"] = d.epsilon;
  return j.dump(2);
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{
      "flat_c1",      "flat_c2", "kahler_potential_c1", "kahler_potential_c2",
      "perturbed_c2", "nonclosed_control_c2"};
  return names;
}

ChartDescriptor builtin_descriptor(const std::string& name) {
  if (name == "flat_c1") return flat(name, 1);
  if (name == "flat_c2") return flat(name, 2);
  if (name == "kahler_potential_c1") return kahler_c1();
  if (name == "kahler_potential_c2") return kahler_c2();
  if (name == "perturbed_c2") return perturbed_c2();
  if (name == "nonclosed_control_c2") return nonclosed_c2();
  throw Error(ErrorKind::UnknownChart, "no builtin chart named '" + name + "'");
}

ChartedStructure builtin(const std::string& name) {
  return from_descriptor(builtin_descriptor(name));
}

ChartedStructure from_descriptor(const ChartDescriptor& d) {
  check_descriptor(d);
  const std::size_t dim = 2 * static_cast<std::size_t>(d.n);
  const PolyMatrix kappa0 = constant_matrix(standard_kappa(d.n));
  const PolyMatrix j0 = constant_matrix(standard_j(d.n));

  MatrixProvider kappa;
  MatrixProvider j;
  switch (d.kind) {
  case ChartKind::Flat:
    kappa = provider(kappa0);
    j = provider(j0);
    break;
  case ChartKind::KahlerPotential: {
    Polynomial phi(dim);
    for (const auto& t : d.terms) phi.add_term(t.exponents, t.coeff);
    kappa = provider(kappa_from_potential(phi, d.n));
    j = provider(j0);
    break;
  }
  case ChartKind::Retraction:
  case ChartKind::NonclosedControl: {
    kappa = provider(accumulate(d, "kappa_ab", kappa0, 1.0));
    if (d.kind == ChartKind::NonclosedControl && has_target(d, "J_a_b")) {
      j = provider(accumulate(d, "J_a_b", PolyMatrix(dim * dim, Polynomial(dim)), 1.0));
    } else {
      const PolyMatrix id = constant_matrix(Eigen::MatrixXcd::Identity(dim, dim));
      j = calibrated_j_from_metric(kappa, provider(accumulate(d, "h_ab", id, d.epsilon)));
    }
    break;
  }
  case ChartKind::Explicit: {
    const PolyMatrix zero(dim * dim, Polynomial(dim));
    kappa = provider(accumulate(d, "kappa_ab", zero, 1.0));
    j = provider(accumulate(d, "J_a_b", zero, 1.0));
    break;
  }
  }

  const bool symplectic = d.kind != ChartKind::NonclosedControl;
  ChartedStructure chart(d.name, d.n, std::move(kappa), std::move(j), d.domain_box, symplectic);
  if (symplectic) {
    StructureResiduals r;
    try {
      r = validate(chart, sample_points(chart, kValidationPoints, kValidationSeed));
    } catch (const Error& e) {
      throw Error(ErrorKind::ValidationFailed, "chart " + d.name + ": " + e.what());
    }
    const auto failing = r.failing(kValidationTol);
    if (!failing.empty()) {
      std::string names;
      for (const auto& f : failing) names += (names.empty() ? "" : ", ") + f;
      throw Error(ErrorKind::ValidationFailed, "chart " + d.name + " violates " + names);
    }
  }
  return chart;
}

ChartedStructure load_chart(const std::string& name_or_path) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end())
    return builtin(name_or_path);
  if (std::filesystem::exists(name_or_path)) return from_descriptor(load_descriptor(name_or_path));
  throw Error(ErrorKind::UnknownChart,
              "'" + name_or_path + "' is neither a builtin chart nor a descriptor file");
}

} // namespace akl
