#pragma once

#include "akl/geometry.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace akl {

enum class ChartKind { Flat, KahlerPotential, Retraction, Explicit, NonclosedControl };

std::string_view to_string(ChartKind kind) noexcept;

/// One monomial coefficient of a descriptor table.
///   phi       potential term, no indices
///   kappa_ab  adds c to kappa(a, b) and -c to kappa(b, a), a != b
///   h_ab      adds c to h(a, b) and, for a != b, to h(b, a)
///   J_a_b     adds c to J^a_b
struct DescriptorTerm {
  std::string target;
  std::vector<int> indices;
  Exponents exponents;
  Complex coeff;
};

/// Polynomial description of a chart:
///   FLAT              standard kappa and J
///   KAHLER_POTENTIAL  kappa from the potential phi, standard J
///   RETRACTION        standard kappa plus kappa_ab terms, J retracted from
///                     h = Id + epsilon * (h_ab terms)
///   EXPLICIT          kappa and J given entirely by their terms
///   NONCLOSED_CONTROL standard kappa plus kappa_ab terms; J from J_a_b terms
///                     when present, else retracted as for RETRACTION.
///                     Not validated.
struct ChartDescriptor {
  std::string name;
  int n = 1;
  ChartKind kind = ChartKind::Flat;
  std::vector<Interval> domain_box;
  std::vector<DescriptorTerm> terms;
  double epsilon = 0.0;
};

inline constexpr int kMaxDescriptorDegree = 4;
inline constexpr std::size_t kValidationPoints = 100;
inline constexpr double kValidationTol = 1e-9;

ChartDescriptor parse_descriptor(std::string_view json_text);
ChartDescriptor load_descriptor(const std::string& path);
std::string to_json(const ChartDescriptor& d);

const std::vector<std::string>& builtin_names();
ChartDescriptor builtin_descriptor(const std::string& name);
ChartedStructure builtin(const std::string& name);

/// Assembles the providers and, except for NONCLOSED_CONTROL, validates the
/// six structure invariants at quasi-random points of the box.
ChartedStructure from_descriptor(const ChartDescriptor& d);

/// A builtin name, or else a path to a descriptor file.
ChartedStructure load_chart(const std::string& name_or_path);

} // namespace akl
