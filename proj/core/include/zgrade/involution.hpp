#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zgrade/rootsys.hpp"

namespace zgrade {

enum class CaseTag { SemisimpleK1, SemisimpleK2, Hermitian };

std::string to_string(CaseTag tag);

/// A Kac tuple (s_0, ..., s_n; k) of order two on the diagram X_N^(k).
struct InvolutionSpec {
  AffineKind affine;
  std::vector<int> s;
  int k = 1;
  CaseTag tag = CaseTag::SemisimpleK1;
  int p = 0;
  std::optional<int> q;
  /// Values of p (semisimple) or q (hermitian, with p = 0) reached by
  /// diagram automorphisms from this representative.
  std::vector<int> equivalent_indices;

  [[nodiscard]] bool hermitian() const { return tag == CaseTag::Hermitian; }
  [[nodiscard]] int n() const { return static_cast<int>(s.size()) - 1; }
  /// Stable identifier, e.g. "E8^(1):0,0,0,0,0,0,0,1,0".
  [[nodiscard]] std::string key() const;
};

/// Validates k * sum a_i s_i = 2 and primitivity, then tags the case and picks
/// p (and q). Does not apply any diagram automorphism.
InvolutionSpec make_involution(AffineKind affine, std::vector<int> s);

/// Permutations of the nodes preserving the generalized Cartan matrix.
std::vector<std::vector<int>> diagram_automorphisms(const IntMatrix& cartan);

/// One representative per conjugacy class of involutions of the simple Lie
/// algebra of the given type, hermitian representatives normalized to p = 0.
std::vector<InvolutionSpec> classify_involutions(FiniteKind base);

/// sum_i s_i m_i for a root sum_i m_i alpha_i.
int ht_sigma(const InvolutionSpec& spec, const AffineRoot& root);

/// A connected component of the Dynkin graph on the grade-zero simple roots.
struct GradeZeroComponent {
  std::vector<int> nodes;
  FiniteKind type;
  std::vector<AffineRoot> positive_roots;
  AffineRoot highest_root;
  std::int64_t weyl_order = 1;
  std::int64_t connection_index = 1;
};

/// Everything derived from the grading attached to an involution.
struct GradedData {
  InvolutionSpec spec;
  std::shared_ptr<const AffineRootSystem> roots;
  std::vector<AffineRoot> delta0_pos;  ///< positive roots of grade 0
  std::vector<int> pi0;                ///< simple roots of grade 0
  std::vector<AffineRoot> delta1;      ///< positive real roots of grade 1
  /// Imaginary roots of grade 1: {delta} when k = 2, empty when k = 1. Their
  /// root spaces are the zero-weight part of g_1.
  std::vector<AffineRoot> delta1_imaginary;
  std::vector<GradeZeroComponent> components;
  std::vector<AffineRoot> phi_sigma;
  std::vector<int> epsilons;
  std::int64_t w_sigma_order = 1;
  std::int64_t ell_sigma = 1;

  [[nodiscard]] const AffineRootSystem& ars() const { return *roots; }
  /// Multiset of component types, sorted, e.g. {A1, C3}.
  [[nodiscard]] std::vector<FiniteKind> component_types() const;
};

GradedData graded_data(const InvolutionSpec& spec, int window);
inline GradedData graded_data(const InvolutionSpec& spec) {
  return graded_data(spec, default_window(spec.k));
}

/// "A1xC3"; empty product renders as "0".
std::string format_component_types(const std::vector<FiniteKind>& types);

}  // namespace zgrade
