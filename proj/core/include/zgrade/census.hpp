#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zgrade/involution.hpp"
#include "zgrade/oracle.hpp"
#include "zgrade/rootsys.hpp"
#include "zgrade/weyl.hpp"

namespace zgrade {

/// Translation lattices of the affine Weyl group and of the grade-zero
/// affine subgroup, as row bases over the simple coroots of the finite part.
struct CorootLattices {
  IntMatrix coroot;   ///< Q^vee (identity)
  IntMatrix m;        ///< span of the W_f-orbit of theta^vee
  IntMatrix m_sigma;  ///< span of k * (grade-zero simple roots moved to the finite part)^vee
  std::int64_t index_m_msigma = 1;
  std::int64_t index_coroot_msigma = 1;
};

/// Semisimple gradings only; throws InputError for hermitian ones.
CorootLattices coroot_lattices(const GradedData& gd);

/// Index of the lattice spanned by the rows of `sub` in the one spanned by the
/// rows of `super`. Checks containment and that |det| ratio agrees with the
/// product of the Smith elementary divisors. Throws InputError when singular.
std::int64_t lattice_index(const IntMatrix& super, const IntMatrix& sub);
inline std::int64_t lattice_index(const CorootLattices& lat) { return lattice_index(lat.m, lat.m_sigma); }

/// Reduced row basis of the lattice generated by integer vectors (full rank assumed).
IntMatrix lattice_basis(const IntMatrix& generators);

/// Walls of the alcove region D_sigma (Phi_sigma) and of P_sigma.
struct PolytopeDescription {
  std::vector<AffineRoot> d_sigma_walls;
  std::vector<AffineRoot> p_sigma_walls;
  bool correction = false;  ///< alpha_p long; D_sigma = P_sigma iff false
};

PolytopeDescription polytope_description(const GradedData& gd);

struct FormulaIngredients {
  int a0 = 1;
  int k = 1;
  int n = 0;
  int long_simple = 0;  ///< L
  int chi_long = 0;     ///< 1 if alpha_p is long
  std::int64_t w_f = 1;
  std::int64_t w_sigma = 1;
  std::int64_t ell_f = 1;
  std::int64_t ell_sigma = 1;
  std::optional<std::int64_t> index_m_msigma;  ///< semisimple only
};

struct CountReport {
  InvolutionSpec spec;
  FiniteKind delta_f;
  std::vector<FiniteKind> g0;
  bool g0_has_center = false;
  std::int64_t count_formula = 0;
  std::optional<std::int64_t> count_minuscule;
  std::optional<std::int64_t> count_oracle;
  FormulaIngredients ingredients;
  std::optional<bool> bijection;  ///< family-level equality, when the oracle ran
  bool agree = false;

  [[nodiscard]] std::string g0_label() const;
};

/// Closed-form count (formula fields only; agree left false).
CountReport closed_form_count(const GradedData& gd, const FiniteRootSystem& finite);

struct ReportOptions {
  bool minuscule = true;
  bool oracle = true;
  int oracle_max_rank = 6;
  int window = 0;  ///< 0 = default 3k
};

/// Runs the requested methods and cross-checks them.
CountReport build_report(const InvolutionSpec& spec, const ReportOptions& options = {});

/// Family-level comparison of inversion sets and weight subsets.
bool same_family(const std::vector<AffineWeylElement>& elements, const std::vector<WeightSubset>& subsets);

}  // namespace zgrade
