#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "zgrade/linalg.hpp"
#include "zgrade/types.hpp"

namespace zgrade {

/// A finite (crystallographic) root system in simple-root coordinates.
struct FiniteRootSystem {
  FiniteKind kind;
  IntMatrix cartan;                         ///< a_ij = <alpha_i^vee, alpha_j>
  std::vector<Rational> sq_lengths;         ///< |alpha_i|^2, max normalized to 2
  std::vector<Coords> positive_roots;       ///< sorted by height, then lexicographically
  Coords highest_root;
  std::int64_t weyl_order = 1;
  std::int64_t connection_index = 1;
  int long_simple_count = 0;
  std::vector<std::vector<Rational>> fundamental_coweights;  ///< over the simple roots

  [[nodiscard]] int rank() const { return static_cast<int>(cartan.size()); }
};

/// Standard root system of the given type; node numbering follows the
/// affine diagram X_N^(1) with node 0 removed.
FiniteRootSystem build_finite(FiniteKind kind);

/// Root system from an (indecomposable) Cartan matrix and the squared lengths
/// of its simple roots. `long_reference` fixes which squared length counts as
/// long; by default the largest simple one.
FiniteRootSystem finite_from_cartan(const IntMatrix& cartan, const std::vector<Rational>& sq_lengths,
                                    std::optional<Rational> long_reference = std::nullopt);

/// Dynkin type of a connected Cartan matrix (rank-2 double bond is B2;
/// A3 is reported for D3, A1 for B1/C1).
FiniteKind identify_type(const IntMatrix& cartan);

/// |W| from the closed per-type formulas.
std::int64_t weyl_group_order(FiniteKind kind);

/// |W| by explicit breadth-first generation of all group elements; only meant
/// for small ranks (it materializes the group).
std::int64_t weyl_order_by_generation(const IntMatrix& cartan);

/// Positive roots generated from the simple roots by reflections.
std::vector<Coords> positive_roots_by_closure(const IntMatrix& cartan);

/// Connected components of the Dynkin graph restricted to `nodes`.
std::vector<std::vector<int>> dynkin_components(const IntMatrix& cartan, const std::vector<int>& nodes);

enum class RootClass { PositiveReal, NegativeReal, Imaginary, NotARoot };

/// Affine root system of type X_N^(k) realized over (alpha_0, ..., alpha_n),
/// together with every real root whose delta-coefficient has absolute value
/// at most the window bound. Immutable after construction.
class AffineRootSystem {
 public:
  AffineRootSystem(AffineKind kind, int window);

  [[nodiscard]] const AffineKind& kind() const { return kind_; }
  [[nodiscard]] int n() const { return static_cast<int>(cartan_.size()) - 1; }
  [[nodiscard]] int twist() const { return kind_.twist; }
  [[nodiscard]] const IntMatrix& cartan() const { return cartan_; }
  [[nodiscard]] const std::vector<int>& labels() const { return labels_; }
  [[nodiscard]] AffineRoot delta() const { return AffineRoot{labels_}; }
  [[nodiscard]] AffineRoot simple_root(int i) const;
  [[nodiscard]] int window() const { return window_; }
  /// Largest |alpha_0-coefficient| admitted in the window (window * a_0).
  [[nodiscard]] int level_bound() const { return window_ * labels_[0]; }

  /// Squared lengths of the simple roots, normalized so the longest is 2.
  [[nodiscard]] const std::vector<Rational>& simple_sq_lengths() const { return simple_sq_; }
  [[nodiscard]] Rational max_real_sq() const { return Rational(2); }
  /// Number of distinct squared lengths among real roots.
  [[nodiscard]] int length_count() const;

  /// Invariant form (u, v) and |v|^2.
  [[nodiscard]] Rational form(const AffineRoot& u, const AffineRoot& v) const;
  [[nodiscard]] Rational sq_length(const AffineRoot& v) const { return form(v, v); }
  [[nodiscard]] bool is_long(const AffineRoot& real_root) const { return sq_length(real_root) == max_real_sq(); }
  [[nodiscard]] bool simple_is_long(int i) const { return simple_sq_[i] == max_real_sq(); }

  /// <v, alpha_i^vee>.
  [[nodiscard]] int pairing(const AffineRoot& v, int i) const;
  /// s_i(v) = v - <v, alpha_i^vee> alpha_i.
  [[nodiscard]] AffineRoot reflect(const AffineRoot& v, int i) const;

  /// delta-coefficient of v is alpha_0-coefficient / a_0; this returns the numerator.
  [[nodiscard]] int level(const AffineRoot& v) const { return v.coords[0]; }
  [[nodiscard]] bool in_window(const AffineRoot& v) const;

  /// Throws WindowError when v lies outside the window.
  [[nodiscard]] RootClass classify(const AffineRoot& v) const;
  [[nodiscard]] bool is_root(const AffineRoot& v) const {
    return classify(v) != RootClass::NotARoot;
  }
  [[nodiscard]] bool is_real_root(const AffineRoot& v) const {
    auto c = classify(v);
    return c == RootClass::PositiveReal || c == RootClass::NegativeReal;
  }
  /// Non-zero integer multiple of delta.
  [[nodiscard]] bool is_imaginary(const AffineRoot& v) const;

  /// Positive real roots of the window, sorted by height then lexicographically.
  [[nodiscard]] const std::vector<AffineRoot>& positive_real_roots() const { return positive_real_; }

  /// Finite system spanned by alpha_1, ..., alpha_n with the affine form's lengths.
  [[nodiscard]] FiniteRootSystem finite_part() const;

 private:
  AffineKind kind_;
  int window_;
  IntMatrix cartan_;
  std::vector<int> labels_;
  std::vector<Rational> simple_sq_;
  RatMatrix gram_;
  std::vector<AffineRoot> positive_real_;
  std::unordered_set<Coords, CoordsHash> positive_set_;
};

/// Generalized Cartan matrix of X_N^(k) in Kac's node numbering.
IntMatrix affine_cartan(AffineKind kind);

/// Default window bound 3k.
inline int default_window(int twist) { return 3 * twist; }

AffineRootSystem build_affine(AffineKind kind, int window);
inline AffineRootSystem build_affine(AffineKind kind) { return build_affine(kind, default_window(kind.twist)); }

}  // namespace zgrade
