#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zgrade {

/// Malformed or unsupported input (bad type string, invalid rank, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A root computation left the generated window of affine roots.
class WindowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An internal mathematical invariant failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Type X_N of a finite-dimensional simple Lie algebra.
struct FiniteKind {
  Family family = Family::A;
  int rank = 1;

  auto operator<=>(const FiniteKind&) const = default;

  [[nodiscard]] std::string name() const;
  [[nodiscard]] bool valid() const;
};

/// Throws InputError when the family/rank pair is outside the classification.
FiniteKind make_finite_kind(Family family, int rank);

/// Parses strings like "A4", "e8", "G2".
FiniteKind parse_finite_kind(std::string_view text);

/// Affine diagram X_N^(k), k in {1, 2}.
struct AffineKind {
  FiniteKind base;
  int twist = 1;

  auto operator<=>(const AffineKind&) const = default;

  /// Number of nodes minus one, i.e. the n in alpha_0, ..., alpha_n.
  [[nodiscard]] int affine_rank() const;
  /// E.g. "A4^(2)".
  [[nodiscard]] std::string name() const;
  [[nodiscard]] bool valid() const;
};

AffineKind make_affine_kind(FiniteKind base, int twist);

/// Integer coordinates over a simple-root basis.
using Coords = std::vector<int>;

/// An affine root written over (alpha_0, ..., alpha_n).
struct AffineRoot {
  Coords coords;

  auto operator<=>(const AffineRoot&) const = default;

  [[nodiscard]] std::size_t size() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }

  [[nodiscard]] bool is_zero() const;
  /// All coordinates >= 0 and not all zero.
  [[nodiscard]] bool is_positive_vector() const;
  [[nodiscard]] bool is_negative_vector() const;

  AffineRoot operator-() const;
  AffineRoot operator+(const AffineRoot& other) const;
  AffineRoot operator-(const AffineRoot& other) const;
};

AffineRoot scaled(const AffineRoot& root, int factor);

/// "a0+2a1" style rendering, "0" for the zero vector.
std::string format_root(const AffineRoot& root);
/// Compact "[1,0,2]" rendering used in machine-readable output.
std::string format_coords(const Coords& coords);

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept;
  std::size_t operator()(const AffineRoot& r) const noexcept { return (*this)(r.coords); }
};

}  // namespace zgrade
