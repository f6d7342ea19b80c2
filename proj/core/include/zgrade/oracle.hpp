#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zgrade/involution.hpp"

namespace zgrade {

/// A set S of grade-one roots; it stands for the span of the root spaces of -S.
struct WeightSubset {
  std::vector<AffineRoot> members;  ///< sorted

  auto operator<=>(const WeightSubset&) const = default;
};

WeightSubset make_weight_subset(std::vector<AffineRoot> members);

/// Result of the weight-level test. On failure `first`/`second` hold the
/// offending pair: (mu, beta) with mu - beta missing from S, or (mu, nu) whose
/// sum is a root.
struct StabilityVerdict {
  enum class Failure { None, NotStable, NotAbelian };
  Failure failure = Failure::None;
  std::optional<AffineRoot> first;
  std::optional<AffineRoot> second;

  explicit operator bool() const { return failure == Failure::None; }
};

/// S is stable under the grade-zero Borel (mu in S, beta in Delta_0^+,
/// mu - beta grade-one root => mu - beta in S) and abelian (no sum of two
/// distinct members is a root, real or imaginary). Throws InputError if S is
/// not contained in the grade-one roots.
StabilityVerdict is_abelian_stable(const GradedData& gd, const WeightSubset& subset);

struct OracleOptions {
  std::optional<std::uint64_t> shuffle_seed;
  /// Drop the abelian condition (stable subsets only).
  bool require_abelian = true;
  /// Abort with InvariantViolation beyond this many sets (0 = unlimited).
  std::size_t limit = 0;
};

/// Every abelian stable subset, grown one weight at a time from the empty set.
/// Sorted by size, then lexicographically by members.
std::vector<WeightSubset> enumerate_abelian_subalgebras(const GradedData& gd, const OracleOptions& options = {});

}  // namespace zgrade
