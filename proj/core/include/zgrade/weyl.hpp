#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zgrade/involution.hpp"
#include "zgrade/rootsys.hpp"

namespace zgrade {

/// An element w of the affine Weyl group, stored as the images
/// w(alpha_0), ..., w(alpha_n). The images are a faithful, canonical key.
struct AffineWeylElement {
  std::vector<AffineRoot> images;
  int length = 0;
  std::vector<AffineRoot> inversion_set;  ///< N(w), in the order the roots were added

  [[nodiscard]] bool same_element(const AffineWeylElement& other) const { return images == other.images; }
};

AffineWeylElement identity(const AffineRootSystem& ars);

/// w * s_i when w(alpha_i) is positive (length grows by one and N(w) gains
/// w(alpha_i)); std::nullopt otherwise. Throws WindowError if the new
/// inversion root leaves the window.
std::optional<AffineWeylElement> extend_by_simple(const AffineRootSystem& ars, const AffineWeylElement& w, int i);

/// w(v), extended linearly from the images.
AffineRoot act(const AffineWeylElement& w, const AffineRoot& v);

struct MinusculeSearchOptions {
  /// When set, generators are tried in a pseudo-random order per expansion.
  std::optional<std::uint64_t> shuffle_seed;
};

/// All sigma-minuscule elements (N(w) inside the grade-one roots), found by
/// breadth-first search from the identity. Sorted canonically by length, then
/// by the sorted inversion set.
std::vector<AffineWeylElement> enumerate_sigma_minuscule(const GradedData& gd,
                                                         const MinusculeSearchOptions& options = {});

/// N(w) sorted lexicographically; the form compared against weight subsets.
std::vector<AffineRoot> sorted_inversion_set(const AffineWeylElement& w);

}  // namespace zgrade
