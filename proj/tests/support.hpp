#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zgrade/census.hpp"
#include "zgrade/involution.hpp"

namespace zgrade::testing {

inline AffineKind affine(const std::string& name) {
  // "A4^(2)"
  const auto caret = name.find('^');
  return make_affine_kind(parse_finite_kind(name.substr(0, caret)), name[caret + 2] - '0');
}

inline AffineRoot root(std::vector<int> coords) { return AffineRoot{std::move(coords)}; }

/// The class of `base` with twist k whose p (or q when hermitian) orbit contains `index`.
inline InvolutionSpec find_class(const std::string& base, int k, bool hermitian, int index) {
  for (auto& spec : classify_involutions(parse_finite_kind(base))) {
    if (spec.k != k || spec.hermitian() != hermitian) continue;
    for (int i : spec.equivalent_indices)
      if (i == index) return spec;
  }
  throw std::runtime_error("no class " + base + " k=" + std::to_string(k) + " index " + std::to_string(index));
}

inline std::set<std::vector<AffineRoot>> as_set_family(const std::vector<WeightSubset>& subsets) {
  std::set<std::vector<AffineRoot>> out;
  for (const auto& s : subsets) out.insert(s.members);
  return out;
}

inline std::set<std::vector<AffineRoot>> as_set_family(const std::vector<AffineWeylElement>& elements) {
  std::set<std::vector<AffineRoot>> out;
  for (const auto& w : elements) out.insert(sorted_inversion_set(w));
  return out;
}

}  // namespace zgrade::testing
