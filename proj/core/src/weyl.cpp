#include "zgrade/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace zgrade {

AffineWeylElement identity(const AffineRootSystem& ars) {
  AffineWeylElement w;
  for (int i = 0; i <= ars.n(); ++i) w.images.push_back(ars.simple_root(i));
  return w;
}

AffineRoot act(const AffineWeylElement& w, const AffineRoot& v) {
  AffineRoot out{Coords(w.images.size(), 0)};
  for (std::size_t j = 0; j < w.images.size(); ++j) {
    if (v.coords[j] == 0) continue;
    for (std::size_t c = 0; c < out.coords.size(); ++c) out.coords[c] += v.coords[j] * w.images[j].coords[c];
  }
  return out;
}

std::optional<AffineWeylElement> extend_by_simple(const AffineRootSystem& ars, const AffineWeylElement& w, int i) {
  const AffineRoot& image = w.images[i];
  if (!image.is_positive_vector()) return std::nullopt;
  if (!ars.in_window(image))
    throw WindowError("inversion root " + format_root(image) + " leaves the window of " + ars.kind().name());
  AffineWeylElement next;
  next.images.reserve(w.images.size());
  // (w s_i)(alpha_j) = w(alpha_j) - a_ij w(alpha_i)
  for (std::size_t j = 0; j < w.images.size(); ++j) {
    const auto aij = static_cast<int>(ars.cartan()[i][j]);
    next.images.push_back(aij == 0 ? w.images[j] : w.images[j] - scaled(image, aij));
  }
  next.length = w.length + 1;
  next.inversion_set = w.inversion_set;
  next.inversion_set.push_back(image);
  return next;
}

std::vector<AffineRoot> sorted_inversion_set(const AffineWeylElement& w) {
  auto out = w.inversion_set;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineWeylElement> enumerate_sigma_minuscule(const GradedData& gd, const MinusculeSearchOptions& options) {
  const auto& ars = gd.ars();
  const int nodes = ars.n() + 1;
  const auto cap = static_cast<int>(gd.delta1.size());
  std::vector<int> order(nodes);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));

  std::set<std::vector<AffineRoot>> seen;
  std::vector<AffineWeylElement> all;
  std::vector<AffineWeylElement> frontier{identity(ars)};
  seen.insert(frontier.front().images);
  while (!frontier.empty()) {
    if (options.shuffle_seed) std::shuffle(frontier.begin(), frontier.end(), rng);
    std::vector<AffineWeylElement> next_frontier;
    for (const auto& w : frontier) {
      if (options.shuffle_seed) std::shuffle(order.begin(), order.end(), rng);
      for (int i : order) {
        const AffineRoot& image = w.images[i];
        if (!image.is_positive_vector() || ht_sigma(gd.spec, image) != 1) continue;
        auto next = extend_by_simple(ars, w, i);
        if (!next) continue;
        if (next->length > cap)
          throw InvariantViolation("sigma-minuscule search exceeded length " + std::to_string(cap) + " for " +
                                   gd.spec.key());
        if (!seen.insert(next->images).second) continue;
        next_frontier.push_back(std::move(*next));
      }
    }
    for (auto& w : frontier) {
      if (static_cast<int>(w.inversion_set.size()) != w.length)
        throw InvariantViolation("|N(w)| differs from the length");
      all.push_back(std::move(w));
    }
    frontier = std::move(next_frontier);
  }
  std::sort(all.begin(), all.end(), [](const AffineWeylElement& a, const AffineWeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return sorted_inversion_set(a) < sorted_inversion_set(b);
  });
  return all;
}

}  // namespace zgrade
