#include "zgrade/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace zgrade {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

// Grade-one weights with their one-step lower neighbours and pairwise conflicts.
// The imaginary grade-one root takes part: a real weight can reach lower real
// weights only through the zero-weight part of g_1.
std::vector<AffineRoot> grade_one_weights(const GradedData& gd) {
  auto out = gd.delta1;
  out.insert(out.end(), gd.delta1_imaginary.begin(), gd.delta1_imaginary.end());
  return out;
}

struct WeightPoset {
  std::vector<AffineRoot> weights;
  std::map<AffineRoot, std::size_t> index;
  std::vector<std::vector<std::size_t>> lower;
  std::vector<Bits> conflicts;

  explicit WeightPoset(const GradedData& gd) : weights(grade_one_weights(gd)) {
    const auto& ars = gd.ars();
    const std::size_t m = weights.size();
    const std::size_t words = (m + 63) / 64;
    for (std::size_t i = 0; i < m; ++i) index.emplace(weights[i], i);
    lower.resize(m);
    conflicts.assign(m, Bits(words, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& beta : gd.delta0_pos) {
        auto it = index.find(weights[i] - beta);
        if (it != index.end()) lower[i].push_back(it->second);
      }
      for (std::size_t j = i + 1; j < m; ++j) {
        if (ars.is_root(weights[i] + weights[j])) {
          set(conflicts[i], j);
          set(conflicts[j], i);
        }
      }
    }
  }
};

}  // namespace

WeightSubset make_weight_subset(std::vector<AffineRoot> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return WeightSubset{std::move(members)};
}

StabilityVerdict is_abelian_stable(const GradedData& gd, const WeightSubset& subset) {
  const auto all = grade_one_weights(gd);
  std::set<AffineRoot> grade_one(all.begin(), all.end());
  std::set<AffineRoot> members(subset.members.begin(), subset.members.end());
  for (const auto& mu : members)
    if (!grade_one.count(mu)) throw InputError("weight " + format_root(mu) + " is not a grade-one root");

  StabilityVerdict verdict;
  for (const auto& mu : members) {
    for (const auto& beta : gd.delta0_pos) {
      AffineRoot lowered = mu - beta;
      if (grade_one.count(lowered) && !members.count(lowered)) {
        verdict.failure = StabilityVerdict::Failure::NotStable;
        verdict.first = mu;
        verdict.second = beta;
        return verdict;
      }
    }
  }
  for (auto a = members.begin(); a != members.end(); ++a) {
    for (auto b = std::next(a); b != members.end(); ++b) {
      if (gd.ars().is_root(*a + *b)) {
        verdict.failure = StabilityVerdict::Failure::NotAbelian;
        verdict.first = *a;
        verdict.second = *b;
        return verdict;
      }
    }
  }
  return verdict;
}

std::vector<WeightSubset> enumerate_abelian_subalgebras(const GradedData& gd, const OracleOptions& options) {
  const WeightPoset poset(gd);
  const std::size_t m = poset.weights.size();
  const std::size_t words = (m + 63) / 64;
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;

  std::vector<Bits> found;
  std::vector<Bits> level{Bits(words, 0)};
  while (!level.empty()) {
    found.insert(found.end(), level.begin(), level.end());
    if (options.limit && found.size() > options.limit)
      throw InvariantViolation("weight-subset search exceeded its limit for " + gd.spec.key());
    if (options.shuffle_seed) std::shuffle(level.begin(), level.end(), rng);
    std::set<Bits> next;
    for (const auto& current : level) {
      if (options.shuffle_seed) std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t mu : order) {
        if (test(current, mu)) continue;
        const auto& below = poset.lower[mu];
        if (!std::all_of(below.begin(), below.end(), [&](std::size_t j) { return test(current, j); })) continue;
        if (options.require_abelian) {
          bool clash = false;
          for (std::size_t w = 0; w < words && !clash; ++w) clash = (poset.conflicts[mu][w] & current[w]) != 0;
          if (clash) continue;
        }
        Bits grown = current;
        set(grown, mu);
        next.insert(std::move(grown));
      }
    }
    level.assign(next.begin(), next.end());
  }

  std::vector<WeightSubset> out;
  out.reserve(found.size());
  for (const auto& bits : found) {
    std::vector<AffineRoot> members;
    for (std::size_t i = 0; i < m; ++i)
      if (test(bits, i)) members.push_back(poset.weights[i]);
    out.push_back(make_weight_subset(std::move(members)));
  }
  std::sort(out.begin(), out.end(), [](const WeightSubset& a, const WeightSubset& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace zgrade
