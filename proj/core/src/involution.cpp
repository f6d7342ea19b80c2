#include "zgrade/involution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace zgrade {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::SemisimpleK1: return "semisimple-k1";
    case CaseTag::SemisimpleK2: return "semisimple-k2";
    case CaseTag::Hermitian: return "hermitian";
  }
  return "?";
}

std::string InvolutionSpec::key() const {
  std::string out = affine.name() + ":";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

namespace {

std::vector<int> labels_of(const IntMatrix& cartan) {
  std::vector<int> out;
  for (auto x : primitive_kernel_vector(cartan)) out.push_back(static_cast<int>(x));
  return out;
}

void extend_automorphisms(const IntMatrix& a, std::vector<int>& perm, std::vector<bool>& used,
                          std::vector<std::vector<int>>& out) {
  const std::size_t n = a.size();
  const std::size_t i = perm.size();
  if (i == n) {
    out.push_back(perm);
    return;
  }
  for (std::size_t img = 0; img < n; ++img) {
    if (used[img]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j)
      ok = a[img][perm[j]] == a[i][j] && a[perm[j]][img] == a[j][i];
    if (!ok) continue;
    used[img] = true;
    perm.push_back(static_cast<int>(img));
    extend_automorphisms(a, perm, used, out);
    perm.pop_back();
    used[img] = false;
  }
}

void solutions(const std::vector<int>& labels, int target, std::size_t i, std::vector<int>& s,
               std::vector<std::vector<int>>& out) {
  if (i == labels.size()) {
    if (target == 0) out.push_back(s);
    return;
  }
  for (int v = 0; v * labels[i] <= target; ++v) {
    s[i] = v;
    solutions(labels, target - v * labels[i], i + 1, s, out);
  }
  s[i] = 0;
}

std::vector<int> act(const std::vector<int>& perm, const std::vector<int>& s) {
  std::vector<int> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[perm[i]] = s[i];
  return out;
}

std::vector<int> support(const std::vector<int>& s) {
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

InvolutionSpec make_involution(AffineKind affine, std::vector<int> s) {
  const IntMatrix cartan = affine_cartan(affine);
  const auto labels = labels_of(cartan);
  if (s.size() != labels.size())
    throw InputError("Kac tuple for " + affine.name() + " needs " + std::to_string(labels.size()) + " entries");
  int weighted = 0, g = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) throw InputError("Kac tuple entries must be non-negative");
    weighted += labels[i] * s[i];
    g = std::gcd(g, s[i]);
  }
  const int k = affine.twist;
  if (k * weighted != 2) throw InputError("Kac tuple does not define an automorphism of order 2");
  if (g != 1) throw InputError("Kac tuple is not primitive");

  InvolutionSpec spec;
  spec.affine = affine;
  spec.k = k;
  spec.s = std::move(s);
  const auto supp = support(spec.s);
  if (k == 2) {
    spec.tag = CaseTag::SemisimpleK2;
    spec.p = supp.at(0);
  } else if (supp.size() == 1) {
    spec.tag = CaseTag::SemisimpleK1;
    spec.p = supp[0];
  } else {
    spec.tag = CaseTag::Hermitian;
    spec.p = supp[0];
    spec.q = supp[1];
  }
  spec.equivalent_indices = {spec.hermitian() ? *spec.q : spec.p};
  return spec;
}

std::vector<std::vector<int>> diagram_automorphisms(const IntMatrix& cartan) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm;
  std::vector<bool> used(cartan.size(), false);
  extend_automorphisms(cartan, perm, used, out);
  return out;
}

std::vector<InvolutionSpec> classify_involutions(FiniteKind base) {
  if (!base.valid()) throw InputError("invalid rank for family: " + base.name());
  std::vector<InvolutionSpec> out;
  for (int k : {1, 2}) {
    AffineKind affine{base, k};
    if (!affine.valid()) continue;
    const IntMatrix cartan = affine_cartan(affine);
    const auto labels = labels_of(cartan);
    const auto autos = diagram_automorphisms(cartan);

    std::vector<std::vector<int>> sols;
    std::vector<int> scratch(labels.size(), 0);
    if (2 % k == 0) solutions(labels, 2 / k, 0, scratch, sols);

    std::set<std::vector<int>> done;
    for (const auto& s : sols) {
      int g = 0;
      for (int v : s) g = std::gcd(g, v);
      if (g != 1 || done.count(s)) continue;
      std::set<std::vector<int>> orbit;
      for (const auto& perm : autos) orbit.insert(act(perm, s));
      done.insert(orbit.begin(), orbit.end());

      const auto sample = make_involution(affine, s);
      std::optional<InvolutionSpec> rep;
      std::set<int> indices;
      for (const auto& t : orbit) {
        auto cand = make_involution(affine, t);
        if (cand.hermitian() && cand.p != 0) continue;
        indices.insert(cand.hermitian() ? *cand.q : cand.p);
        if (!rep || cand.equivalent_indices[0] < rep->equivalent_indices[0]) rep = cand;
      }
      if (!rep) {
        // only reachable if a hermitian orbit avoids node 0
        throw InvariantViolation("no representative with p = 0 for " + sample.key());
      }
      rep->equivalent_indices.assign(indices.begin(), indices.end());
      out.push_back(std::move(*rep));
    }
  }
  std::sort(out.begin(), out.end(), [](const InvolutionSpec& a, const InvolutionSpec& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.hermitian() != b.hermitian()) return !a.hermitian();
    return a.equivalent_indices[0] < b.equivalent_indices[0];
  });
  return out;
}

int ht_sigma(const InvolutionSpec& spec, const AffineRoot& root) {
  int h = 0;
  for (std::size_t i = 0; i < spec.s.size(); ++i) h += spec.s[i] * root.coords[i];
  return h;
}

std::vector<FiniteKind> GradedData::component_types() const {
  std::vector<FiniteKind> out;
  for (const auto& c : components) out.push_back(c.type);
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_component_types(const std::vector<FiniteKind>& types) {
  if (types.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) out += "x";
    out += types[i].name();
  }
  return out;
}

GradedData graded_data(const InvolutionSpec& spec, int window) {
  GradedData gd;
  gd.spec = spec;
  gd.roots = std::make_shared<const AffineRootSystem>(build_affine(spec.affine, window));
  const auto& ars = *gd.roots;
  const int nodes = ars.n() + 1;
  if (static_cast<int>(spec.s.size()) != nodes) throw InputError("Kac tuple length mismatch");

  for (int i = 0; i < nodes; ++i)
    if (spec.s[i] == 0) gd.pi0.push_back(i);

  for (const auto& r : ars.positive_real_roots()) {
    const int h = ht_sigma(spec, r);
    if (h == 0) gd.delta0_pos.push_back(r);
    if (h == 1) gd.delta1.push_back(r);
  }

  std::set<AffineRoot> from_components;
  for (const auto& nodes_of : dynkin_components(ars.cartan(), gd.pi0)) {
    GradeZeroComponent comp;
    comp.nodes = nodes_of;
    const IntMatrix sub = principal_submatrix(ars.cartan(), nodes_of);
    comp.type = identify_type(sub);
    for (const auto& local : positive_roots_by_closure(sub)) {
      AffineRoot r{Coords(nodes, 0)};
      for (std::size_t j = 0; j < nodes_of.size(); ++j) r.coords[nodes_of[j]] = local[j];
      comp.positive_roots.push_back(r);
      from_components.insert(r);
    }
    comp.highest_root = comp.positive_roots.back();
    comp.weyl_order = weyl_group_order(comp.type);
    const auto det = determinant(sub);
    comp.connection_index = det < 0 ? -det : det;
    gd.w_sigma_order *= comp.weyl_order;
    gd.ell_sigma *= comp.connection_index;
    gd.components.push_back(std::move(comp));
  }
  if (from_components != std::set<AffineRoot>(gd.delta0_pos.begin(), gd.delta0_pos.end()))
    throw InvariantViolation("grade-zero roots disagree with the subsystem on the grade-zero simple roots for " +
                             spec.key());

  for (const auto& mu : gd.delta1) {
    if (mu.coords[0] * 2 > ars.level_bound())
      throw WindowError("grade-one root " + format_root(mu) + " too close to the window edge for " + spec.key());
  }

  const AffineRoot delta = ars.delta();
  if (ht_sigma(spec, delta) == 1) gd.delta1_imaginary.push_back(delta);
  for (int i = 0; i < nodes; ++i) {
    gd.epsilons.push_back(spec.k == 2 && ars.simple_is_long(i) ? 2 : 1);
    gd.phi_sigma.push_back(ars.simple_root(i) + scaled(delta, gd.epsilons[i] * spec.s[i]));
  }
  for (const auto& comp : gd.components) gd.phi_sigma.push_back(scaled(delta, spec.k) - comp.highest_root);
  for (const auto& wall : gd.phi_sigma) {
    if (ars.classify(wall) != RootClass::PositiveReal || ht_sigma(spec, wall) == 1)
      throw InvariantViolation("wall " + format_root(wall) + " is not a positive root of grade != 1 for " +
                               spec.key());
  }
  return gd;
}

}  // namespace zgrade
