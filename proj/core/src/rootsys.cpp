#include "zgrade/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace zgrade {

namespace {

struct Bond {
  int i, j;
  int aij, aji;
};

IntMatrix from_bonds(int nodes, const std::vector<Bond>& bonds) {
  IntMatrix a(nodes, std::vector<std::int64_t>(nodes, 0));
  for (int i = 0; i < nodes; ++i) a[i][i] = 2;
  for (const auto& b : bonds) {
    a[b.i][b.j] = b.aij;
    a[b.j][b.i] = b.aji;
  }
  return a;
}

void chain(std::vector<Bond>& bonds, int from, int to) {
  for (int i = from; i < to; ++i) bonds.push_back({i, i + 1, -1, -1});
}

int height(const Coords& c) { return std::accumulate(c.begin(), c.end(), 0); }

bool height_then_lex(const Coords& a, const Coords& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

// |alpha_i|^2 up to a common factor per connected component, largest = 2.
std::vector<Rational> sq_lengths_from_cartan(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> eps(n, Rational(0));
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> comp{root};
    seen[root] = true;
    eps[root] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      int i = comp[k];
      for (int j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0 || seen[j]) continue;
        // eps_i a_ij = eps_j a_ji
        eps[j] = eps[i] * Rational(a[i][j], a[j][i]);
        seen[j] = true;
        comp.push_back(j);
      }
    }
    Rational mx = 0;
    for (int i : comp) mx = std::max(mx, eps[i]);
    for (int i : comp) eps[i] = eps[i] * 2 / mx;
  }
  return eps;
}

}  // namespace

IntMatrix affine_cartan(AffineKind kind) {
  if (!kind.valid()) throw InputError("unsupported affine diagram " + kind.name());
  const int N = kind.base.rank;
  std::vector<Bond> b;
  if (kind.twist == 1) {
    switch (kind.base.family) {
      case Family::A:
        if (N == 1) {
          b.push_back({0, 1, -2, -2});
        } else {
          chain(b, 0, N);
          b.push_back({N, 0, -1, -1});
        }
        return from_bonds(N + 1, b);
      case Family::B:
        if (N == 2) {
          b.push_back({0, 2, -1, -2});
          b.push_back({1, 2, -1, -2});
        } else {
          b.push_back({0, 2, -1, -1});
          b.push_back({1, 2, -1, -1});
          chain(b, 2, N - 1);
          b.push_back({N - 1, N, -1, -2});
        }
        return from_bonds(N + 1, b);
      case Family::C:
        b.push_back({0, 1, -1, -2});
        chain(b, 1, N - 1);
        b.push_back({N - 1, N, -2, -1});
        return from_bonds(N + 1, b);
      case Family::D:
        b.push_back({0, 2, -1, -1});
        b.push_back({1, 2, -1, -1});
        chain(b, 2, N - 1);
        b.push_back({N - 2, N, -1, -1});
        return from_bonds(N + 1, b);
      case Family::E:
        if (N == 6) {
          chain(b, 1, 5);
          b.push_back({3, 6, -1, -1});
          b.push_back({6, 0, -1, -1});
        } else if (N == 7) {
          chain(b, 0, 6);
          b.push_back({3, 7, -1, -1});
        } else {
          chain(b, 0, 7);
          b.push_back({5, 8, -1, -1});
        }
        return from_bonds(N + 1, b);
      case Family::F:
        b.push_back({0, 1, -1, -1});
        b.push_back({1, 2, -1, -1});
        b.push_back({2, 3, -1, -2});
        b.push_back({3, 4, -1, -1});
        return from_bonds(5, b);
      case Family::G:
        b.push_back({0, 1, -1, -1});
        b.push_back({1, 2, -1, -3});
        return from_bonds(3, b);
    }
  }
  const int n = kind.affine_rank();
  switch (kind.base.family) {
    case Family::A:
      if (N % 2 == 0) {  // A_{2n}^(2)
        if (n == 1) {
          b.push_back({0, 1, -4, -1});
        } else {
          b.push_back({0, 1, -2, -1});
          chain(b, 1, n - 1);
          b.push_back({n - 1, n, -2, -1});
        }
      } else {  // A_{2n-1}^(2)
        if (n == 2) {
          b.push_back({0, 2, -2, -1});
          b.push_back({1, 2, -2, -1});
        } else {
          b.push_back({0, 2, -1, -1});
          b.push_back({1, 2, -1, -1});
          chain(b, 2, n - 1);
          b.push_back({n - 1, n, -2, -1});
        }
      }
      return from_bonds(n + 1, b);
    case Family::D:  // D_{n+1}^(2)
      b.push_back({0, 1, -2, -1});
      chain(b, 1, n - 1);
      b.push_back({n - 1, n, -1, -2});
      return from_bonds(n + 1, b);
    case Family::E:  // E_6^(2)
      b.push_back({0, 1, -1, -1});
      b.push_back({1, 2, -1, -1});
      b.push_back({2, 3, -2, -1});
      b.push_back({3, 4, -1, -1});
      return from_bonds(5, b);
    default:
      break;
  }
  throw InputError("unsupported affine diagram " + kind.name());
}

std::vector<Coords> positive_roots_by_closure(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::set<Coords> seen;
  std::deque<Coords> queue;
  for (int i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coords beta = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      std::int64_t p = 0;
      for (int j = 0; j < n; ++j) p += a[i][j] * beta[j];
      if (p >= 0) continue;
      Coords next = beta;
      next[i] -= static_cast<int>(p);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Coords> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), height_then_lex);
  return out;
}

std::vector<std::vector<int>> dynkin_components(const IntMatrix& a, const std::vector<int>& nodes) {
  std::vector<std::vector<int>> out;
  std::set<int> remaining(nodes.begin(), nodes.end());
  while (!remaining.empty()) {
    std::vector<int> comp{*remaining.begin()};
    remaining.erase(remaining.begin());
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (a[comp[k]][*it] != 0) {
          comp.push_back(*it);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteKind identify_type(const IntMatrix& cartan) {
  const int r = static_cast<int>(cartan.size());
  std::vector<int> all(r);
  std::iota(all.begin(), all.end(), 0);
  if (r == 0 || dynkin_components(cartan, all).size() != 1)
    throw InputError("identify_type needs a connected Dynkin diagram");
  const auto npos = static_cast<int>(positive_roots_by_closure(cartan).size());
  const auto sq = sq_lengths_from_cartan(cartan);
  const int long_count = static_cast<int>(std::count(sq.begin(), sq.end(), Rational(2)));
  const bool one_length = long_count == r;
  if (r == 1) return {Family::A, 1};
  if (one_length) {
    if (npos == r * (r + 1) / 2) return {Family::A, r};
    if (npos == r * (r - 1)) return {Family::D, r};
    if (r == 6 && npos == 36) return {Family::E, 6};
    if (r == 7 && npos == 63) return {Family::E, 7};
    if (r == 8 && npos == 120) return {Family::E, 8};
  } else {
    if (r == 2 && npos == 4) return {Family::B, 2};
    if (r == 2 && npos == 6) return {Family::G, 2};
    if (r == 4 && npos == 24) return {Family::F, 4};
    if (npos == r * r) return long_count == 1 ? FiniteKind{Family::C, r} : FiniteKind{Family::B, r};
  }
  throw InvariantViolation("Cartan matrix of unrecognized finite type");
}

std::int64_t weyl_group_order(FiniteKind kind) {
  auto factorial = [](int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const int n = kind.rank;
  switch (kind.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::int64_t{1} << n) * factorial(n);
    case Family::D: return (std::int64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::int64_t weyl_order_by_generation(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  using Element = std::vector<Coords>;  // images of the simple roots
  Element id(n, Coords(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::set<Element> seen{id};
  std::deque<Element> queue{id};
  while (!queue.empty()) {
    Element w = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Element next = w;
      for (int j = 0; j < n; ++j)
        for (int c = 0; c < n; ++c) next[j][c] = w[j][c] - static_cast<int>(a[i][j]) * w[i][c];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return static_cast<std::int64_t>(seen.size());
}

FiniteRootSystem finite_from_cartan(const IntMatrix& cartan, const std::vector<Rational>& sq_lengths,
                                    std::optional<Rational> long_reference) {
  FiniteRootSystem frs;
  frs.cartan = cartan;
  frs.kind = identify_type(cartan);
  frs.sq_lengths = sq_lengths;
  frs.positive_roots = positive_roots_by_closure(cartan);
  frs.highest_root = frs.positive_roots.back();
  if (frs.positive_roots.size() > 1 &&
      height(frs.positive_roots[frs.positive_roots.size() - 2]) == height(frs.highest_root))
    throw InvariantViolation("highest root is not unique");
  frs.weyl_order = weyl_group_order(frs.kind);
  const std::int64_t det = determinant(cartan);
  frs.connection_index = det < 0 ? -det : det;
  const Rational ref = long_reference ? *long_reference : *std::max_element(sq_lengths.begin(), sq_lengths.end());
  frs.long_simple_count = static_cast<int>(std::count(sq_lengths.begin(), sq_lengths.end(), ref));

  const int n = frs.rank();
  RatMatrix gram(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = Rational(cartan[i][j]) * sq_lengths[i] / 2;
  frs.fundamental_coweights = inverse(gram);
  return frs;
}

FiniteRootSystem build_finite(FiniteKind kind) {
  if (!kind.valid()) throw InputError("invalid rank for family: " + kind.name());
  IntMatrix aff = affine_cartan({kind, 1});
  std::vector<int> idx(kind.rank);
  std::iota(idx.begin(), idx.end(), 1);
  IntMatrix cartan = principal_submatrix(aff, idx);
  auto frs = finite_from_cartan(cartan, sq_lengths_from_cartan(cartan));
  if (frs.kind != kind && !(kind.family == Family::C && kind.rank == 2))
    throw InvariantViolation("finite type mismatch for " + kind.name());
  frs.kind = kind;
  return frs;
}

AffineRootSystem::AffineRootSystem(AffineKind kind, int window) : kind_(kind), window_(window) {
  if (!kind.valid()) throw InputError("unsupported affine diagram " + kind.name());
  if (window < 1) throw InputError("window bound must be positive");
  cartan_ = affine_cartan(kind);
  const int nodes = static_cast<int>(cartan_.size());
  auto kernel = primitive_kernel_vector(cartan_);
  for (auto x : kernel) {
    if (x <= 0) throw InvariantViolation("affine labels are not positive for " + kind.name());
    labels_.push_back(static_cast<int>(x));
  }
  simple_sq_ = sq_lengths_from_cartan(cartan_);
  gram_.assign(nodes, std::vector<Rational>(nodes));
  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j) gram_[i][j] = Rational(cartan_[i][j]) * simple_sq_[i] / 2;
  for (int i = 0; i < nodes; ++i)
    for (int j = 0; j < nodes; ++j)
      if (gram_[i][j] != gram_[j][i]) throw InvariantViolation("symmetrizer failed for " + kind.name());

  // Increasing-height closure: every positive real root is reached from a simple root
  // through roots of non-decreasing alpha_0-coefficient, so the level cut is exact.
  std::deque<AffineRoot> queue;
  for (int i = 0; i < nodes; ++i) {
    AffineRoot e = simple_root(i);
    positive_set_.insert(e.coords);
    queue.push_back(e);
  }
  const int bound = level_bound();
  while (!queue.empty()) {
    AffineRoot beta = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < nodes; ++i) {
      const int p = pairing(beta, i);
      if (p >= 0) continue;
      AffineRoot next = beta;
      next.coords[i] -= p;
      if (next.coords[0] > bound) continue;
      if (positive_set_.insert(next.coords).second) queue.push_back(std::move(next));
    }
  }
  for (const auto& c : positive_set_) positive_real_.push_back(AffineRoot{c});
  std::sort(positive_real_.begin(), positive_real_.end(),
            [](const AffineRoot& x, const AffineRoot& y) { return height_then_lex(x.coords, y.coords); });
}

AffineRoot AffineRootSystem::simple_root(int i) const {
  AffineRoot e{Coords(cartan_.size(), 0)};
  e.coords[i] = 1;
  return e;
}

int AffineRootSystem::length_count() const {
  std::set<Rational> lengths;
  for (const auto& r : positive_real_) lengths.insert(sq_length(r));
  return static_cast<int>(lengths.size());
}

Rational AffineRootSystem::form(const AffineRoot& u, const AffineRoot& v) const {
  Rational s = 0;
  const std::size_t n = cartan_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (u.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v.coords[j] == 0) continue;
      s += gram_[i][j] * (static_cast<std::int64_t>(u.coords[i]) * v.coords[j]);
    }
  }
  return s;
}

int AffineRootSystem::pairing(const AffineRoot& v, int i) const {
  std::int64_t p = 0;
  for (std::size_t j = 0; j < cartan_.size(); ++j) p += cartan_[i][j] * v.coords[j];
  return static_cast<int>(p);
}

AffineRoot AffineRootSystem::reflect(const AffineRoot& v, int i) const {
  AffineRoot out = v;
  out.coords[i] -= pairing(v, i);
  return out;
}

bool AffineRootSystem::in_window(const AffineRoot& v) const {
  const int c0 = v.coords[0];
  return c0 <= level_bound() && c0 >= -level_bound();
}

bool AffineRootSystem::is_imaginary(const AffineRoot& v) const {
  if (v.is_zero() || v.coords[0] % labels_[0] != 0) return false;
  const int m = v.coords[0] / labels_[0];
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (v.coords[i] != m * labels_[i]) return false;
  return true;
}

RootClass AffineRootSystem::classify(const AffineRoot& v) const {
  if (v.size() != cartan_.size()) throw InputError("root vector has wrong length");
  if (!in_window(v))
    throw WindowError("vector " + format_root(v) + " lies outside the root window of " + kind_.name());
  if (is_imaginary(v)) return RootClass::Imaginary;
  if (v.is_positive_vector()) return positive_set_.count(v.coords) ? RootClass::PositiveReal : RootClass::NotARoot;
  if (v.is_negative_vector())
    return positive_set_.count((-v).coords) ? RootClass::NegativeReal : RootClass::NotARoot;
  return RootClass::NotARoot;
}

FiniteRootSystem AffineRootSystem::finite_part() const {
  std::vector<int> idx(n());
  std::iota(idx.begin(), idx.end(), 1);
  std::vector<Rational> sq(simple_sq_.begin() + 1, simple_sq_.end());
  return finite_from_cartan(principal_submatrix(cartan_, idx), sq, max_real_sq());
}

AffineRootSystem build_affine(AffineKind kind, int window) {
  if (window < 3 * kind.twist) throw InputError("window bound must be at least 3k");
  return AffineRootSystem(kind, window);
}

}  // namespace zgrade
