#include "zgrade/census.hpp"

#include <algorithm>
#include <set>

namespace zgrade {

namespace {

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

// x^vee = 2x/(x,x) over the simple coroots: coefficient i is x_i |alpha_i|^2 / |x|^2.
std::vector<Rational> coroot_of(const std::vector<Rational>& x, const FiniteRootSystem& f) {
  const int n = f.rank();
  Rational sq = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sq += x[i] * x[j] * Rational(f.cartan[i][j]) * f.sq_lengths[i] / 2;
  if (sq <= 0) throw InvariantViolation("coroot of a non-positive-length vector");
  std::vector<Rational> out(n);
  for (int i = 0; i < n; ++i) out[i] = x[i] * f.sq_lengths[i] / sq;
  return out;
}

std::vector<std::int64_t> require_integral(const std::vector<Rational>& v, const char* what) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (x.denominator() != 1) throw InvariantViolation(std::string(what) + " is not integral");
    out.push_back(x.numerator());
  }
  return out;
}

IntMatrix identity_matrix(int n) {
  IntMatrix id(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// Rows of `sub` written over the row basis `super`.
RatMatrix coordinates_in(const IntMatrix& super, const IntMatrix& sub) {
  const RatMatrix inv = inverse(to_rational(super));
  const std::size_t n = super.size();
  RatMatrix out(sub.size(), std::vector<Rational>(n, Rational(0)));
  for (std::size_t r = 0; r < sub.size(); ++r)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c) out[r][j] += Rational(sub[r][c]) * inv[c][j];
  return out;
}

// Finite-part image of alpha_j: alpha_j itself for j >= 1, -theta / a_0 for j = 0.
std::vector<Rational> finite_image(const AffineRootSystem& ars, int j) {
  const int n = ars.n();
  std::vector<Rational> x(n, Rational(0));
  if (j > 0) {
    x[j - 1] = 1;
  } else {
    for (int i = 1; i <= n; ++i) x[i - 1] = Rational(-ars.labels()[i], ars.labels()[0]);
  }
  return x;
}

}  // namespace

IntMatrix lattice_basis(const IntMatrix& generators) {
  IntMatrix rows = generators;
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    while (true) {
      std::size_t piv = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (piv == rows.size() || abs64(rows[i][col]) < abs64(rows[piv][col]))) piv = i;
      if (piv == rows.size()) break;
      std::swap(rows[r], rows[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        const std::int64_t q = rows[i][col] / rows[r][col];
        for (std::size_t c = 0; c < n; ++c) rows[i][c] -= q * rows[r][c];
        clean = clean && rows[i][col] == 0;
      }
      if (clean) {
        if (rows[r][col] < 0)
          for (auto& x : rows[r]) x = -x;
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

std::int64_t lattice_index(const IntMatrix& super, const IntMatrix& sub) {
  const std::int64_t dsup = abs64(determinant(super));
  const std::int64_t dsub = abs64(determinant(sub));
  if (dsup == 0 || dsub == 0) throw InputError("lattice basis is singular");
  const RatMatrix coords = coordinates_in(super, sub);
  IntMatrix integral;
  for (const auto& row : coords) integral.push_back(require_integral(row, "sublattice coordinate"));
  if (dsub % dsup != 0) throw InvariantViolation("lattice index is not an integer");
  const std::int64_t index = dsub / dsup;
  std::int64_t product = 1;
  for (auto d : smith_diagonal(integral)) product *= d;
  if (product != index) throw InvariantViolation("Smith form disagrees with the determinant ratio");
  return index;
}

CorootLattices coroot_lattices(const GradedData& gd) {
  if (gd.spec.hermitian()) throw InputError("coroot lattices are defined here for semisimple gradings only");
  const auto& ars = gd.ars();
  const FiniteRootSystem f = ars.finite_part();
  const int n = f.rank();
  CorootLattices lat;
  lat.coroot = identity_matrix(n);

  // M: spanned by the W_f-orbit of theta^vee, theta = delta - a_0 alpha_0.
  std::vector<Rational> theta(n);
  for (int i = 1; i <= n; ++i) theta[i - 1] = ars.labels()[i];
  Rational theta_sq = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) theta_sq += theta[i] * theta[j] * Rational(f.cartan[i][j]) * f.sq_lengths[i] / 2;
  IntMatrix orbit_coroots;
  for (const auto& root : f.positive_roots) {
    std::vector<Rational> x(root.begin(), root.end());
    Rational sq = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sq += x[i] * x[j] * Rational(f.cartan[i][j]) * f.sq_lengths[i] / 2;
    if (sq != theta_sq) continue;
    orbit_coroots.push_back(require_integral(coroot_of(x, f), "coroot"));
  }
  lat.m = lattice_basis(orbit_coroots);
  if (static_cast<int>(lat.m.size()) != n) throw InvariantViolation("orbit of theta^vee does not span");

  for (int j : gd.pi0) {
    auto v = coroot_of(finite_image(ars, j), f);
    for (auto& x : v) x *= gd.spec.k;
    lat.m_sigma.push_back(require_integral(v, "grade-zero coroot"));
  }
  if (static_cast<int>(lat.m_sigma.size()) != n) throw InvariantViolation("grade-zero coroots do not form a basis");
  lat.index_m_msigma = lattice_index(lat.m, lat.m_sigma);
  lat.index_coroot_msigma = lattice_index(lat.coroot, lat.m_sigma);
  return lat;
}

PolytopeDescription polytope_description(const GradedData& gd) {
  PolytopeDescription out;
  out.d_sigma_walls = gd.phi_sigma;
  const auto delta = gd.ars().delta();
  for (int j : gd.pi0) out.p_sigma_walls.push_back(gd.ars().simple_root(j));
  for (const auto& comp : gd.components) out.p_sigma_walls.push_back(scaled(delta, gd.spec.k) - comp.highest_root);
  out.correction = !gd.spec.hermitian() && gd.ars().simple_is_long(gd.spec.p);
  return out;
}

std::string CountReport::g0_label() const {
  if (!g0_has_center) return format_component_types(g0);
  return g0.empty() ? "T1" : format_component_types(g0) + "+T1";
}

CountReport closed_form_count(const GradedData& gd, const FiniteRootSystem& finite) {
  const auto& ars = gd.ars();
  CountReport rep;
  rep.spec = gd.spec;
  rep.delta_f = finite.kind;
  rep.g0 = gd.component_types();
  rep.g0_has_center = gd.spec.hermitian();

  auto& ing = rep.ingredients;
  ing.a0 = ars.labels()[0];
  ing.k = gd.spec.k;
  ing.n = ars.n();
  ing.long_simple = finite.long_simple_count;
  ing.chi_long = ars.simple_is_long(gd.spec.p) ? 1 : 0;
  ing.w_f = finite.weyl_order;
  ing.w_sigma = gd.w_sigma_order;
  ing.ell_f = finite.connection_index;
  ing.ell_sigma = gd.ell_sigma;

  if (gd.spec.hermitian()) {
    if (ing.w_f % ing.w_sigma != 0) throw InvariantViolation("|W_sigma| does not divide |W_f|");
    const std::int64_t cosets = ing.w_f / ing.w_sigma;
    const Rational second = Rational(cosets) * Rational(ing.ell_sigma, ing.ell_f);
    if (second.denominator() != 1)
      throw InvariantViolation("hermitian count is not integral for " + gd.spec.key());
    rep.count_formula = cosets + second.numerator();
  } else {
    std::int64_t scale = std::int64_t{ing.a0} * (ing.chi_long + 1);
    for (int i = 0; i < ing.n - ing.long_simple; ++i) scale *= ing.k;
    const Rational volume = Rational(scale) * Rational(ing.w_f, ing.w_sigma);
    if (volume.denominator() != 1) throw InvariantViolation("semisimple count is not integral for " + gd.spec.key());
    rep.count_formula = volume.numerator() - ing.chi_long;
    ing.index_m_msigma = coroot_lattices(gd).index_m_msigma;
  }
  if (rep.count_formula < 1) throw InvariantViolation("closed-form count below one");
  return rep;
}

bool same_family(const std::vector<AffineWeylElement>& elements, const std::vector<WeightSubset>& subsets) {
  std::set<std::vector<AffineRoot>> lhs, rhs;
  for (const auto& w : elements) lhs.insert(sorted_inversion_set(w));
  for (const auto& s : subsets) rhs.insert(s.members);
  return lhs.size() == elements.size() && rhs.size() == subsets.size() && lhs == rhs;
}

CountReport build_report(const InvolutionSpec& spec, const ReportOptions& options) {
  const GradedData gd = options.window > 0 ? graded_data(spec, options.window) : graded_data(spec);
  CountReport rep = closed_form_count(gd, gd.ars().finite_part());
  std::vector<AffineWeylElement> elements;
  if (options.minuscule) {
    elements = enumerate_sigma_minuscule(gd);
    rep.count_minuscule = static_cast<std::int64_t>(elements.size());
  }
  if (options.oracle && spec.affine.base.rank <= options.oracle_max_rank) {
    const auto subsets = enumerate_abelian_subalgebras(gd);
    rep.count_oracle = static_cast<std::int64_t>(subsets.size());
    if (options.minuscule) rep.bijection = same_family(elements, subsets);
  }
  rep.agree = true;
  for (const auto& c : {rep.count_minuscule, rep.count_oracle})
    if (c && *c != rep.count_formula) rep.agree = false;
  if (rep.bijection && !*rep.bijection) rep.agree = false;
  return rep;
}

}  // namespace zgrade
