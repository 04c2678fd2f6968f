#include "padm/grading.hpp"

#include <stdexcept>

namespace padm {

Grading Grading::from_diagonal(const MatrixLieAlgebra& A, const std::vector<Rat>& diag) {
  if (!A.diag_in_algebra(diag))
    throw std::invalid_argument("diagonal does not define an element of the algebra");
  Grading g;
  g.A_ = &A;
  g.diag_ = diag;
  g.deg_.resize(A.dim());
  for (int k = 0; k < A.dim(); ++k) {
    // All entries of a basis element share one degree; read it off the first.
    const QMatrix& b = A.basis()[k];
    std::optional<Rat> d;
    for (int i = 0; i < A.n() && !d; ++i)
      for (int j = 0; j < A.n(); ++j)
        if (b.at(i, j) != 0) {
          d = diag[i] - diag[j];
          break;
        }
    g.deg_[k] = d.value_or(Rat(0));
    g.by_degree_[g.deg_[k]].push_back(k);
  }
  return g;
}

std::vector<Rat> Grading::occupied_degrees() const {
  std::vector<Rat> ds;
  for (const auto& [d, idx] : by_degree_) ds.push_back(d);
  return ds;
}

Subspace Grading::piece(const Rat& j) const {
  auto it = by_degree_.find(j);
  if (it == by_degree_.end()) return Subspace::zero(A_->dim());
  std::vector<std::vector<Rat>> vs;
  for (int k : it->second) {
    std::vector<Rat> v(A_->dim(), Rat(0));
    v[k] = 1;
    vs.push_back(std::move(v));
  }
  return Subspace::from_vectors(vs, A_->dim());
}

Subspace Grading::piece_range(Cmp op, const Rat& k) const {
  std::vector<std::vector<Rat>> vs;
  for (const auto& [d, idx] : by_degree_) {
    bool in = false;
    switch (op) {
      case Cmp::LE: in = d <= k; break;
      case Cmp::LT: in = d < k; break;
      case Cmp::GE: in = d >= k; break;
      case Cmp::GT: in = d > k; break;
    }
    if (!in) continue;
    for (int b : idx) {
      std::vector<Rat> v(A_->dim(), Rat(0));
      v[b] = 1;
      vs.push_back(std::move(v));
    }
  }
  return Subspace::from_vectors(vs, A_->dim());
}

std::optional<Rat> Grading::degree_of(const Element& x) const {
  std::optional<Rat> d;
  for (int k = 0; k < A_->dim(); ++k) {
    if (x[k] == 0) continue;
    if (!d)
      d = deg_[k];
    else if (*d != deg_[k])
      return std::nullopt;
  }
  return d;
}

bool Grading::is_integral() const {
  for (const auto& [d, idx] : by_degree_)
    if (d.get_den() != 1) return false;
  return true;
}

Grading Grading::scaled(const Rat& k) const {
  if (k <= 0) throw std::invalid_argument("grading scale must be positive");
  std::vector<Rat> d = diag_;
  for (Rat& x : d) x *= k;
  return from_diagonal(*A_, d);
}

Grading scale_grading(const Grading& g, const Rat& k) { return g.scaled(k); }

GradedComponents graded_components(const Grading& g, const Subspace& u) {
  // Split each basis row into its degree components (degree groups have
  // disjoint coordinate support). The span of all components contains u and
  // equals it exactly when u is graded; the per-degree spans are then u ∩ g_j.
  GradedComponents out;
  int dim = u.ambient_dim();
  std::map<Rat, std::vector<std::vector<Rat>>, RatLess> parts;
  for (int i = 0; i < u.dim(); ++i) {
    std::map<Rat, std::vector<Rat>, RatLess> split;
    for (int k = 0; k < dim; ++k) {
      const Rat& x = u.basis().at(i, k);
      if (x == 0) continue;
      auto it = split.find(g.basis_degrees()[k]);
      if (it == split.end()) it = split.emplace(g.basis_degrees()[k], std::vector<Rat>(dim, Rat(0))).first;
      it->second[k] = x;
    }
    for (auto& [d, v] : split) parts[d].push_back(std::move(v));
  }
  int total = 0;
  for (auto& [d, vs] : parts) {
    Subspace c = Subspace::from_vectors(vs, dim);
    total += c.dim();
    out.components[d] = std::move(c);
  }
  out.graded = (total == u.dim());
  if (!out.graded) out.components.clear();
  return out;
}

bool is_graded(const Grading& g, const Subspace& u) { return graded_components(g, u).graded; }

bool is_admissible_grading(const Grading& g, const Element& e, const Rat& a) {
  if (a <= 1) return false;
  std::optional<Rat> de = g.degree_of(e);
  if (!de || *de != a) throw std::invalid_argument("e is not homogeneous of degree a");
  Subspace low = g.piece_range(Cmp::LE, -a);
  Subspace ge = g.algebra().centralizer(e);
  return subspace_intersect(low, ge).is_zero();
}

bool is_good_grading(const Grading& g, const Element& e, const Rat& two_d) {
  std::optional<Rat> de = g.degree_of(e);
  if (!de || *de != two_d) throw std::invalid_argument("e is not homogeneous of the given degree");
  Rat d = two_d / 2;
  QMatrix ad = g.algebra().ad_matrix(e);
  for (const Rat& j : g.occupied_degrees()) {
    Subspace src = g.piece(j);
    // image of ad e restricted to g_j
    QMatrix img(src.dim(), g.algebra().dim());
    for (int i = 0; i < src.dim(); ++i) img.set_row(i, mat_vec(ad, src.basis_vector(i)));
    int r = rank(img);
    if (j <= -d && r != src.dim()) return false;
    if (j >= -d && r != g.piece(j + two_d).dim()) return false;
  }
  return true;
}

bool is_b_optimal(const Grading& g, const Element& e, const Rat& a, const Rat& b) {
  if (b <= 0) return false;
  if (a < 2 || a < 2 * b) return false;
  std::optional<Rat> de = g.degree_of(e);
  if (!de || *de != a) throw std::invalid_argument("e is not homogeneous of degree a");
  Subspace low = g.piece_range(Cmp::LT, -b);
  Subspace ge = g.algebra().centralizer(e);
  return subspace_intersect(low, ge).is_zero();
}

}  // namespace padm
