#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace padm {

// Exact scalar field. mpq_class keeps values reduced with positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

Rat parse_rat(const std::string& s);      // "p/q" or "p"; throws std::invalid_argument
std::string rat_str(const Rat& q);        // canonical "p/q" / "p"

struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return cmp(a, b) < 0; }
};

// Dense rational matrix, row major.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  QMatrix transpose() const;
  QMatrix mul(const QMatrix& o) const;
  QMatrix add(const QMatrix& o) const;
  QMatrix sub(const QMatrix& o) const;
  QMatrix scale(const Rat& k) const;
  static QMatrix identity(int n);

  std::vector<Rat> row(int i) const;
  void set_row(int i, const std::vector<Rat>& v);

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

QMatrix commutator(const QMatrix& x, const QMatrix& y);
std::vector<Rat> mat_vec(const QMatrix& m, const std::vector<Rat>& v);

// Reduced row echelon form; returns pivot columns. rank = pivots.size().
std::pair<QMatrix, std::vector<int>> rref(const QMatrix& m);
int rank(const QMatrix& m);

// A linear subspace held as its unique reduced-row-echelon basis.
// Equality of subspaces is syntactic equality of these bases.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  static Subspace from_rows(const QMatrix& rows);              // span of the rows
  static Subspace from_vectors(const std::vector<std::vector<Rat>>& vs, int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }
  std::vector<Rat> basis_vector(int i) const { return basis_.row(i); }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const std::vector<Rat>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool is_zero() const { return dim() == 0; }

  // Residual of v after elimination against this basis; zero iff contained.
  std::vector<Rat> reduce(const std::vector<Rat>& v) const;

 private:
  int ambient_;
  QMatrix basis_;             // RREF, no zero rows
  std::vector<int> pivots_;
};

Subspace kernel(const QMatrix& m);              // null space {v : m v = 0}
Subspace column_space(const QMatrix& m);

// One solution of a x = b (free variables set to zero), or nullopt.
std::optional<std::vector<Rat>> solve_linear(const QMatrix& a, const std::vector<Rat>& b);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

// Deterministic complement C with u ⊕ C = w (requires u ⊆ w): extend u by the
// first rows of w's echelon basis that raise the rank.
Subspace complement_within(const Subspace& u, const Subspace& w);

// Deterministic C with z ⊕ C = w and seed ⊆ C (requires z ⊆ w, seed ⊆ w,
// seed ∩ z = 0): grow seed by rows of w's echelon basis transverse to z.
Subspace complement_avoiding(const Subspace& z, const Subspace& w, const Subspace& seed);

// {x ∈ w : B(u, x) = 0 for all u ∈ U}, B a bilinear form on the ambient space.
Subspace orth_complement(const Subspace& u, const QMatrix& form, const Subspace& w);

}  // namespace padm
