#pragma once

#include <map>
#include <string>
#include <vector>

#include "padm/linalg.hpp"

namespace padm {

enum class AlgebraType { SL, SO, SP };

struct AlgebraKind {
  AlgebraType type;
  int n;  // size of the defining representation

  std::string str() const;
  static AlgebraKind parse(const std::string& type_token, int n);
};

// Coordinates of an algebra element in the distinguished basis.
using Element = std::vector<Rat>;

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int total() const;
  std::map<int, int> multiplicities() const;
  static Partition parse(const std::vector<int>& parts);  // sorts and validates
  std::string str() const;
};

bool partition_valid_for(const AlgebraKind& kind, const Partition& p, std::string* why = nullptr);

// A classical simple Lie algebra realized by n×n matrices.
//
// sl_n: basis E_ij (i≠j, row-major) followed by H_i = E_ii − E_{i+1,i+1}.
// so_n / sp_n: fixed anti-diagonal form Φ(v_i, v_j) = η_i δ_{i+j,n+1}
// (η ≡ 1 for so; η_i = ±1 split at the middle for sp); basis
// M_ij = E_ij − η_iη_j E_{n+1−j,n+1−i} over one representative per entry orbit.
// The invariant form is the defining-representation trace form tr(xy); it is
// proportional to the Killing form (factor 2n for sl_n, n−2 for so_n, n+2 for
// sp_n), and every check made here is invariant under that scaling.
class MatrixLieAlgebra {
 public:
  static MatrixLieAlgebra build(const AlgebraKind& kind);

  const AlgebraKind& kind() const { return kind_; }
  int n() const { return kind_.n; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<QMatrix>& basis() const { return basis_; }
  const QMatrix& form_gram() const { return gram_; }

  QMatrix to_matrix(const Element& x) const;
  // Expands an n×n matrix in the basis; throws std::invalid_argument when the
  // matrix does not lie in the algebra.
  Element from_matrix(const QMatrix& m) const;
  bool in_algebra(const QMatrix& m) const;

  Element bracket(const Element& x, const Element& y) const;
  Rat invariant_form(const Element& x, const Element& y) const;
  QMatrix ad_matrix(const Element& x) const;  // dim×dim, columns [x, B_j]
  Subspace centralizer(const Element& e) const;

  Element zero() const { return Element(dim(), Rat(0)); }
  Element from_diag(const std::vector<Rat>& d) const;  // throws if not in algebra
  bool diag_in_algebra(const std::vector<Rat>& d) const;

  // Sign η_i of the fixed form (so/sp only).
  int eta(int i) const;

 private:
  Element raw_coords(const QMatrix& m) const;  // expansion without membership check

  AlgebraKind kind_;
  std::vector<QMatrix> basis_;
  std::vector<std::vector<std::tuple<int, int, Rat>>> entries_;  // sparse basis entries
  std::vector<std::vector<std::pair<int, Rat>>> bracket_table_;  // [i*dim+j] -> sparse [B_i,B_j]
  QMatrix gram_;
};

// Jordan-type representative of the nilpotent orbit attached to a partition.
// rep.e lies in the algebra; rep.h_diag is the diagonal of a semisimple h with
// [h, e] = 2e completing to an sl2-triple (chain weights d−1, d−3, …, 1−d).
struct PartitionRep {
  Element e;
  std::vector<Rat> h_diag;
};

PartitionRep partition_rep(const MatrixLieAlgebra& A, const Partition& p);
Element nilpotent_from_partition(const MatrixLieAlgebra& A, const Partition& p);

// Jordan type of a nilpotent matrix, by ranks of powers.
Partition jordan_type(const QMatrix& m);

int centralizer_dim_formula_sl(const Partition& p);  // Σ min(d_i,d_j) − 1

}  // namespace padm
