#pragma once

#include <map>
#include <optional>
#include <vector>

#include "padm/liealg.hpp"

namespace padm {

enum class Cmp { LE, LT, GE, GT };

// Q-grading of the algebra defined by a rational diagonal semisimple element.
// Every distinguished basis element is homogeneous (degree = difference of the
// two diagonal entries it touches), so the graded pieces are coordinate
// subspaces of the basis.
class Grading {
 public:
  static Grading from_diagonal(const MatrixLieAlgebra& A, const std::vector<Rat>& diag);

  const MatrixLieAlgebra& algebra() const { return *A_; }
  const std::vector<Rat>& diag() const { return diag_; }
  const std::vector<Rat>& basis_degrees() const { return deg_; }
  std::vector<Rat> occupied_degrees() const;

  Element defining_element() const { return A_->from_diag(diag_); }

  Subspace piece(const Rat& j) const;
  Subspace piece_range(Cmp op, const Rat& k) const;

  // Degree of a homogeneous element; nullopt for 0 or mixed-degree elements.
  std::optional<Rat> degree_of(const Element& x) const;

  bool is_integral() const;  // all occupied degrees in Z

  Grading scaled(const Rat& k) const;  // k > 0

 private:
  const MatrixLieAlgebra* A_ = nullptr;
  std::vector<Rat> diag_;
  std::vector<Rat> deg_;                          // degree per basis index
  std::map<Rat, std::vector<int>, RatLess> by_degree_;  // degree -> basis indices
};

struct GradedComponents {
  bool graded = false;
  std::map<Rat, Subspace, RatLess> components;  // degree -> U ∩ g_j, nonzero only
};

GradedComponents graded_components(const Grading& g, const Subspace& u);
bool is_graded(const Grading& g, const Subspace& u);

// Admissibility criterion: g_{<= -a} ∩ g^e = 0 (with e homogeneous of degree a > 1).
bool is_admissible_grading(const Grading& g, const Element& e, const Rat& a);

// e in g_{2d}; ad e : g_j -> g_{j+2d} injective for j <= -d, surjective for j >= -d.
bool is_good_grading(const Grading& g, const Element& e, const Rat& two_d);

// g_{< -b} ∩ g^e = 0 with e in g_a, a >= 2 and a >= 2b.
bool is_b_optimal(const Grading& g, const Element& e, const Rat& a, const Rat& b);

Grading scale_grading(const Grading& g, const Rat& k);

}  // namespace padm
