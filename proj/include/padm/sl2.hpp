#pragma once

#include <map>
#include <string>
#include <vector>

#include "padm/grading.hpp"

namespace padm {

struct Sl2Triple {
  Element e, h, f;
};

// Joint (sl2-triple, t)-block: d-dimensional simple modules of multiplicity
// `mult` on t-eigenvalue lambda. Layer l is the h_Gamma-eigenspace of value
// rho + l*a; ad e maps layer l isomorphically onto layer l+1 and kills the top.
struct IsotypicBlock {
  int d;
  Rat lambda;
  Rat rho;  // lowest h_Gamma-weight: -(a/2)(d-1) + lambda
  int mult;
  std::vector<Subspace> layers;  // size d
};

struct IsotypicDecomposition {
  Sl2Triple triple;
  Element t;
  std::vector<Rat> t_diag;  // diagonal of t in the defining representation
  Rat a;
  std::vector<IsotypicBlock> blocks;  // sorted by (d, lambda)

  const IsotypicBlock* find(int d, const Rat& lambda) const;
  std::vector<Rat> t_eigenvalues() const;  // distinct ad t eigenvalues, sorted
};

// Adapted sl2-triple through e: h in g_0 diagonal in the defining
// representation, f in g_{-a}. Solves [h,e]=2e over diagonal h, then [e,f]=h
// with f in the (ad h = -2)-eigenspace; deterministic first solution.
// Throws std::invalid_argument when no diagonal adapted triple exists.
Sl2Triple adapted_triple(const Grading& g, const Element& e, const Rat& a);

// t = h_Gamma - (a/2) h; validated to centralize e and h.
Element t_element(const Grading& g, const Sl2Triple& triple, const Rat& a);
std::vector<Rat> t_diagonal(const Grading& g, const Sl2Triple& triple, const Rat& a);

IsotypicDecomposition isotypic_decompose(const Grading& g, const Element& e, const Rat& a);

// Schur orthogonality (pairing vanishes unless lambda + mu = 0 and d = d')
// and the layer coupling (zero unless l + l' = d-1, nondegenerate otherwise).
struct CouplingReport {
  bool ok = true;
  std::vector<std::string> failures;
};
CouplingReport verify_coupling(const MatrixLieAlgebra& A, const IsotypicDecomposition& dec);

// Formula-(7) criterion: every block satisfies |lambda| < (a/2)(d+1).
bool admissible_by_block_bounds(const IsotypicDecomposition& dec);

}  // namespace padm
