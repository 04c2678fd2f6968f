#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padm/sl2.hpp"

namespace padm {

struct AdmissiblePair {
  Subspace m, n;
};

// Per-condition verdicts for a candidate pair. `overall` is the conjunction of
// A1..A6 together with the subalgebra requirements on m and n.
struct CheckReport {
  bool a1 = false, a2 = false, a3 = false, a4 = false, a5 = false, a6 = false;
  bool subalg_m = false, subalg_n = false;
  bool overall = false;
  // consequences of admissibility, reported as diagnostics
  bool mperp_bounded = false;   // m^perp ⊆ g_{<= a-1}
  bool dims_even = false;       // dim m + dim n and dim n - dim m even
  std::vector<std::string> notes;  // failure loci

  std::string summary() const;
};

CheckReport check_pair(const Grading& g, const Element& e, const Rat& a, const Subspace& m,
                       const Subspace& n);

// Blockwise pair construction from the isotypic decomposition (case split on
// the position of zero in each block's degree ladder); self-verified before
// returning. Requires the admissibility criterion to hold.
AdmissiblePair construct_pair(const Grading& g, const Element& e, const IsotypicDecomposition& dec);
AdmissiblePair construct_pair(const Grading& g, const Element& e, const Rat& a);

struct OptimalOutcome {
  enum class Status { Yes, No, Unknown } status;
  std::optional<AdmissiblePair> pair;   // set when Yes
  std::string detail;                    // obstruction narrative / search note
};

// Decides existence of an optimal pair (m = g_{<= -a}) for this grading:
// Yes with a certified pair, No with a forced-bracket obstruction, or Unknown.
OptimalOutcome optimal_pair(const Grading& g, const Element& e, const Rat& a);

// Graded complement s of [n, e] in m^perp; checks g = [g,e] ⊕ s and
// dim s = dim g^e before returning.
Subspace slice_complement(const Grading& g, const Element& e, const AdmissiblePair& pair);

struct DegreeProfileRow {
  Rat j;
  int dim_gj = 0;
  int dim_gj_e = 0;  // dim g_j ∩ g^e
  bool injective = false;
  bool surjective = false;  // onto g_{j+a}
};
std::vector<DegreeProfileRow> ad_e_degree_profile(const Grading& g, const Element& e, const Rat& a);

// Gram matrix of Phi_e(x, y) = <e, [x, y]> on deterministic complements V, W of
// g^e_{-b} in g_{-b} and of g^e_{b-a} in g_{b-a}; rank must equal dim V = dim W.
struct PhiPairing {
  QMatrix gram;
  int rank = 0;
  Subspace v, w;
};
PhiPairing phi_e_pairing(const Grading& g, const Element& e, const Rat& a, const Rat& b);

// Gram matrix of Phi_e on u-basis × w-basis.
QMatrix phi_e_gram(const MatrixLieAlgebra& A, const Element& e, const Subspace& u, const Subspace& w);

}  // namespace padm
