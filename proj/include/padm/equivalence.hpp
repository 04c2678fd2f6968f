#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padm/admissible.hpp"

namespace padm {

// lesser ⪯ greater under `grading`: greater.m ⊆ lesser.m ⊆ lesser.n ⊆ greater.n.
// The order symbol reverses the m-inclusion; the stored inclusions are the
// ground truth.
struct ComparabilityWitness {
  Grading grading;
  Rat a;
  AdmissiblePair lesser, greater;
  bool swapped = false;  // true when (p1, p2) became (greater, lesser)
};

std::optional<ComparabilityWitness> comparable(const Grading& g, const Element& e, const Rat& a,
                                               const AdmissiblePair& p1, const AdmissiblePair& p2);

struct ChainLink {
  Grading grading;
  Rat a;
  bool left_is_lesser;  // pairs[i] ⪯ pairs[i+1] when true, else pairs[i+1] ⪯ pairs[i]
};

struct EquivalenceChain {
  std::vector<AdmissiblePair> pairs;
  std::vector<ChainLink> links;  // links[i] joins pairs[i] and pairs[i+1]
};

struct ChainVerdict {
  bool ok = false;
  std::string locus;  // first failure, empty when ok
};

ChainVerdict verify_chain(const Element& e, const EquivalenceChain& chain);

// Chain from `pair` to the canonical pair of a b-optimal grading,
// (g_{< -a/2}, g_{< -a/2} ⊕ U0), U0 the deterministic complement of
// g^e_{-a/2} in g_{-a/2}. Requires the grading b-optimal.
EquivalenceChain b_optimal_chain(const Grading& g, const Element& e, const Rat& a, const Rat& b,
                                 const AdmissiblePair& pair);

// Chain construction for gradings with negative part
// g_{<= -a} ⊕ (g_{b-a} + g_{-b}), b in (0, a/2]; chain to
// (g_{<= -a} ⊕ U0, g_{<= -a} ⊕ U0) with U0 the deterministic complement of
// g^e_{b-a} in g_{b-a}.
EquivalenceChain two_level_chain(const Grading& g, const Element& e, const Rat& a, const Rat& b,
                                 const AdmissiblePair& pair);

// Shared D-line construction: links P(U) to P(V) where P(W) is the pair
// (g_{<= -a} ⊕ W ⊕ fixed, g_{<= -a} ⊕ W ⊕ fixed) over complements W of
// g^e_{deg_u} in g_{deg_u}, using a line D found in deg_d. Appends to `chain`,
// whose last pair must be P(U).
void link_complements_two_level(const Grading& g, const Element& e, const Rat& a,
                                const Subspace& fixed, const Rat& deg_u, const Rat& deg_d,
                                const Subspace& u, const Subspace& v, EquivalenceChain& chain);

struct RankClass {
  AlgebraKind kind;
  Partition partition;
  int rank = 0;
  std::string iso_class;    // "zero" | "abelian" | "sl2" | "so3" | "higher"
  std::string case_label;   // rank-one factor: "two-row", "even-pair",
                            // "odd-pair", "even-triple", "odd-triple"
};

RankClass rank_classifier(const AlgebraKind& kind, const Partition& p);

// Rank of the reductive centralizer of the triple: dimension of the joint
// centralizer of a sampled regular element of g^e ∩ g^h inside it.
int toral_rank_of_triple_centralizer(const MatrixLieAlgebra& A, const Element& e, const Element& h);

struct ExceptionalOrbit {
  std::string type;     // G2 | F4 | E6
  std::string label;    // Bala-Carter label
  std::string diagram;  // weighted Dynkin diagram
  int orbit_dim;
};

// Static reference rows for the exceptional rank-one orbits.
const std::vector<ExceptionalOrbit>& exceptional_rank1_table();

}  // namespace padm
