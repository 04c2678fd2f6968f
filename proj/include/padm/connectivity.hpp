#pragma once

#include <vector>

#include "padm/admissible.hpp"

namespace padm {

// Grading defined by (a/2) h + eps t; eps = 1 recovers the input grading and
// eps = 0 the (a/2)-scaled Dynkin grading of the triple.
Grading deform(const Grading& g, const IsotypicDecomposition& dec, const Rat& eps);

// Position of zero in the eigenvalue ladder rho^(eps) + l*a of a block:
// odd values 2s+3 between ladder points, even values 2(s+1) on them.
int p_index(const IsotypicBlock& blk, const Rat& a, const Rat& eps);
Rat rho_eps(const IsotypicBlock& blk, const Rat& a, const Rat& eps);

// All eps in (0,1) where some p-index with lambda != 0 is even; sorted, unique.
std::vector<Rat> breakpoints(const IsotypicDecomposition& dec);

struct CommonPair {
  AdmissiblePair pair;
  CheckReport report_eps, report_eps2;
};

// Common admissible pair of the gradings at eps and eps2; requires
// |p^(eps) - p^(eps2)| <= 1 on every block. Certified under both gradings.
CommonPair common_pair(const Grading& g, const Element& e, const IsotypicDecomposition& dec,
                       const Rat& eps, const Rat& eps2);

struct ConnectStep {
  Rat eps_from, eps_to;
  AdmissiblePair pair;
  CheckReport report_from, report_to;
};

struct ConnectivityCertificate {
  Rat a;
  std::vector<Rat> chain;           // 0 = eps_0 < ... < eps_last = 1
  std::vector<Rat> break_points;    // interior breakpoints used
  std::vector<ConnectStep> steps;   // one per adjacent chain pair
  bool verified = false;
};

// Walks eps from 1 down to 0 through midpoints between consecutive
// breakpoints, certifying a common pair for every adjacent chain pair.
ConnectivityCertificate connect_to_dynkin(const Grading& g, const Element& e, const Rat& a);

// Re-checks every step of a certificate from scratch.
bool verify_certificate(const Grading& g, const Element& e, const IsotypicDecomposition& dec,
                        ConnectivityCertificate& cert);

}  // namespace padm
