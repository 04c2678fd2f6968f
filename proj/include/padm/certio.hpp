#pragma once

#include <string>

#include "padm/connectivity.hpp"
#include "padm/equivalence.hpp"
#include "padm/problem.hpp"

namespace padm {

// Versioned, self-describing certificate files. Each file embeds the algebra,
// nilpotent, the gradings involved, and every pair, so verification needs no
// reconstruction beyond re-running the condition checks.

std::string serialize_connectivity(const Problem& p, const IsotypicDecomposition& dec,
                                   const ConnectivityCertificate& cert);
std::string serialize_chain(const Problem& p, const EquivalenceChain& chain);

struct VerifyResult {
  bool ok = false;
  std::string kind;      // "connectivity" | "chain"
  std::string detail;    // failure locus or summary
  int steps = 0;
};

// Parses a certificate file and re-verifies every embedded claim.
VerifyResult verify_certificate_text(const std::string& text);

}  // namespace padm
