#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "padm/admissible.hpp"

namespace padm {

using MatrixEntries = std::vector<std::tuple<int, int, Rat>>;  // 1-based (row, col) = value

// One problem per file; line-oriented "key: value" with '#' comments.
//   algebra: sl 4
//   label: sl4-pair-demo            (optional, echoed in reports)
//   nilpotent: partition 2 2        (or: nilpotent: matrix (1,3)=1 (2,4)=1)
//   grading: 3/2 1/2 -1/2 -3/2
//   a: 2
//   b: 1                            (optional)
//   m: (3,1)=1                      (optional; one basis vector per line)
//   n: (3,1)=1 (2,1)=1
struct ProblemSpec {
  AlgebraKind kind{AlgebraType::SL, 2};
  std::string label;
  std::optional<Partition> partition;
  std::optional<MatrixEntries> nilpotent_entries;
  std::vector<Rat> grading_diag;
  Rat a;
  std::optional<Rat> b;
  std::vector<MatrixEntries> m_vectors, n_vectors;

  static ProblemSpec parse(const std::string& text);       // throws std::invalid_argument
  static ProblemSpec parse_file(const std::string& path);  // throws std::invalid_argument
};

struct Problem {
  std::shared_ptr<MatrixLieAlgebra> algebra;
  Element e;
  Grading grading;
  Rat a;
  std::optional<Rat> b;
  std::optional<AdmissiblePair> pair;
  std::string label;
};

Problem resolve(const ProblemSpec& spec);

// Formatting helpers shared by reports and certificates (deterministic).
std::string entries_str(const MatrixLieAlgebra& A, const Element& x);
Element element_from_entries(const MatrixLieAlgebra& A, const MatrixEntries& entries);
MatrixEntries parse_entry_tokens(const std::string& s);
std::string subspace_lines(const MatrixLieAlgebra& A, const Subspace& s, const std::string& key);
std::string rat_list_str(const std::vector<Rat>& v);

}  // namespace padm
