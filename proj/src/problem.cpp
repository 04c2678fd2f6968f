#include "padm/problem.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace padm {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

MatrixEntries parse_entry_tokens(const std::string& s) {
  MatrixEntries entries;
  for (const std::string& tok : split_ws(s)) {
    // (i,j)=p/q
    size_t comma = tok.find(','), close = tok.find(')'), eq = tok.find('=');
    if (tok.empty() || tok[0] != '(' || comma == std::string::npos || close == std::string::npos ||
        eq == std::string::npos || eq < close)
      throw std::invalid_argument("bad matrix entry token: " + tok);
    int i = std::stoi(tok.substr(1, comma - 1));
    int j = std::stoi(tok.substr(comma + 1, close - comma - 1));
    Rat v = parse_rat(tok.substr(eq + 1));
    entries.emplace_back(i, j, v);
  }
  if (entries.empty()) throw std::invalid_argument("empty matrix entry list");
  return entries;
}

ProblemSpec ProblemSpec::parse(const std::string& text) {
  ProblemSpec spec;
  bool have_algebra = false, have_grading = false, have_a = false, have_nilpotent = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = strip(line.substr(0, colon));
    std::string value = strip(line.substr(colon + 1));
    try {
      if (key == "algebra") {
        auto toks = split_ws(value);
        if (toks.size() != 2) throw std::invalid_argument("algebra wants '<type> <n>'");
        spec.kind = AlgebraKind::parse(toks[0], std::stoi(toks[1]));
        have_algebra = true;
      } else if (key == "label") {
        spec.label = value;
      } else if (key == "nilpotent") {
        auto toks = split_ws(value);
        if (toks.empty()) throw std::invalid_argument("empty nilpotent");
        if (toks[0] == "partition") {
          std::vector<int> parts;
          for (size_t i = 1; i < toks.size(); ++i) parts.push_back(std::stoi(toks[i]));
          spec.partition = Partition::parse(parts);
        } else if (toks[0] == "matrix") {
          spec.nilpotent_entries = parse_entry_tokens(value.substr(value.find("matrix") + 6));
        } else {
          throw std::invalid_argument("nilpotent wants 'partition ...' or 'matrix ...'");
        }
        have_nilpotent = true;
      } else if (key == "grading") {
        spec.grading_diag.clear();
        for (const std::string& t : split_ws(value)) spec.grading_diag.push_back(parse_rat(t));
        have_grading = true;
      } else if (key == "a") {
        spec.a = parse_rat(value);
        have_a = true;
      } else if (key == "b") {
        spec.b = parse_rat(value);
      } else if (key == "m") {
        spec.m_vectors.push_back(parse_entry_tokens(value));
      } else if (key == "n") {
        spec.n_vectors.push_back(parse_entry_tokens(value));
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& ex) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + ex.what());
    } catch (const std::exception& ex) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  if (!have_algebra) throw std::invalid_argument("missing 'algebra'");
  if (!have_nilpotent) throw std::invalid_argument("missing 'nilpotent'");
  if (!have_grading) throw std::invalid_argument("missing 'grading'");
  if (!have_a) throw std::invalid_argument("missing 'a'");
  if (spec.m_vectors.empty() != spec.n_vectors.empty())
    throw std::invalid_argument("m and n must be given together");
  return spec;
}

ProblemSpec ProblemSpec::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Element element_from_entries(const MatrixLieAlgebra& A, const MatrixEntries& entries) {
  QMatrix m(A.n(), A.n());
  for (const auto& [i, j, v] : entries) {
    if (i < 1 || i > A.n() || j < 1 || j > A.n())
      throw std::invalid_argument("matrix entry out of range");
    m.at(i - 1, j - 1) += v;
  }
  return A.from_matrix(m);
}

Problem resolve(const ProblemSpec& spec) {
  Problem p;
  p.algebra = std::make_shared<MatrixLieAlgebra>(MatrixLieAlgebra::build(spec.kind));
  const MatrixLieAlgebra& A = *p.algebra;
  p.label = spec.label;
  if (spec.partition)
    p.e = nilpotent_from_partition(A, *spec.partition);
  else
    p.e = element_from_entries(A, *spec.nilpotent_entries);
  if (static_cast<int>(spec.grading_diag.size()) != A.n())
    throw std::invalid_argument("grading diagonal has wrong length");
  p.grading = Grading::from_diagonal(A, spec.grading_diag);
  p.a = spec.a;
  p.b = spec.b;
  std::optional<Rat> deg = p.grading.degree_of(p.e);
  if (!deg || *deg != p.a)
    throw std::invalid_argument("nilpotent is not homogeneous of degree a under the grading");
  if (!spec.m_vectors.empty()) {
    std::vector<std::vector<Rat>> mv, nv;
    for (const auto& ent : spec.m_vectors) mv.push_back(element_from_entries(A, ent));
    for (const auto& ent : spec.n_vectors) nv.push_back(element_from_entries(A, ent));
    p.pair = AdmissiblePair{Subspace::from_vectors(mv, A.dim()), Subspace::from_vectors(nv, A.dim())};
  }
  return p;
}

std::string entries_str(const MatrixLieAlgebra& A, const Element& x) {
  QMatrix m = A.to_matrix(x);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j)
      if (m.at(i, j) != 0) {
        if (!first) os << " ";
        os << "(" << i + 1 << "," << j + 1 << ")=" << rat_str(m.at(i, j));
        first = false;
      }
  if (first) os << "(1,1)=0";
  return os.str();
}

std::string subspace_lines(const MatrixLieAlgebra& A, const Subspace& s, const std::string& key) {
  std::ostringstream os;
  for (int i = 0; i < s.dim(); ++i)
    os << key << ": " << entries_str(A, s.basis_vector(i)) << "\n";
  return os.str();
}

std::string rat_list_str(const std::vector<Rat>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << rat_str(v[i]);
  return os.str();
}

}  // namespace padm
