#include "padm/certio.hpp"

#include <sstream>
#include <stdexcept>

namespace padm {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<Rat> parse_rats(const std::string& s) {
  std::istringstream is(s);
  std::vector<Rat> v;
  std::string t;
  while (is >> t) v.push_back(parse_rat(t));
  return v;
}

struct LineReader {
  std::vector<std::pair<std::string, std::string>> kv;  // ordered key/value lines
  size_t pos = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      line = strip(line);
      if (line.empty() || line[0] == '#') continue;
      size_t colon = line.find(':');
      if (colon == std::string::npos) {
        kv.emplace_back(line, "");
      } else {
        kv.emplace_back(strip(line.substr(0, colon)), strip(line.substr(colon + 1)));
      }
    }
  }
  bool done() const { return pos >= kv.size(); }
  const std::pair<std::string, std::string>& peek() const { return kv[pos]; }
  std::pair<std::string, std::string> next() { return kv[pos++]; }
  std::string expect(const std::string& key) {
    if (done() || kv[pos].first != key)
      throw std::invalid_argument("certificate: expected '" + key + "'");
    return kv[pos++].second;
  }
};

}  // namespace

std::string serialize_connectivity(const Problem& p, const IsotypicDecomposition& dec,
                                   const ConnectivityCertificate& cert) {
  const MatrixLieAlgebra& A = *p.algebra;
  std::ostringstream os;
  os << "padm-cert v1\n";
  os << "kind: connectivity\n";
  os << "algebra: " << A.kind().str() << "\n";
  if (!p.label.empty()) os << "label: " << p.label << "\n";
  os << "a: " << rat_str(cert.a) << "\n";
  os << "nilpotent: " << entries_str(A, p.e) << "\n";
  os << "t-diagonal: " << rat_list_str(dec.t_diag) << "\n";
  os << "breakpoints:" << (cert.break_points.empty() ? " none" : " " + rat_list_str(cert.break_points))
     << "\n";
  os << "chain: " << rat_list_str(cert.chain) << "\n";
  os << "steps: " << cert.steps.size() << "\n";
  for (const ConnectStep& s : cert.steps) {
    os << "step: " << rat_str(s.eps_from) << " " << rat_str(s.eps_to) << "\n";
    Grading gf = deform(p.grading, dec, s.eps_from);
    Grading gt = deform(p.grading, dec, s.eps_to);
    os << "grading-from: " << rat_list_str(gf.diag()) << "\n";
    os << "grading-to: " << rat_list_str(gt.diag()) << "\n";
    os << subspace_lines(A, s.pair.m, "m");
    os << subspace_lines(A, s.pair.n, "n");
    os << "verdict: " << (s.report_from.overall && s.report_to.overall ? "pass" : "fail") << "\n";
    os << "endstep\n";
  }
  os << "end\n";
  return os.str();
}

std::string serialize_chain(const Problem& p, const EquivalenceChain& chain) {
  const MatrixLieAlgebra& A = *p.algebra;
  std::ostringstream os;
  os << "padm-cert v1\n";
  os << "kind: chain\n";
  os << "algebra: " << A.kind().str() << "\n";
  if (!p.label.empty()) os << "label: " << p.label << "\n";
  os << "nilpotent: " << entries_str(A, p.e) << "\n";
  os << "pairs: " << chain.pairs.size() << "\n";
  for (size_t i = 0; i < chain.pairs.size(); ++i) {
    os << "pair: " << i << "\n";
    os << subspace_lines(A, chain.pairs[i].m, "m");
    os << subspace_lines(A, chain.pairs[i].n, "n");
    os << "endpair\n";
  }
  os << "links: " << chain.links.size() << "\n";
  for (size_t i = 0; i < chain.links.size(); ++i) {
    const ChainLink& l = chain.links[i];
    os << "link: " << i << "\n";
    os << "grading: " << rat_list_str(l.grading.diag()) << "\n";
    os << "a: " << rat_str(l.a) << "\n";
    os << "lesser: " << (l.left_is_lesser ? "left" : "right") << "\n";
    os << "verdict: pass\n";
    os << "endlink\n";
  }
  os << "end\n";
  return os.str();
}

VerifyResult verify_certificate_text(const std::string& text) {
  LineReader r(text);
  VerifyResult res;
  r.expect("padm-cert v1");
  res.kind = r.expect("kind");

  auto toks_of = [](const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> v;
    std::string t;
    while (is >> t) v.push_back(t);
    return v;
  };

  auto alg_toks = toks_of(r.expect("algebra"));
  if (alg_toks.size() != 2) throw std::invalid_argument("certificate: bad algebra line");
  auto A = std::make_shared<MatrixLieAlgebra>(
      MatrixLieAlgebra::build(AlgebraKind::parse(alg_toks[0], std::stoi(alg_toks[1]))));
  if (!r.done() && r.peek().first == "label") r.next();

  if (res.kind == "connectivity") {
    Rat a = parse_rat(r.expect("a"));
    Element e = element_from_entries(*A, parse_entry_tokens(r.expect("nilpotent")));
    r.expect("t-diagonal");
    r.expect("breakpoints");
    std::vector<Rat> chain = parse_rats(r.expect("chain"));
    int steps = std::stoi(r.expect("steps"));
    for (int s = 0; s < steps; ++s) {
      std::vector<Rat> fromto = parse_rats(r.expect("step"));
      if (fromto.size() != 2) throw std::invalid_argument("certificate: bad step header");
      if (static_cast<size_t>(s) + 1 >= chain.size() || fromto[0] != chain[s] ||
          fromto[1] != chain[s + 1]) {
        res.detail = "step " + std::to_string(s) + ": chain mismatch";
        return res;
      }
      Grading gf = Grading::from_diagonal(*A, parse_rats(r.expect("grading-from")));
      Grading gt = Grading::from_diagonal(*A, parse_rats(r.expect("grading-to")));
      std::vector<std::vector<Rat>> mv, nv;
      while (!r.done() && r.peek().first == "m") mv.push_back(element_from_entries(*A, parse_entry_tokens(r.next().second)));
      while (!r.done() && r.peek().first == "n") nv.push_back(element_from_entries(*A, parse_entry_tokens(r.next().second)));
      std::string claimed = r.expect("verdict");
      r.expect("endstep");
      Subspace m = Subspace::from_vectors(mv, A->dim());
      Subspace n = Subspace::from_vectors(nv, A->dim());
      CheckReport cf = check_pair(gf, e, a, m, n);
      CheckReport ct = check_pair(gt, e, a, m, n);
      if (!cf.overall || !ct.overall) {
        res.detail = "step " + std::to_string(s) + ": pair fails under " +
                     (cf.overall ? "the target grading" : "the source grading");
        return res;
      }
      if (claimed != "pass") {
        res.detail = "step " + std::to_string(s) + ": recorded verdict disagrees with recomputation";
        return res;
      }
      ++res.steps;
    }
    r.expect("end");
    res.ok = true;
    res.detail = "all steps dual-certified";
    return res;
  }

  if (res.kind == "chain") {
    Element e = element_from_entries(*A, parse_entry_tokens(r.expect("nilpotent")));
    int npairs = std::stoi(r.expect("pairs"));
    EquivalenceChain chain;
    for (int i = 0; i < npairs; ++i) {
      r.expect("pair");
      std::vector<std::vector<Rat>> mv, nv;
      while (!r.done() && r.peek().first == "m") mv.push_back(element_from_entries(*A, parse_entry_tokens(r.next().second)));
      while (!r.done() && r.peek().first == "n") nv.push_back(element_from_entries(*A, parse_entry_tokens(r.next().second)));
      r.expect("endpair");
      chain.pairs.push_back({Subspace::from_vectors(mv, A->dim()), Subspace::from_vectors(nv, A->dim())});
    }
    int nlinks = std::stoi(r.expect("links"));
    for (int i = 0; i < nlinks; ++i) {
      r.expect("link");
      Grading g = Grading::from_diagonal(*A, parse_rats(r.expect("grading")));
      Rat a = parse_rat(r.expect("a"));
      std::string lesser = r.expect("lesser");
      std::string claimed = r.expect("verdict");
      r.expect("endlink");
      if (claimed != "pass") {
        res.detail = "link " + std::to_string(i) + ": recorded verdict is not pass";
        return res;
      }
      chain.links.push_back({g, a, lesser == "left"});
    }
    r.expect("end");
    ChainVerdict v = verify_chain(e, chain);
    res.ok = v.ok;
    res.steps = nlinks;
    res.detail = v.ok ? "chain verified" : v.locus;
    // keep the algebra alive for the gradings during verification only
    return res;
  }

  throw std::invalid_argument("certificate: unknown kind '" + res.kind + "'");
}

}  // namespace padm
