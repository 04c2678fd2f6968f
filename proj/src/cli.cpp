#include "padm/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "padm/certio.hpp"
#include "padm/connectivity.hpp"
#include "padm/equivalence.hpp"
#include "padm/problem.hpp"

namespace padm {

namespace {

constexpr int kPass = 0, kVerdictFail = 1, kInputError = 2, kInternalError = 3;

void print_header(std::ostream& out, const std::string& command, const Problem& p) {
  const MatrixLieAlgebra& A = *p.algebra;
  out << "padm report: " << command << "\n";
  if (!p.label.empty()) out << "label: " << p.label << "\n";
  out << "algebra: " << A.kind().str() << " (dim " << A.dim() << ")\n";
  out << "nilpotent: " << entries_str(A, p.e) << "\n";
  out << "grading: " << rat_list_str(p.grading.diag()) << "\n";
  out << "a: " << rat_str(p.a) << "\n";
  std::vector<Rat> degs = p.grading.occupied_degrees();
  out << "occupied degrees: " << rat_list_str(degs) << "\n";
  out << "piece dims:";
  for (const Rat& j : degs) out << " " << rat_str(j) << ":" << p.grading.piece(j).dim();
  out << "\n";
}

// Smallest valid b for b-optimality, if any: b must cover every negative
// centralizer degree and satisfy 2b <= a.
struct BOptimality {
  bool possible = false;
  Rat minimal_b;  // meaningful when possible; 0 means any b in (0, a/2]
};

BOptimality b_optimality(const Grading& g, const Element& e, const Rat& a) {
  Subspace cent = g.algebra().centralizer(e);
  Rat bmin(0);
  for (const Rat& j : g.occupied_degrees()) {
    if (j >= 0) continue;
    if (!subspace_intersect(g.piece(j), cent).is_zero() && -j > bmin) bmin = -j;
  }
  BOptimality r;
  r.minimal_b = bmin;
  r.possible = (2 * bmin <= a) && (a >= 2);
  return r;
}

int cmd_check(const Problem& p, std::ostream& out, bool quiet) {
  const Rat& a = p.a;
  if (!quiet) print_header(out, "check", p);
  bool adm = is_admissible_grading(p.grading, p.e, a);
  out << "admissible grading: " << (adm ? "yes" : "no") << "\n";
  out << "good grading: " << (is_good_grading(p.grading, p.e, a) ? "yes" : "no") << "\n";
  BOptimality bo = b_optimality(p.grading, p.e, a);
  if (p.b) {
    out << "b-optimal (b = " << rat_str(*p.b) << "): "
        << (is_b_optimal(p.grading, p.e, a, *p.b) ? "yes" : "no") << "\n";
  } else if (bo.possible) {
    Rat b = bo.minimal_b > 0 ? bo.minimal_b : a / 2;
    out << "b-optimal (b = " << rat_str(b) << "): "
        << (is_b_optimal(p.grading, p.e, a, b) ? "yes" : "no") << "\n";
  } else {
    out << "b-optimal: no (centralizer degree " << rat_str(-bo.minimal_b) << " forces b > a/2)\n";
  }
  bool pair_ok = true;
  if (p.pair) {
    CheckReport rep = check_pair(p.grading, p.e, a, p.pair->m, p.pair->n);
    out << "pair: dim m = " << p.pair->m.dim() << ", dim n = " << p.pair->n.dim() << "\n";
    auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
    out << "A1 (e in g_a, a > 1): " << pf(rep.a1) << "\n";
    out << "A2 (graded nesting): " << pf(rep.a2) << "\n";
    out << "A3 (m-perp meets [g,e] in [n,e]): " << pf(rep.a3) << "\n";
    out << "A4 (n meets g^e trivially): " << pf(rep.a4) << "\n";
    out << "A5 ([n,m] inside m): " << pf(rep.a5) << "\n";
    out << "A6 (dimension count): " << pf(rep.a6) << "\n";
    out << "m subalgebra: " << pf(rep.subalg_m) << "\n";
    out << "n subalgebra: " << pf(rep.subalg_n) << "\n";
    if (!quiet)
      for (const std::string& nline : rep.notes) out << "note: " << nline << "\n";
    out << "pair admissible: " << (rep.overall ? "PASS" : "FAIL") << "\n";
    pair_ok = rep.overall;
  }
  bool ok = adm && pair_ok;
  out << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kPass : kVerdictFail;
}

int cmd_construct(const Problem& p, bool optimal, const std::string& out_path, std::ostream& out,
                  bool quiet) {
  if (!quiet) print_header(out, "construct", p);
  if (!is_admissible_grading(p.grading, p.e, p.a)) {
    out << "admissible grading: no\noverall: FAIL\n";
    return kVerdictFail;
  }
  const MatrixLieAlgebra& A = *p.algebra;
  if (optimal) {
    OptimalOutcome oc = optimal_pair(p.grading, p.e, p.a);
    switch (oc.status) {
      case OptimalOutcome::Status::Yes: {
        out << "optimal pair: yes\n";
        out << "detail: " << oc.detail << "\n";
        out << "dim m: " << oc.pair->m.dim() << "\ndim n: " << oc.pair->n.dim() << "\n";
        out << subspace_lines(A, oc.pair->m, "m") << subspace_lines(A, oc.pair->n, "n");
        out << "overall: PASS\n";
        return kPass;
      }
      case OptimalOutcome::Status::No:
        out << "optimal pair: no\n";
        out << "detail: " << oc.detail << "\n";
        out << "overall: FAIL\n";
        return kVerdictFail;
      case OptimalOutcome::Status::Unknown:
        out << "optimal pair: unknown\n";
        out << "detail: " << oc.detail << "\n";
        out << "overall: FAIL\n";
        return kVerdictFail;
    }
  }
  AdmissiblePair pair = construct_pair(p.grading, p.e, p.a);
  CheckReport rep = check_pair(p.grading, p.e, p.a, pair.m, pair.n);
  out << "constructed pair: dim m = " << pair.m.dim() << ", dim n = " << pair.n.dim() << "\n";
  out << "self-check: " << rep.summary() << "\n";
  out << subspace_lines(A, pair.m, "m") << subspace_lines(A, pair.n, "n");
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << subspace_lines(A, pair.m, "m") << subspace_lines(A, pair.n, "n");
  }
  out << "overall: " << (rep.overall ? "PASS" : "FAIL") << "\n";
  return rep.overall ? kPass : kInternalError;
}

int cmd_connect(const Problem& p, const std::string& out_path, std::ostream& out, bool quiet) {
  if (!quiet) print_header(out, "connect", p);
  IsotypicDecomposition dec = isotypic_decompose(p.grading, p.e, p.a);
  ConnectivityCertificate cert = connect_to_dynkin(p.grading, p.e, p.a);
  out << "breakpoints:"
      << (cert.break_points.empty() ? " none" : " " + rat_list_str(cert.break_points)) << "\n";
  out << "chain: " << rat_list_str(cert.chain) << "\n";
  out << "steps: " << cert.steps.size() << "\n";
  for (const ConnectStep& s : cert.steps)
    out << "step " << rat_str(s.eps_from) << " -> " << rat_str(s.eps_to)
        << ": dim m = " << s.pair.m.dim() << ", dim n = " << s.pair.n.dim() << ", dual check "
        << (s.report_from.overall && s.report_to.overall ? "PASS" : "FAIL") << "\n";
  std::string text = serialize_connectivity(p, dec, cert);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << text;
    out << "certificate written: yes\n";
  } else {
    out << "certificate:\n" << text;
  }
  out << "overall: " << (cert.verified ? "PASS" : "FAIL") << "\n";
  return cert.verified ? kPass : kInternalError;
}

int cmd_chain(const Problem& p, const std::string& out_path, std::ostream& out, bool quiet) {
  if (!quiet) print_header(out, "chain", p);
  const Rat& a = p.a;
  AdmissiblePair start = p.pair ? *p.pair : construct_pair(p.grading, p.e, a);
  out << "start pair: dim m = " << start.m.dim() << ", dim n = " << start.n.dim() << "\n";

  EquivalenceChain chain;
  Rat b = p.b ? *p.b : a / 2;
  if (is_b_optimal(p.grading, p.e, a, b)) {
    out << "mode: b-optimal (b = " << rat_str(b) << ")\n";
    chain = b_optimal_chain(p.grading, p.e, a, b, start);
  } else {
    // two-level structure: negative degrees above -a are {b-a, -b}
    std::vector<Rat> neg;
    for (const Rat& j : p.grading.occupied_degrees())
      if (j < 0 && j > -a) neg.push_back(j);
    Rat b2;
    bool two_level = !neg.empty();
    if (two_level) {
      b2 = -neg.back();  // closest to zero
      for (const Rat& j : neg)
        if (j != -b2 && j != b2 - a) two_level = false;
      if (!(b2 > 0 && 2 * b2 <= a)) two_level = false;
    }
    if (!two_level) {
      out << "mode: none applicable (grading is neither b-optimal nor two-level)\n";
      out << "overall: FAIL\n";
      return kVerdictFail;
    }
    out << "mode: two-level (b = " << rat_str(b2) << ")\n";
    chain = two_level_chain(p.grading, p.e, a, b2, start);
  }
  ChainVerdict v = verify_chain(p.e, chain);
  out << "chain pairs: " << chain.pairs.size() << "\n";
  for (size_t i = 0; i < chain.pairs.size(); ++i)
    out << "pair " << i << ": dim m = " << chain.pairs[i].m.dim()
        << ", dim n = " << chain.pairs[i].n.dim() << "\n";
  out << "verified: " << (v.ok ? "yes" : "no") << "\n";
  std::string text = serialize_chain(p, chain);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << text;
    out << "certificate written: yes\n";
  } else {
    out << "certificate:\n" << text;
  }
  out << "overall: " << (v.ok ? "PASS" : "FAIL") << "\n";
  return v.ok ? kPass : kInternalError;
}

int cmd_classify(const std::string& algebra, const std::string& partition, bool exceptional,
                 std::ostream& out) {
  out << "padm report: classify\n";
  if (exceptional) {
    out << "exceptional rank-one orbits:\n";
    for (const ExceptionalOrbit& row : exceptional_rank1_table())
      out << row.type << " " << row.label << " [" << row.diagram << "] dim " << row.orbit_dim
          << "\n";
    out << "overall: PASS\n";
    return kPass;
  }
  std::istringstream as(algebra);
  std::string type;
  int n = 0;
  as >> type >> n;
  AlgebraKind kind = AlgebraKind::parse(type, n);
  std::istringstream ps(partition);
  std::vector<int> parts;
  int x;
  while (ps >> x) parts.push_back(x);
  RankClass rc = rank_classifier(kind, Partition::parse(parts));
  out << "algebra: " << kind.str() << "\n";
  out << "partition: " << rc.partition.str() << "\n";
  out << "rank: " << rc.rank << "\n";
  out << "triple centralizer: " << rc.iso_class << "\n";
  if (!rc.case_label.empty()) out << "clause: " << rc.case_label << "\n";
  out << "overall: PASS\n";
  return kPass;
}

int cmd_verify(const std::string& path, std::ostream& out, bool quiet) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open certificate: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  VerifyResult res = verify_certificate_text(buf.str());
  if (!quiet) out << "padm report: verify\n";
  out << "kind: " << res.kind << "\n";
  out << "steps checked: " << res.steps << "\n";
  out << "detail: " << res.detail << "\n";
  out << "overall: " << (res.ok ? "PASS" : "FAIL") << "\n";
  return res.ok ? kPass : kVerdictFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"admissible gradings and admissible pairs for nilpotent elements"};
  app.require_subcommand(1);

  std::string spec_path, out_path, verify_path, algebra, partition;
  bool optimal = false, quiet = false, exceptional = false;

  CLI::App* check = app.add_subcommand("check", "check a grading and optional pair");
  check->add_option("--spec", spec_path)->required();
  check->add_flag("--quiet", quiet);

  CLI::App* construct = app.add_subcommand("construct", "construct an admissible pair");
  construct->add_option("--spec", spec_path)->required();
  construct->add_flag("--optimal", optimal);
  construct->add_option("--out", out_path);
  construct->add_flag("--quiet", quiet);

  CLI::App* connect = app.add_subcommand("connect", "certify connectivity to a Dynkin grading");
  connect->add_option("--spec", spec_path)->required();
  connect->add_option("--out", out_path);
  connect->add_flag("--quiet", quiet);

  CLI::App* chain = app.add_subcommand("chain", "build an equivalence chain");
  chain->add_option("--spec", spec_path)->required();
  std::string b_str;
  chain->add_option("--b", b_str);
  chain->add_option("--out", out_path);
  chain->add_flag("--quiet", quiet);

  CLI::App* classify = app.add_subcommand("classify", "rank of the triple centralizer");
  classify->add_option("--algebra", algebra);
  classify->add_option("--partition", partition);
  classify->add_flag("--exceptional", exceptional);

  CLI::App* verify = app.add_subcommand("verify", "re-verify a certificate file");
  verify->add_option("--verify", verify_path)->required();
  verify->add_flag("--quiet", quiet);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& ex) {
    err << "argument error: " << ex.what() << "\n";
    return kInputError;
  }

  try {
    if (app.got_subcommand(check) || app.got_subcommand(construct) || app.got_subcommand(connect) ||
        app.got_subcommand(chain)) {
      ProblemSpec spec = ProblemSpec::parse_file(spec_path);
      if (app.got_subcommand(chain) && !b_str.empty()) spec.b = parse_rat(b_str);
      Problem p = resolve(spec);
      if (app.got_subcommand(check)) return cmd_check(p, out, quiet);
      if (app.got_subcommand(construct)) return cmd_construct(p, optimal, out_path, out, quiet);
      if (app.got_subcommand(connect)) return cmd_connect(p, out_path, out, quiet);
      return cmd_chain(p, out_path, out, quiet);
    }
    if (app.got_subcommand(classify)) {
      if (!exceptional && (algebra.empty() || partition.empty()))
        throw std::invalid_argument("classify wants --algebra and --partition (or --exceptional)");
      return cmd_classify(algebra, partition, exceptional, out);
    }
    if (app.got_subcommand(verify)) return cmd_verify(verify_path, out, quiet);
  } catch (const std::invalid_argument& ex) {
    err << "input error: " << ex.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& ex) {
    err << "internal verification failure: " << ex.what() << "\n";
    return kInternalError;
  }
  err << "no subcommand\n";
  return kInputError;
}

}  // namespace padm
