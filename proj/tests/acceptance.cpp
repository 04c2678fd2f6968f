// Acceptance runner: reproduces the reference instances exactly (rational
// arithmetic, zero tolerance) and runs the randomized property suites.
// Prints one line per criterion; exits nonzero if any fails.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "instance_gen.hpp"
#include "padm/certio.hpp"
#include "padm/connectivity.hpp"
#include "padm/equivalence.hpp"

using namespace padm;
using padm_testing::Instance;

namespace {

std::vector<Rat> rats(std::vector<std::string> ss) {
  std::vector<Rat> v;
  for (const auto& s : ss) v.push_back(parse_rat(s));
  return v;
}

Element elem(const MatrixLieAlgebra& A, std::vector<std::tuple<int, int, int>> entries) {
  QMatrix m(A.n(), A.n());
  for (auto [i, j, v] : entries) m.at(i - 1, j - 1) = v;
  return A.from_matrix(m);
}

struct Runner {
  int failures = 0;
  void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& fn) {
    std::string note;
    bool ok = false;
    try {
      ok = fn(note);
    } catch (const std::exception& ex) {
      note = std::string("exception: ") + ex.what();
    }
    std::printf("criterion %2d: %s — %s%s%s\n", number, ok ? "PASS" : "FAIL", name.c_str(),
                note.empty() ? "" : ": ", note.c_str());
    if (!ok) ++failures;
  }
};

bool elem_zero(const Element& x) {
  for (const Rat& c : x)
    if (c != 0) return false;
  return true;
}

}  // namespace

int main() {
  Runner run;

  // ---- sl_4 half-integral grading ------------------------------------------
  auto sl4 = padm_testing::cached_algebra(AlgebraKind::parse("sl", 4));
  Grading g4 = Grading::from_diagonal(*sl4, rats({"3/2", "1/2", "-1/2", "-3/2"}));
  Element e4 = elem(*sl4, {{1, 3, 1}, {2, 4, 1}});

  run.criterion(1, "sl_4 grading by diag(3,1,-1,-3)/2 with e = E13+E24", [&](std::string& note) {
    int expect[4][4] = {{0, 1, 2, 3}, {-1, 0, 1, 2}, {-2, -1, 0, 1}, {-3, -2, -1, 0}};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (g4.diag()[i] - g4.diag()[j] != expect[i][j]) return false;
    Subspace m = g4.piece_range(Cmp::LE, Rat(-2));
    Subspace n = subspace_sum(
        m, Subspace::from_vectors({elem(*sl4, {{2, 1, 1}}), elem(*sl4, {{3, 2, 1}})}, sl4->dim()));
    CheckReport rep = check_pair(g4, e4, Rat(2), m, n);
    if (!rep.overall) return false;
    bool noninjective = false;
    for (const DegreeProfileRow& row : ad_e_degree_profile(g4, e4, Rat(2)))
      if (row.j == -1 && !row.injective) noninjective = true;
    if (!noninjective) return false;
    if (!is_admissible_grading(g4, e4, Rat(2))) return false;
    if (is_good_grading(g4, e4, Rat(2))) return false;
    note = "pair certified; admissible but not good; ad e drops rank at degree -1";
    return true;
  });

  // ---- sl_3 good non-Dynkin grading ----------------------------------------
  run.criterion(2, "sl_3 grading by diag(2,2,-4)/3 with e = E13", [&](std::string& note) {
    auto A = padm_testing::cached_algebra(AlgebraKind::parse("sl", 3));
    Grading g = Grading::from_diagonal(*A, rats({"2/3", "2/3", "-4/3"}));
    Element e = elem(*A, {{1, 3, 1}});
    int expect[3][3] = {{0, 0, 2}, {0, 0, 2}, {-2, -2, 0}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (g.diag()[i] - g.diag()[j] != expect[i][j]) return false;
    Subspace m = g.piece(Rat(-2));
    if (!check_pair(g, e, Rat(2), m, m).overall) return false;
    if (!is_good_grading(g, e, Rat(2))) return false;
    Sl2Triple tr = adapted_triple(g, e, Rat(2));
    Element t = t_element(g, tr, Rat(2));
    if (elem_zero(t)) return false;  // non-Dynkin: h_Gamma differs from (a/2)h
    note = "degree matrix matches; g_{-2} is an admissible subalgebra; good, non-Dynkin";
    return true;
  });

  // ---- sl_11: no optimal pair ----------------------------------------------
  auto sl11 = padm_testing::cached_algebra(AlgebraKind::parse("sl", 11));
  Grading g11 = Grading::from_diagonal(
      *sl11, rats({"73/11", "40/11", "7/11", "-26/11", "-59/11", "-92/11", "29/11", "-4/11",
                   "-37/11", "51/11", "18/11"}));
  Element e11 = nilpotent_from_partition(*sl11, Partition::parse({6, 3, 2}));

  run.criterion(3, "sl_11 partition (6,3,2): negative centralizer and optimal pair", [&](std::string& note) {
    Subspace neg_cent =
        subspace_intersect(g11.piece_range(Cmp::LT, Rat(0)), sl11->centralizer(e11));
    if (neg_cent.dim() != 1) return false;
    if (!neg_cent.contains(elem(*sl11, {{7, 10, 1}, {8, 11, 1}}))) return false;
    OptimalOutcome oc = optimal_pair(g11, e11, Rat(3));
    if (oc.status != OptimalOutcome::Status::No) return false;
    if (oc.detail.find("-1") == std::string::npos || oc.detail.find("-2") == std::string::npos)
      return false;
    int computed = sl11->centralizer(e11).dim();
    int formula = centralizer_dim_formula_sl(Partition::parse({6, 3, 2}));
    if (computed != formula) return false;
    std::ostringstream os;
    os << "computed dim g^e = " << computed << ", equal to the min-sum formula (not 25); "
       << "no optimal pair, obstruction at degrees (-1,-2)";
    note = os.str();
    return computed == 24;
  });

  // ---- deformation family of the sl_11 instance ----------------------------
  run.criterion(4, "sl_11 deformation family: blocks, p-indices, breakpoints", [&](std::string& note) {
    IsotypicDecomposition dec = isotypic_decompose(g11, e11, Rat(3));
    std::vector<std::pair<int, std::string>> blocks = {
        {8, "1/2"}, {8, "-1/2"}, {6, "1/2"}, {6, "-1/2"}, {4, "1/2"}, {4, "-1/2"},
        {4, "7/2"}, {4, "-7/2"}, {2, "7/2"}, {2, "-7/2"}, {7, "4"},   {7, "-4"},
        {5, "4"},   {5, "-4"}};
    int nonzero = 0;
    for (const IsotypicBlock& b : dec.blocks)
      if (b.lambda != 0) ++nonzero;
    if (nonzero != static_cast<int>(blocks.size())) return false;
    for (const auto& [d, l] : blocks)
      if (!dec.find(d, parse_rat(l))) return false;
    std::vector<std::tuple<int, std::string, int>> pvals = {
        {8, "-1/2", 9}, {6, "-1/2", 7}, {4, "-1/2", 5}, {4, "-7/2", 7},
        {2, "-7/2", 5}, {7, "-4", 11},  {5, "-4", 9}};
    for (const auto& [d, l, p] : pvals)
      if (p_index(*dec.find(d, parse_rat(l)), Rat(3), Rat(1)) != p) return false;
    if (breakpoints(dec) != rats({"3/7", "3/4"})) return false;
    for (int k = 0; k <= 19; ++k) {
      Rat eps(k, 19);
      for (const IsotypicBlock& b : dec.blocks) {
        const IsotypicBlock* nb = dec.find(b.d, -b.lambda);
        if (!nb) return false;
        if (p_index(b, Rat(3), eps) + p_index(*nb, Rat(3), eps) != 2 * b.d + 2) return false;
      }
    }
    note = "14 nonzero blocks, 7 reference p-values, breakpoints {3/7, 3/4}, pairing identity at 20 eps";
    return true;
  });

  // ---- sl_8 partition (4,4): comparable pairs ------------------------------
  run.criterion(5, "sl_8 partition (4,4): two admissible pairs and their witness", [&](std::string& note) {
    auto A = padm_testing::cached_algebra(AlgebraKind::parse("sl", 8));
    Grading g = Grading::from_diagonal(
        *A, rats({"7/2", "1/2", "-5/2", "-11/2", "11/2", "5/2", "-1/2", "-7/2"}));
    Element e = elem(*A, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {5, 6, 1}, {6, 7, 1}, {7, 8, 1}});
    if (A->centralizer(e).dim() != 15) return false;
    Subspace m = subspace_sum(g.piece_range(Cmp::LE, Rat(-3)), g.piece(Rat(-1)));
    Subspace mp = subspace_sum(g.piece_range(Cmp::LE, Rat(-3)),
                               Subspace::from_vectors({elem(*A, {{6, 1, 1}})}, A->dim()));
    Subspace np = subspace_sum(
        mp, Subspace::from_vectors({elem(*A, {{7, 2, 1}}), elem(*A, {{8, 3, 1}}),
                                    elem(*A, {{3, 7, 1}}), elem(*A, {{4, 8, 1}})},
                                   A->dim()));
    if (!check_pair(g, e, Rat(3), m, m).overall) return false;
    if (!check_pair(g, e, Rat(3), mp, np).overall) return false;
    auto w = comparable(g, e, Rat(3), {m, m}, {mp, np});
    if (!w || !(w->lesser.m == m) || !(w->greater.m == mp)) return false;
    note = "dim g^e = 15; both pairs certified; (m,m) precedes (m',n')";
    return true;
  });

  // ---- incomparable pairs and chains through a third pair ------------------
  run.criterion(6, "sl_4 incomparable pairs joined by chains", [&](std::string& note) {
    Subspace low = g4.piece_range(Cmp::LE, Rat(-2));
    auto span1 = Subspace::from_vectors({elem(*sl4, {{2, 1, 1}}), elem(*sl4, {{3, 2, 1}})}, sl4->dim());
    auto span2 = Subspace::from_vectors({elem(*sl4, {{3, 2, 1}}), elem(*sl4, {{4, 3, 1}})}, sl4->dim());
    AdmissiblePair p1{low, subspace_sum(low, span1)};
    AdmissiblePair p2{low, subspace_sum(low, span2)};
    if (comparable(g4, e4, Rat(2), p1, p2)) return false;
    Subspace m3 = subspace_sum(low, Subspace::from_vectors({elem(*sl4, {{3, 2, 1}})}, sl4->dim()));
    EquivalenceChain chain;
    chain.pairs = {p1, {m3, m3}, p2};
    chain.links.push_back({g4, Rat(2), false});
    chain.links.push_back({g4, Rat(2), true});
    if (!verify_chain(e4, chain).ok) return false;

    // cross-grading chain for the rank-one sl_3 nilpotent
    auto A3 = padm_testing::cached_algebra(AlgebraKind::parse("sl", 3));
    Element e3 = elem(*A3, {{1, 3, 1}});
    Grading ga = Grading::from_diagonal(*A3, rats({"2/3", "2/3", "-4/3"}));
    Grading gb = Grading::from_diagonal(*A3, rats({"4/3", "-2/3", "-2/3"}));
    Grading dyn = Grading::from_diagonal(*A3, rats({"1", "0", "-1"}));
    AdmissiblePair pa{ga.piece(Rat(-2)), ga.piece(Rat(-2))};
    AdmissiblePair pb{gb.piece(Rat(-2)), gb.piece(Rat(-2))};
    AdmissiblePair opt{dyn.piece_range(Cmp::LE, Rat(-2)), dyn.piece_range(Cmp::LT, Rat(0))};
    EquivalenceChain cross;
    cross.pairs = {pa, opt, pb};
    cross.links.push_back({dyn, Rat(2), true});
    cross.links.push_back({dyn, Rat(2), false});
    if (!verify_chain(e3, cross).ok) return false;
    note = "three-pair chain and the cross-grading chain both verify";
    return true;
  });

  // ---- randomized property suite -------------------------------------------
  std::vector<Instance> suite;
  {
    using padm_testing::generate_instances;
    auto add = [&](std::vector<Instance> v) {
      for (auto& i : v) suite.push_back(std::move(i));
    };
    add(generate_instances(30, 20240521, {AlgebraType::SL}, 8));
    add(generate_instances(12, 20240522, {AlgebraType::SO}, 8));
    add(generate_instances(12, 20240523, {AlgebraType::SP}, 8));
  }

  run.criterion(7, "property suite over randomized admissible instances", [&](std::string& note) {
    int checked = 0;
    for (const Instance& inst : suite) {
      const MatrixLieAlgebra& A = *inst.algebra;
      if (!is_admissible_grading(inst.grading, inst.e, inst.a)) return false;
      AdmissiblePair p = construct_pair(inst.grading, inst.e, inst.a);
      CheckReport rep = check_pair(inst.grading, inst.e, inst.a, p.m, p.n);
      if (!rep.overall) return false;
      if (!rep.mperp_bounded || !rep.dims_even) return false;
      Subspace s = slice_complement(inst.grading, inst.e, p);
      if (s.dim() != A.centralizer(inst.e).dim()) return false;
      Subspace cent = A.centralizer(inst.e);
      for (const Rat& j : inst.grading.occupied_degrees()) {
        Rat b = -j;
        if (!(b > 0 && 2 * b <= inst.a)) continue;
        Subspace gb = inst.grading.piece(-b);
        Subspace gba = inst.grading.piece(b - inst.a);
        int target = gb.dim() - subspace_intersect(gb, cent).dim();
        int u = subspace_intersect(p.n, gba).dim();
        int v2 = subspace_intersect(p.m, gb).dim();
        int u2 = subspace_intersect(p.m, gba).dim();
        int v = subspace_intersect(p.n, gb).dim();
        if (u + v2 != target || u2 + v != target) return false;
      }
      ++checked;
    }
    // criterion-vs-construction agreement on a non-admissible grading
    auto A3 = padm_testing::cached_algebra(AlgebraKind::parse("sl", 3));
    Element e = elem(*A3, {{1, 2, 1}});
    Grading bad = Grading::from_diagonal(*A3, rats({"2", "0", "-2"}));
    if (is_admissible_grading(bad, e, Rat(2))) return false;
    bool threw = false;
    try {
      construct_pair(bad, e, Rat(2));
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    if (!threw) return false;
    std::ostringstream os;
    os << checked << " instances: self-certification, slice decomposition, degree-wise "
       << "dimension identity, parity and orthogonality bounds; criterion agreement on a "
       << "non-admissible grading";
    note = os.str();
    return checked >= 50;
  });

  run.criterion(8, "connectivity certificates on fixed and randomized gradings", [&](std::string& note) {
    auto A3 = padm_testing::cached_algebra(AlgebraKind::parse("sl", 3));
    Grading g3 = Grading::from_diagonal(*A3, rats({"2/3", "2/3", "-4/3"}));
    Element e3 = elem(*A3, {{1, 3, 1}});
    if (!connect_to_dynkin(g3, e3, Rat(2)).verified) return false;
    if (!connect_to_dynkin(g4, e4, Rat(2)).verified) return false;
    ConnectivityCertificate c11 = connect_to_dynkin(g11, e11, Rat(3));
    if (!c11.verified || c11.break_points != rats({"3/7", "3/4"})) return false;
    auto rand_insts = padm_testing::generate_instances(20, 20240524, {AlgebraType::SL}, 7);
    int steps = 0;
    for (const Instance& inst : rand_insts) {
      ConnectivityCertificate cert = connect_to_dynkin(inst.grading, inst.e, inst.a);
      if (!cert.verified) return false;
      for (const ConnectStep& s : cert.steps)
        if (!s.report_from.overall || !s.report_to.overall) return false;
      steps += static_cast<int>(cert.steps.size());
    }
    std::ostringstream os;
    os << "fixed gradings plus 20 randomized ones; " << steps << " dual-certified random steps";
    note = os.str();
    return true;
  });

  run.criterion(9, "rank classifier against brute force for n <= 8", [&](std::string& note) {
    int count = 0;
    for (AlgebraType t : {AlgebraType::SL, AlgebraType::SO, AlgebraType::SP}) {
      for (int n = 2; n <= 8; ++n) {
        if (t == AlgebraType::SP && n % 2) continue;
        AlgebraKind kind{t, n};
        auto A = padm_testing::cached_algebra(kind);
        for (const Partition& p : padm_testing::valid_partitions(kind, false)) {
          PartitionRep rep = partition_rep(*A, p);
          Element h = A->from_diag(rep.h_diag);
          RankClass rc = rank_classifier(kind, p);
          if (toral_rank_of_triple_centralizer(*A, rep.e, h) != rc.rank) return false;
          if (t == AlgebraType::SL && (rc.rank == 1) != (p.parts.size() == 2)) return false;
          ++count;
        }
      }
    }
    std::ostringstream os;
    os << count << " partitions across the three classical families";
    note = os.str();
    return true;
  });

  run.criterion(10, "b-optimal chains across the randomized suite", [&](std::string& note) {
    int chained = 0, dynkin_checked = 0;
    for (const Instance& inst : suite) {
      Rat b = inst.a / 2;
      if (!is_b_optimal(inst.grading, inst.e, inst.a, b)) continue;
      AdmissiblePair start = construct_pair(inst.grading, inst.e, inst.a);
      EquivalenceChain chain = b_optimal_chain(inst.grading, inst.e, inst.a, b, start);
      if (!verify_chain(inst.e, chain).ok) return false;
      OptimalOutcome oc = optimal_pair(inst.grading, inst.e, inst.a);
      if (oc.status == OptimalOutcome::Status::Yes) {
        EquivalenceChain c2 = b_optimal_chain(inst.grading, inst.e, inst.a, b, *oc.pair);
        if (!verify_chain(inst.e, c2).ok) return false;
      }
      ++chained;
      if (inst.dynkin_scaled && inst.a == 2) {
        if (!(chain.pairs.back().m == inst.grading.piece_range(Cmp::LE, Rat(-2)))) return false;
        if (!(chain.pairs.back().n == inst.grading.piece_range(Cmp::LT, Rat(0)))) return false;
        ++dynkin_checked;
      }
    }
    // make sure the Dynkin endpoint clause is exercised
    auto A = padm_testing::cached_algebra(AlgebraKind::parse("sl", 6));
    PartitionRep rep = partition_rep(*A, Partition::parse({3, 2, 1}));
    Grading dyn = Grading::from_diagonal(*A, rep.h_diag);
    AdmissiblePair start = construct_pair(dyn, rep.e, Rat(2));
    EquivalenceChain chain = b_optimal_chain(dyn, rep.e, Rat(2), Rat(1), start);
    if (!verify_chain(rep.e, chain).ok) return false;
    if (!(chain.pairs.back().m == dyn.piece_range(Cmp::LE, Rat(-2)))) return false;
    if (!(chain.pairs.back().n == dyn.piece_range(Cmp::LT, Rat(0)))) return false;
    std::ostringstream os;
    os << chained << " b-optimal instances chained (" << dynkin_checked
       << " Dynkin endpoints checked) plus the sl_6 Dynkin case";
    note = os.str();
    return chained > 0;
  });

  std::printf("acceptance: %d/10 criteria passed\n", 10 - run.failures);
  return run.failures == 0 ? 0 : 1;
}
