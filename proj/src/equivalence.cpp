#include "padm/equivalence.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace padm {

namespace {

bool nested(const AdmissiblePair& lesser, const AdmissiblePair& greater) {
  return lesser.m.contains(greater.m) && lesser.n.contains(lesser.m) &&
         greater.n.contains(lesser.n);
}

void append_pair(EquivalenceChain& chain, const Grading& g, const Rat& a,
                 const AdmissiblePair& next, bool left_is_lesser) {
  if (chain.pairs.back().m == next.m && chain.pairs.back().n == next.n) return;
  chain.links.push_back({g, a, left_is_lesser});
  chain.pairs.push_back(next);
}

void certify_or_throw(const Grading& g, const Element& e, const Rat& a, const AdmissiblePair& p,
                      const char* who) {
  CheckReport r = check_pair(g, e, a, p.m, p.n);
  if (!r.overall)
    throw std::logic_error(std::string(who) + ": constructed pair failed certification: " +
                           r.summary());
}

}  // namespace

std::optional<ComparabilityWitness> comparable(const Grading& g, const Element& e, const Rat& a,
                                               const AdmissiblePair& p1, const AdmissiblePair& p2) {
  CheckReport r1 = check_pair(g, e, a, p1.m, p1.n);
  CheckReport r2 = check_pair(g, e, a, p2.m, p2.n);
  if (!r1.overall || !r2.overall)
    throw std::invalid_argument("comparable: pairs are not certified under the grading");
  if (nested(p1, p2)) return ComparabilityWitness{g, a, p1, p2, false};
  if (nested(p2, p1)) return ComparabilityWitness{g, a, p2, p1, true};
  return std::nullopt;
}

ChainVerdict verify_chain(const Element& e, const EquivalenceChain& chain) {
  if (chain.pairs.empty()) return {false, "empty chain"};
  if (chain.links.size() + 1 != chain.pairs.size()) return {false, "link/pair count mismatch"};
  for (size_t i = 0; i < chain.links.size(); ++i) {
    const ChainLink& l = chain.links[i];
    const AdmissiblePair& left = chain.pairs[i];
    const AdmissiblePair& right = chain.pairs[i + 1];
    CheckReport rl = check_pair(l.grading, e, l.a, left.m, left.n);
    CheckReport rr = check_pair(l.grading, e, l.a, right.m, right.n);
    std::ostringstream os;
    if (!rl.overall || !rr.overall) {
      os << "link " << i << ": pair certification failed (" << (rl.overall ? "right" : "left")
         << ")";
      return {false, os.str()};
    }
    const AdmissiblePair& lesser = l.left_is_lesser ? left : right;
    const AdmissiblePair& greater = l.left_is_lesser ? right : left;
    if (!nested(lesser, greater)) {
      os << "link " << i << ": nesting fails";
      return {false, os.str()};
    }
  }
  return {true, ""};
}

namespace {

struct ComplementContext {
  const Grading& g;
  const Element& e;
  const Rat& a;
  Subspace ambient_piece;  // g_{deg_u}
  Subspace cent_piece;     // g^e ∩ g_{deg_u}
};

bool is_complement(const ComplementContext& ctx, const Subspace& w) {
  return w.dim() + ctx.cent_piece.dim() == ctx.ambient_piece.dim() &&
         subspace_intersect(w, ctx.cent_piece).is_zero() && ctx.ambient_piece.contains(w);
}

const std::vector<std::pair<int, int>> kAlphaBeta = {
    {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {1, 4}, {4, 1}};

// Interior family: P(W) = (base, base ⊕ W) over
// complements W of g^e_{-a/2} in g_{-a/2}, base = g_{< -a/2}.
struct InteriorFamily {
  const ComplementContext& ctx;
  Subspace base;

  AdmissiblePair endpoint(const Subspace& w) const {
    return {base, subspace_sum(base, w)};
  }

  void codim1(const Subspace& u, const Subspace& v, EquivalenceChain& chain) const {
    const MatrixLieAlgebra& A = ctx.g.algebra();
    Subspace x = subspace_intersect(u, v);
    QMatrix gram = phi_e_gram(A, ctx.e, x, x);
    Subspace kern = kernel(gram);
    if (kern.is_zero()) throw std::logic_error("interior step: pairing kernel is zero");
    std::vector<Rat> lift(A.dim(), Rat(0));
    std::vector<Rat> coeff = kern.basis_vector(0);
    for (int k = 0; k < x.dim(); ++k)
      if (coeff[k] != 0)
        for (int t = 0; t < A.dim(); ++t) lift[t] += coeff[k] * x.basis().at(k, t);
    Subspace d = Subspace::from_vectors({lift}, A.dim());
    AdmissiblePair mid{subspace_sum(base, d), subspace_sum(base, x)};
    certify_or_throw(ctx.g, ctx.e, ctx.a, mid, "interior step");
    // P(U) ⪰ mid ⪯ P(V)
    append_pair(chain, ctx.g, ctx.a, mid, false);
    append_pair(chain, ctx.g, ctx.a, endpoint(v), true);
  }
};

// Two-level family:
// P(W) = (g_{<= -a} ⊕ W ⊕ fixed, same); the connecting line D lives in deg_d.
struct TwoLevelFamily {
  const ComplementContext& ctx;
  Subspace low_and_fixed;  // g_{<= -a} ⊕ fixed
  Rat deg_d;

  AdmissiblePair endpoint(const Subspace& w) const {
    Subspace m = subspace_sum(low_and_fixed, w);
    return {m, m};
  }

  void codim1(const Subspace& u, const Subspace& v, EquivalenceChain& chain) const {
    const MatrixLieAlgebra& A = ctx.g.algebra();
    Subspace x = subspace_intersect(u, v);
    QMatrix ad_e = A.ad_matrix(ctx.e);
    std::vector<std::vector<Rat>> imgs;
    for (int i = 0; i < x.dim(); ++i) imgs.push_back(mat_vec(ad_e, x.basis_vector(i)));
    Subspace ex = Subspace::from_vectors(imgs, A.dim());
    Subspace gd = ctx.g.piece(deg_d);
    Subspace t = subspace_intersect(gd, orth_complement(ex, A.form_gram(), Subspace::full(A.dim())));
    Subspace cent_d = subspace_intersect(gd, A.centralizer(ctx.e));
    Subspace d = complement_avoiding(cent_d, t, Subspace::zero(A.dim()));
    if (d.dim() != 1) throw std::logic_error("two-level step: connecting line not one-dimensional");
    AdmissiblePair a_u{subspace_sum(low_and_fixed, x), subspace_sum(subspace_sum(low_and_fixed, u), d)};
    AdmissiblePair a_v{subspace_sum(low_and_fixed, x), subspace_sum(subspace_sum(low_and_fixed, v), d)};
    Subspace mid_m = subspace_sum(subspace_sum(low_and_fixed, x), d);
    AdmissiblePair mid{mid_m, mid_m};
    certify_or_throw(ctx.g, ctx.e, ctx.a, a_u, "two-level step");
    certify_or_throw(ctx.g, ctx.e, ctx.a, a_v, "two-level step");
    certify_or_throw(ctx.g, ctx.e, ctx.a, mid, "two-level step");
    // P(U) ⪯ A_U ⪰ mid ⪯ A_V ⪰ P(V)
    append_pair(chain, ctx.g, ctx.a, a_u, true);
    append_pair(chain, ctx.g, ctx.a, mid, false);
    append_pair(chain, ctx.g, ctx.a, a_v, true);
    append_pair(chain, ctx.g, ctx.a, endpoint(v), false);
  }
};

template <typename Family>
void link_recursive(const ComplementContext& ctx, const Family& fam, const Subspace& u,
                    const Subspace& v, EquivalenceChain& chain) {
  if (u == v) return;
  const MatrixLieAlgebra& A = ctx.g.algebra();
  Subspace x = subspace_intersect(u, v);
  int c = u.dim() - x.dim();
  if (c <= 0) throw std::logic_error("link_recursive: complements not transverse");
  if (c == 1) {
    fam.codim1(u, v, chain);
    return;
  }
  Subspace us = complement_within(x, u);
  Subspace vs = complement_within(x, v);
  for (const auto& [alpha, beta] : kAlphaBeta) {
    std::vector<Rat> mix_u(A.dim(), Rat(0)), mix_v(A.dim(), Rat(0));
    std::vector<Rat> uc = us.basis_vector(c - 1), vc = vs.basis_vector(c - 1);
    for (int t = 0; t < A.dim(); ++t) {
      mix_u[t] = alpha * uc[t] + beta * vc[t];
      mix_v[t] = alpha * vc[t] + beta * uc[t];
    }
    std::vector<std::vector<Rat>> urows, vrows;
    for (int i = 0; i + 1 < c; ++i) {
      urows.push_back(us.basis_vector(i));
      vrows.push_back(vs.basis_vector(i));
    }
    urows.push_back(mix_u);
    vrows.push_back(mix_v);
    Subspace uab = subspace_sum(x, Subspace::from_vectors(urows, A.dim()));
    Subspace vab = subspace_sum(x, Subspace::from_vectors(vrows, A.dim()));
    if (!is_complement(ctx, uab) || !is_complement(ctx, vab)) continue;
    if (subspace_intersect(u, uab).dim() != u.dim() - 1) continue;
    if (subspace_intersect(v, vab).dim() != v.dim() - 1) continue;
    if (subspace_intersect(uab, vab).dim() != uab.dim() - (c - 1)) continue;
    link_recursive(ctx, fam, u, uab, chain);
    link_recursive(ctx, fam, uab, vab, chain);
    link_recursive(ctx, fam, vab, v, chain);
    return;
  }
  throw std::logic_error("link_recursive: no admissible interpolation coefficients");
}

}  // namespace

EquivalenceChain b_optimal_chain(const Grading& g, const Element& e, const Rat& a, const Rat& b,
                                 const AdmissiblePair& pair) {
  const MatrixLieAlgebra& A = g.algebra();
  if (!is_b_optimal(g, e, a, b)) throw std::invalid_argument("b_optimal_chain: grading not b-optimal");
  certify_or_throw(g, e, a, pair, "b_optimal_chain input");

  EquivalenceChain chain;
  chain.pairs.push_back(pair);

  Rat half = a / 2;
  Subspace base = g.piece_range(Cmp::LT, -half);
  Subspace ghalf = g.piece(-half);
  Subspace cent = A.centralizer(e);
  Subspace cent_half = subspace_intersect(ghalf, cent);

  GradedComponents mc = graded_components(g, pair.m);
  GradedComponents nc = graded_components(g, pair.n);
  auto piece_of = [&](const GradedComponents& gc, const Rat& j) {
    auto it = gc.components.find(j);
    return it == gc.components.end() ? Subspace::zero(A.dim()) : it->second;
  };

  Subspace n_half = piece_of(nc, -half);
  Subspace u = complement_avoiding(cent_half, ghalf, n_half);

  // (m, n) ⪯ (m', n') ⪰ (m'', n'') = P(U)
  Subspace mprime = g.piece_range(Cmp::LE, -a);
  for (const auto& [j, piece] : mc.components)
    if (j > -a && j < -half) mprime = subspace_sum(mprime, piece);
  Subspace nprime = base;
  for (const auto& [j, piece] : nc.components)
    if (j > -half && j < 0) nprime = subspace_sum(nprime, piece);
  nprime = subspace_sum(nprime, u);
  AdmissiblePair prime{mprime, nprime};
  certify_or_throw(g, e, a, prime, "b_optimal_chain intermediate");
  append_pair(chain, g, a, prime, true);

  ComplementContext ctx{g, e, a, ghalf, cent_half};
  InteriorFamily fam{ctx, base};
  AdmissiblePair pu = fam.endpoint(u);
  certify_or_throw(g, e, a, pu, "b_optimal_chain P(U)");
  append_pair(chain, g, a, pu, false);

  Subspace u0 = complement_avoiding(cent_half, ghalf, Subspace::zero(A.dim()));
  link_recursive(ctx, fam, u, u0, chain);

  ChainVerdict v = verify_chain(e, chain);
  if (!v.ok) throw std::logic_error("b_optimal_chain: chain failed verification: " + v.locus);
  return chain;
}

void link_complements_two_level(const Grading& g, const Element& e, const Rat& a,
                                const Subspace& fixed, const Rat& deg_u, const Rat& deg_d,
                                const Subspace& u, const Subspace& v, EquivalenceChain& chain) {
  const MatrixLieAlgebra& A = g.algebra();
  Subspace gu = g.piece(deg_u);
  ComplementContext ctx{g, e, a, gu, subspace_intersect(gu, A.centralizer(e))};
  TwoLevelFamily fam{ctx, subspace_sum(g.piece_range(Cmp::LE, -a), fixed), deg_d};
  link_recursive(ctx, fam, u, v, chain);
}

EquivalenceChain two_level_chain(const Grading& g, const Element& e, const Rat& a, const Rat& b,
                                 const AdmissiblePair& pair) {
  const MatrixLieAlgebra& A = g.algebra();
  if (!(b > 0 && 2 * b <= a)) throw std::invalid_argument("two_level_chain: b outside (0, a/2]");
  for (const Rat& j : g.occupied_degrees())
    if (j < 0 && j > -a && j != b - a && j != -b)
      throw std::invalid_argument("two_level_chain: negative part is not g_{<=-a} ⊕ (g_{b-a} + g_{-b})");
  certify_or_throw(g, e, a, pair, "two_level_chain input");

  Subspace cent = A.centralizer(e);
  Subspace gba = g.piece(b - a);
  Subspace cent_ba = subspace_intersect(gba, cent);

  if (b == a / 2 || cent_ba.is_zero()) {
    EquivalenceChain chain = b_optimal_chain(g, e, a, b, pair);
    // Close with the two-level canonical endpoint (g_{<=-a} ⊕ U0, same).
    Subspace u0 = complement_avoiding(cent_ba, gba, Subspace::zero(A.dim()));
    Subspace m0 = subspace_sum(g.piece_range(Cmp::LE, -a), u0);
    AdmissiblePair endpoint{m0, m0};
    if (!(endpoint.m == chain.pairs.back().m && endpoint.n == chain.pairs.back().n)) {
      certify_or_throw(g, e, a, endpoint, "two_level_chain endpoint");
      append_pair(chain, g, a, endpoint, true);
    }
    ChainVerdict v = verify_chain(e, chain);
    if (!v.ok) throw std::logic_error("two_level_chain: chain failed verification: " + v.locus);
    return chain;
  }

  EquivalenceChain chain;
  chain.pairs.push_back(pair);
  Subspace low = g.piece_range(Cmp::LE, -a);

  GradedComponents mc = graded_components(g, pair.m);
  GradedComponents nc = graded_components(g, pair.n);
  auto piece_of = [&](const GradedComponents& gc, const Rat& j) {
    auto it = gc.components.find(j);
    return it == gc.components.end() ? Subspace::zero(A.dim()) : it->second;
  };
  Subspace u2 = piece_of(mc, b - a);   // U''
  Subspace v1 = piece_of(nc, -b);      // V'
  Subspace u1 = piece_of(nc, b - a);   // U'
  Subspace u = complement_avoiding(cent_ba, gba, u1);

  AdmissiblePair prime{subspace_sum(low, u2), subspace_sum(subspace_sum(low, u), v1)};
  certify_or_throw(g, e, a, prime, "two_level_chain intermediate");
  append_pair(chain, g, a, prime, true);

  Subspace mu = subspace_sum(low, u);
  AdmissiblePair pu{mu, mu};
  certify_or_throw(g, e, a, pu, "two_level_chain P(U)");
  append_pair(chain, g, a, pu, false);

  Subspace u0 = complement_avoiding(cent_ba, gba, Subspace::zero(A.dim()));
  link_complements_two_level(g, e, a, Subspace::zero(A.dim()), b - a, -b, u, u0, chain);

  ChainVerdict v = verify_chain(e, chain);
  if (!v.ok) throw std::logic_error("two_level_chain: chain failed verification: " + v.locus);
  return chain;
}

RankClass rank_classifier(const AlgebraKind& kind, const Partition& p) {
  std::string why;
  if (!partition_valid_for(kind, p, &why)) throw std::invalid_argument("rank_classifier: " + why);
  RankClass rc;
  rc.kind = kind;
  rc.partition = p;
  auto mult = p.multiplicities();
  int m = static_cast<int>(p.parts.size());

  if (kind.type == AlgebraType::SL) {
    rc.rank = m - 1;
    if (rc.rank == 0)
      rc.iso_class = "zero";
    else if (rc.rank == 1) {
      rc.iso_class = p.parts[0] == p.parts[1] ? "sl2" : "abelian";
      rc.case_label = "two-row";
    } else
      rc.iso_class = "higher";
    return rc;
  }

  // so: Π so_{r_s} (s odd) × Π sp_{r_s} (s even); sp: the two products swap.
  // The parity rules force r even on every sp factor, so rk = floor(r/2)
  // throughout.
  bool is_so = kind.type == AlgebraType::SO;
  int rank = 0;
  for (const auto& [s, r] : mult) {
    (void)s;
    rank += r / 2;
  }
  rc.rank = rank;
  if (rank == 0) {
    rc.iso_class = "zero";
    return rc;
  }
  if (rank > 1) {
    rc.iso_class = "higher";
    return rc;
  }
  // rank 1: identify the unique contributing factor
  for (const auto& [s, r] : mult) {
    bool so_factor = is_so ? (s % 2 == 1) : (s % 2 == 0);
    if (r / 2 == 0) continue;
    const char* parity = s % 2 ? "odd" : "even";
    if (!so_factor && r == 2) {
      rc.iso_class = "sl2";  // sp_2 factor
      rc.case_label = std::string(parity) + "-pair";
    } else if (so_factor && r == 2) {
      rc.iso_class = "abelian";  // so_2 factor
      rc.case_label = std::string(parity) + "-pair";
    } else if (so_factor && r == 3) {
      rc.iso_class = "so3";
      rc.case_label = std::string(parity) + "-triple";
    }
  }
  return rc;
}

int toral_rank_of_triple_centralizer(const MatrixLieAlgebra& A, const Element& e,
                                     const Element& h) {
  Subspace z = subspace_intersect(A.centralizer(e), A.centralizer(h));
  int zd = z.dim();
  if (zd == 0) return 0;
  // Bracket of z in z-coordinates; z is a subalgebra.
  std::vector<Element> zb;
  for (int i = 0; i < zd; ++i) zb.push_back(z.basis_vector(i));
  auto ad_in_z = [&](const Element& x) {
    QMatrix ad(zd, zd);
    for (int j = 0; j < zd; ++j) {
      Element br = A.bracket(x, zb[j]);
      std::vector<Rat> res = z.reduce(br);
      for (const Rat& c : res)
        if (c != 0) throw std::logic_error("toral rank: bracket escapes the centralizer");
      // coordinates against the echelon basis
      for (int i = 0; i < zd; ++i) {
        ad.at(i, j) = br[z.pivots()[i]];
      }
    }
    return ad;
  };
  int best = zd;
  std::mt19937_64 rng(0x51ed270b);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 24 && best > 0; ++trial) {
    Element x(A.dim(), Rat(0));
    for (int i = 0; i < zd; ++i) {
      int c = trial == 0 ? 1 + i : coef(rng);
      for (int t = 0; t < A.dim(); ++t) x[t] += c * zb[i][t];
    }
    best = std::min(best, kernel(ad_in_z(x)).dim());
  }
  return best;
}

const std::vector<ExceptionalOrbit>& exceptional_rank1_table() {
  static const std::vector<ExceptionalOrbit> table = {
      {"G2", "A_1", "1 0", 6},
      {"G2", "A~_1", "0 1", 8},
      {"F4", "A_2+A~_1", "0 0 1 0", 34},
      {"F4", "A~_2+A_1", "0 1 0 1", 36},
      {"F4", "C_3(a_1)", "1 0 1 0", 38},
      {"F4", "B_3", "2 2 0 0", 42},
      {"F4", "C_3", "1 0 1 2", 36},
      {"E6", "2A_2+A_1", "1 0 1 0 1 0", 54},
      {"E6", "A_4+A_1", "1 1 0 1 1 1", 62},
      {"E6", "A_5", "2 1 0 1 2 1", 64},
      {"E6", "D_5(a_1)", "1 1 0 1 1 2", 64},
      {"E6", "D_5", "2 0 2 0 2 2", 68},
  };
  return table;
}

}  // namespace padm
