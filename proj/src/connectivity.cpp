#include "padm/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace padm {

Grading deform(const Grading& g, const IsotypicDecomposition& dec, const Rat& eps) {
  if (eps < 0 || eps > 1) throw std::invalid_argument("deform: eps outside [0,1]");
  const MatrixLieAlgebra& A = g.algebra();
  QMatrix hm = A.to_matrix(dec.triple.h);
  std::vector<Rat> d(A.n());
  for (int i = 0; i < A.n(); ++i) d[i] = (dec.a / 2) * hm.at(i, i) + eps * dec.t_diag[i];
  return Grading::from_diagonal(A, d);
}

Rat rho_eps(const IsotypicBlock& blk, const Rat& a, const Rat& eps) {
  return -(a / 2) * (blk.d - 1) + eps * blk.lambda;
}

int p_index(const IsotypicBlock& blk, const Rat& a, const Rat& eps) {
  if (eps < 0 || eps > 1) throw std::invalid_argument("p_index: eps outside [0,1]");
  Rat rho = rho_eps(blk, a, eps);
  if (rho > 0) return 1;
  for (int s = 0; s < blk.d; ++s)
    if (rho + s * a == 0) return 2 * (s + 1);
  if (rho + (blk.d - 1) * a < 0) return 2 * blk.d + 1;
  for (int s = 0; s + 1 < blk.d; ++s)
    if (rho + s * a < 0 && 0 < rho + (s + 1) * a) return 2 * (s + 1) + 1;
  throw std::logic_error("p_index: ladder inspection failed");
}

std::vector<Rat> breakpoints(const IsotypicDecomposition& dec) {
  std::vector<Rat> eps;
  for (const IsotypicBlock& b : dec.blocks) {
    if (b.lambda == 0) continue;
    for (int k = 1; k <= b.d; ++k) {
      // p^(eps) = 2k exactly when rho^(eps) + (k-1) a = 0
      Rat val = ((dec.a / 2) * (b.d - 1) - (k - 1) * dec.a) / b.lambda;
      if (val > 0 && val < 1) eps.push_back(val);
    }
  }
  std::sort(eps.begin(), eps.end(), RatLess{});
  eps.erase(std::unique(eps.begin(), eps.end()), eps.end());
  return eps;
}

namespace {

// Layers l = lo..hi of a block, empty when the range is.
Subspace layer_range(const MatrixLieAlgebra& A, const IsotypicBlock& b, int lo, int hi) {
  Subspace s = Subspace::zero(A.dim());
  for (int l = std::max(lo, 0); l <= hi && l < b.d; ++l) s = subspace_sum(s, b.layers[l]);
  return s;
}

// Layers of blk with degree < 0 (strict) under eps: count = negatives in the ladder.
int negative_layer_count(const IsotypicBlock& blk, const Rat& a, const Rat& eps) {
  Rat rho = rho_eps(blk, a, eps);
  int c = 0;
  for (int l = 0; l < blk.d; ++l)
    if (rho + l * a < 0) ++c;
  return c;
}

int le_minus_a_layer_count(const IsotypicBlock& blk, const Rat& a, const Rat& eps) {
  Rat rho = rho_eps(blk, a, eps);
  int c = 0;
  for (int l = 0; l < blk.d; ++l)
    if (rho + l * a <= -a) ++c;
  return c;
}

}  // namespace

CommonPair common_pair(const Grading& g, const Element& e, const IsotypicDecomposition& dec,
                       const Rat& eps, const Rat& eps2) {
  const MatrixLieAlgebra& A = g.algebra();
  const Rat& a = dec.a;
  Subspace m = Subspace::zero(A.dim());
  Subspace n = Subspace::zero(A.dim());

  for (const IsotypicBlock& blk : dec.blocks) {
    if (blk.lambda < 0) continue;
    const IsotypicBlock* negp = dec.find(blk.d, -blk.lambda);
    if (!negp) throw std::logic_error("missing partner block");
    const IsotypicBlock& neg = *negp;
    int d = blk.d;
    int p1 = p_index(blk, a, eps);
    int p2 = p_index(blk, a, eps2);
    if (std::abs(p1 - p2) > 1)
      throw std::invalid_argument("common_pair: p-index gap exceeds 1 on a block");

    Subspace bm(Subspace::zero(A.dim())), bn(Subspace::zero(A.dim()));
    if (p1 == p2) {
      if (blk.lambda == 0) {
        bm = layer_range(A, blk, 0, le_minus_a_layer_count(blk, a, eps) - 1);
        bn = layer_range(A, blk, 0, negative_layer_count(blk, a, eps) - 1);
      } else if (p1 % 2 == 0 || p1 == 1 || p1 == 2 * d + 1) {
        bm = subspace_sum(layer_range(A, blk, 0, le_minus_a_layer_count(blk, a, eps) - 1),
                          layer_range(A, neg, 0, le_minus_a_layer_count(neg, a, eps) - 1));
        bn = bm;
      } else {
        int k = (p1 - 1) / 2;
        Rat lhs = rho_eps(blk, a, eps) + (k - 1) * a;
        Rat rhs = rho_eps(neg, a, eps) + (d - k - 1) * a;
        if (lhs <= rhs) {
          bm = subspace_sum(layer_range(A, blk, 0, negative_layer_count(blk, a, eps) - 1),
                            layer_range(A, neg, 0, le_minus_a_layer_count(neg, a, eps) - 1));
        } else {
          bm = subspace_sum(layer_range(A, blk, 0, le_minus_a_layer_count(blk, a, eps) - 1),
                            layer_range(A, neg, 0, negative_layer_count(neg, a, eps) - 1));
        }
        bn = bm;
      }
    } else {
      int pe = (p1 % 2 == 0) ? p1 : p2;
      if (pe % 2 != 0) throw std::logic_error("common_pair: no even p-index in a gap case");
      int k = pe / 2;
      bm = subspace_sum(layer_range(A, blk, 0, k - 2), layer_range(A, neg, 0, d - k - 1));
      bn = bm;
    }
    m = subspace_sum(m, bm);
    n = subspace_sum(n, bn);
  }

  CommonPair cp;
  cp.pair = {m, n};
  Grading g1 = deform(g, dec, eps);
  Grading g2 = deform(g, dec, eps2);
  cp.report_eps = check_pair(g1, e, a, m, n);
  cp.report_eps2 = check_pair(g2, e, a, m, n);
  if (!cp.report_eps.overall || !cp.report_eps2.overall)
    throw std::logic_error("common_pair: dual certification failed");
  return cp;
}

ConnectivityCertificate connect_to_dynkin(const Grading& g, const Element& e, const Rat& a) {
  if (!is_admissible_grading(g, e, a))
    throw std::invalid_argument("connect_to_dynkin: grading not admissible for e");
  IsotypicDecomposition dec = isotypic_decompose(g, e, a);
  ConnectivityCertificate cert;
  cert.a = a;
  cert.break_points = breakpoints(dec);

  bool t_zero = true;
  for (const Rat& x : dec.t_diag) t_zero = t_zero && x == 0;

  if (t_zero) {
    // All deformed gradings coincide: a single step certifies adjacency.
    cert.chain = {Rat(0), Rat(1)};
  } else {
    std::vector<Rat> knots;
    knots.push_back(Rat(0));
    for (const Rat& b : cert.break_points) knots.push_back(b);
    knots.push_back(Rat(1));
    cert.chain.clear();
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
      cert.chain.push_back(knots[i]);
      cert.chain.push_back((knots[i] + knots[i + 1]) / 2);
    }
    cert.chain.push_back(Rat(1));
  }

  for (size_t i = 0; i + 1 < cert.chain.size(); ++i) {
    CommonPair cp = common_pair(g, e, dec, cert.chain[i], cert.chain[i + 1]);
    ConnectStep step;
    step.eps_from = cert.chain[i];
    step.eps_to = cert.chain[i + 1];
    step.pair = cp.pair;
    step.report_from = cp.report_eps;
    step.report_to = cp.report_eps2;
    cert.steps.push_back(std::move(step));
  }
  cert.verified = true;
  return cert;
}

bool verify_certificate(const Grading& g, const Element& e, const IsotypicDecomposition& dec,
                        ConnectivityCertificate& cert) {
  for (ConnectStep& s : cert.steps) {
    Grading g1 = deform(g, dec, s.eps_from);
    Grading g2 = deform(g, dec, s.eps_to);
    s.report_from = check_pair(g1, e, cert.a, s.pair.m, s.pair.n);
    s.report_to = check_pair(g2, e, cert.a, s.pair.m, s.pair.n);
    if (!s.report_from.overall || !s.report_to.overall) {
      cert.verified = false;
      return false;
    }
  }
  cert.verified = true;
  return cert.verified;
}

}  // namespace padm
