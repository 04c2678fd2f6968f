#include "padm/sl2.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace padm {

namespace {

bool is_zero_elem(const Element& x) {
  for (const Rat& c : x)
    if (c != 0) return false;
  return true;
}

Element scaled(const Element& x, const Rat& k) {
  Element y = x;
  for (Rat& c : y) c *= k;
  return y;
}

}  // namespace

const IsotypicBlock* IsotypicDecomposition::find(int d, const Rat& lambda) const {
  for (const IsotypicBlock& b : blocks)
    if (b.d == d && b.lambda == lambda) return &b;
  return nullptr;
}

std::vector<Rat> IsotypicDecomposition::t_eigenvalues() const {
  std::vector<Rat> vals;
  for (const IsotypicBlock& b : blocks) vals.push_back(b.lambda);
  std::sort(vals.begin(), vals.end(), RatLess{});
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

Sl2Triple adapted_triple(const Grading& g, const Element& e, const Rat& a) {
  const MatrixLieAlgebra& A = g.algebra();
  int n = A.n();
  std::optional<Rat> de = g.degree_of(e);
  if (!de || *de != a) throw std::invalid_argument("adapted_triple: e not homogeneous of degree a");
  if (a <= 0) throw std::invalid_argument("adapted_triple: a must be positive");

  // Stage 1: diagonal h with [h, e] = 2e inside the algebra.
  QMatrix em = A.to_matrix(e);
  std::vector<std::pair<std::vector<Rat>, Rat>> eqs;  // row over diag unknowns, rhs
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (em.at(i, j) != 0) {
        std::vector<Rat> row(n, Rat(0));
        row[i] += 1;
        row[j] -= 1;
        eqs.push_back({row, Rat(2)});
      }
  if (A.kind().type == AlgebraType::SL) {
    eqs.push_back({std::vector<Rat>(n, Rat(1)), Rat(0)});
  } else {
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> row(n, Rat(0));
      row[i] += 1;
      row[n - 1 - i] += 1;
      eqs.push_back({row, Rat(0)});
    }
  }
  QMatrix M(static_cast<int>(eqs.size()), n);
  std::vector<Rat> rhs(eqs.size());
  for (size_t i = 0; i < eqs.size(); ++i) {
    M.set_row(static_cast<int>(i), eqs[i].first);
    rhs[i] = eqs[i].second;
  }
  auto x0 = solve_linear(M, rhs);
  if (!x0) throw std::invalid_argument("adapted_triple: no diagonal h with [h,e] = 2e");
  Subspace hdirs = kernel(M);

  // Stage 2: f in g_{-a} with [e, f] = h, h ranging over the stage-1 family.
  Subspace gminus = g.piece(-a);
  int dim = A.dim();
  int nf = gminus.dim(), nh = hdirs.dim();
  QMatrix sys(dim, nf + nh);
  for (int j = 0; j < nf; ++j) {
    Element col = A.bracket(e, gminus.basis_vector(j));
    for (int i = 0; i < dim; ++i) sys.at(i, j) = col[i];
  }
  for (int k = 0; k < nh; ++k) {
    std::vector<Rat> dk = hdirs.basis_vector(k);
    Element hk = A.from_diag(dk);
    for (int i = 0; i < dim; ++i) sys.at(i, nf + k) = -hk[i];
  }
  Element h0 = A.from_diag(*x0);
  auto sol = solve_linear(sys, h0);
  if (!sol) throw std::invalid_argument("adapted_triple: no f in g_{-a} completing the triple");

  std::vector<Rat> hdiag = *x0;
  for (int k = 0; k < nh; ++k)
    for (int i = 0; i < n; ++i) hdiag[i] += (*sol)[nf + k] * hdirs.basis().at(k, i);
  Element h = A.from_diag(hdiag);

  Element f0(dim, Rat(0));
  for (int j = 0; j < nf; ++j) {
    if ((*sol)[j] == 0) continue;
    std::vector<Rat> bv = gminus.basis_vector(j);
    for (int i = 0; i < dim; ++i) f0[i] += (*sol)[j] * bv[i];
  }
  // Keep only the (ad h = -2)-eigencomponent of f0; h is diagonal, so each
  // basis element is an ad h eigenvector.
  Grading hg = Grading::from_diagonal(A, hdiag);
  Element f(dim, Rat(0));
  for (int i = 0; i < dim; ++i)
    if (f0[i] != 0 && hg.basis_degrees()[i] == Rat(-2)) f[i] = f0[i];

  Sl2Triple tr{e, h, f};
  if (!(A.bracket(tr.h, tr.e) == scaled(tr.e, Rat(2))))
    throw std::logic_error("adapted_triple: [h,e] != 2e");
  if (!(A.bracket(tr.e, tr.f) == tr.h)) throw std::logic_error("adapted_triple: [e,f] != h");
  if (!(A.bracket(tr.h, tr.f) == scaled(tr.f, Rat(-2))))
    throw std::logic_error("adapted_triple: [h,f] != -2f");
  return tr;
}

std::vector<Rat> t_diagonal(const Grading& g, const Sl2Triple& triple, const Rat& a) {
  const MatrixLieAlgebra& A = g.algebra();
  QMatrix hm = A.to_matrix(triple.h);
  std::vector<Rat> t(A.n());
  for (int i = 0; i < A.n(); ++i) {
    for (int j = 0; j < A.n(); ++j)
      if (i != j && hm.at(i, j) != 0)
        throw std::invalid_argument("t_diagonal: adapted h is not diagonal");
    t[i] = g.diag()[i] - (a / 2) * hm.at(i, i);
  }
  return t;
}

Element t_element(const Grading& g, const Sl2Triple& triple, const Rat& a) {
  const MatrixLieAlgebra& A = g.algebra();
  Element t = A.from_diag(t_diagonal(g, triple, a));
  if (!is_zero_elem(A.bracket(t, triple.e))) throw std::logic_error("t does not centralize e");
  if (!is_zero_elem(A.bracket(t, triple.h))) throw std::logic_error("t does not centralize h");
  return t;
}

IsotypicDecomposition isotypic_decompose(const Grading& g, const Element& e, const Rat& a) {
  const MatrixLieAlgebra& A = g.algebra();
  int dim = A.dim();
  IsotypicDecomposition dec;
  dec.a = a;
  dec.triple = adapted_triple(g, e, a);
  dec.t_diag = t_diagonal(g, dec.triple, a);
  dec.t = t_element(g, dec.triple, a);

  QMatrix hm = A.to_matrix(dec.triple.h);
  std::vector<Rat> hdiag(A.n());
  for (int i = 0; i < A.n(); ++i) hdiag[i] = hm.at(i, i);
  Grading hweights = Grading::from_diagonal(A, hdiag);
  Grading tweights = Grading::from_diagonal(A, dec.t_diag);

  // Joint (ad h, ad t) eigenspaces are coordinate subspaces of the basis.
  std::map<std::pair<Rat, Rat>, std::vector<int>,
           bool (*)(const std::pair<Rat, Rat>&, const std::pair<Rat, Rat>&)>
      groups(+[](const std::pair<Rat, Rat>& x, const std::pair<Rat, Rat>& y) {
        int c = cmp(x.first, y.first);
        if (c != 0) return c < 0;
        return cmp(x.second, y.second) < 0;
      });
  for (int k = 0; k < dim; ++k)
    groups[{hweights.basis_degrees()[k], tweights.basis_degrees()[k]}].push_back(k);

  QMatrix ad_f = A.ad_matrix(dec.triple.f);
  QMatrix ad_e = A.ad_matrix(e);

  for (const auto& [key, idx] : groups) {
    const Rat& w = key.first;
    const Rat& lambda = key.second;
    if (w > 0) continue;
    if (w.get_den() != 1) throw std::logic_error("non-integer ad h eigenvalue");
    // Lowest-weight vectors: kernel of ad f inside this joint eigenspace.
    QMatrix restr(dim, static_cast<int>(idx.size()));
    for (size_t c = 0; c < idx.size(); ++c)
      for (int r = 0; r < dim; ++r) restr.at(r, static_cast<int>(c)) = ad_f.at(r, idx[c]);
    Subspace coeff = kernel(restr);
    if (coeff.is_zero()) continue;
    std::vector<std::vector<Rat>> vecs;
    for (int i = 0; i < coeff.dim(); ++i) {
      std::vector<Rat> v(dim, Rat(0));
      for (size_t c = 0; c < idx.size(); ++c) v[idx[c]] = coeff.basis().at(i, static_cast<int>(c));
      vecs.push_back(std::move(v));
    }
    IsotypicBlock blk;
    blk.d = 1 - static_cast<int>(w.get_num().get_si());
    blk.lambda = lambda;
    blk.rho = -(a / 2) * (blk.d - 1) + lambda;
    blk.layers.push_back(Subspace::from_vectors(vecs, dim));
    blk.mult = blk.layers[0].dim();
    for (int l = 1; l < blk.d; ++l) {
      const Subspace& prev = blk.layers.back();
      std::vector<std::vector<Rat>> imgs;
      for (int i = 0; i < prev.dim(); ++i) imgs.push_back(mat_vec(ad_e, prev.basis_vector(i)));
      Subspace next = Subspace::from_vectors(imgs, dim);
      if (next.dim() != blk.mult) throw std::logic_error("isotypic layer dimension drop");
      blk.layers.push_back(next);
    }
    // ad e kills the top layer
    for (int i = 0; i < blk.layers.back().dim(); ++i) {
      std::vector<Rat> img = mat_vec(ad_e, blk.layers.back().basis_vector(i));
      for (const Rat& x : img)
        if (x != 0) throw std::logic_error("top isotypic layer not killed by ad e");
    }
    dec.blocks.push_back(std::move(blk));
  }

  std::sort(dec.blocks.begin(), dec.blocks.end(), [](const IsotypicBlock& x, const IsotypicBlock& y) {
    if (x.d != y.d) return x.d < y.d;
    return cmp(x.lambda, y.lambda) < 0;
  });

  int total = 0, tops = 0;
  for (const IsotypicBlock& b : dec.blocks) {
    total += b.d * b.mult;
    tops += b.mult;
  }
  if (total != dim) throw std::logic_error("isotypic layers do not sum to the algebra");
  if (tops != A.centralizer(e).dim())
    throw std::logic_error("top layers do not account for the centralizer");
  return dec;
}

CouplingReport verify_coupling(const MatrixLieAlgebra& A, const IsotypicDecomposition& dec) {
  CouplingReport rep;
  auto fail = [&rep](const std::string& s) {
    rep.ok = false;
    rep.failures.push_back(s);
  };
  // Precompute layer-basis times Gram.
  std::vector<std::vector<QMatrix>> lg(dec.blocks.size());
  for (size_t b = 0; b < dec.blocks.size(); ++b)
    for (const Subspace& layer : dec.blocks[b].layers)
      lg[b].push_back(layer.basis().mul(A.form_gram()));

  for (size_t b1 = 0; b1 < dec.blocks.size(); ++b1)
    for (size_t b2 = b1; b2 < dec.blocks.size(); ++b2) {
      const IsotypicBlock& x = dec.blocks[b1];
      const IsotypicBlock& y = dec.blocks[b2];
      bool paired = (x.d == y.d) && (x.lambda + y.lambda == 0);
      for (int l1 = 0; l1 < x.d; ++l1)
        for (int l2 = 0; l2 < y.d; ++l2) {
          QMatrix gram = lg[b1][l1].mul(y.layers[l2].basis().transpose());
          std::ostringstream loc;
          loc << "(d=" << x.d << ",l=" << rat_str(x.lambda) << ")^" << l1 << " x (d=" << y.d
              << ",l=" << rat_str(y.lambda) << ")^" << l2;
          if (!paired || l1 + l2 != x.d - 1) {
            if (!gram.is_zero()) fail("unexpected pairing on " + loc.str());
          } else {
            if (rank(gram) != x.mult) fail("degenerate coupling on " + loc.str());
          }
        }
    }
  return rep;
}

bool admissible_by_block_bounds(const IsotypicDecomposition& dec) {
  for (const IsotypicBlock& b : dec.blocks) {
    Rat bound = (dec.a / 2) * (b.d + 1);
    if (!(b.lambda < bound && -bound < b.lambda)) return false;
  }
  return true;
}

}  // namespace padm
