#include "padm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace padm {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat q{Int(s), Int(1)};
      q.canonicalize();
      return q;
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw std::invalid_argument("bad rational: " + s);
    Rat q{Int(num), Int(den)};
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

std::string rat_str(const Rat& q) { return q.get_str(); }

bool QMatrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::mul(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

QMatrix QMatrix::add(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  QMatrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

QMatrix QMatrix::sub(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  QMatrix r(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

QMatrix QMatrix::scale(const Rat& k) const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * k;
  return r;
}

QMatrix QMatrix::identity(int n) {
  QMatrix r(n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

std::vector<Rat> QMatrix::row(int i) const {
  std::vector<Rat> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void QMatrix::set_row(int i, const std::vector<Rat>& v) {
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x.mul(y).sub(y.mul(x)); }

std::vector<Rat> mat_vec(const QMatrix& m, const std::vector<Rat>& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("mat_vec shape mismatch");
  std::vector<Rat> r(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Rat s = 0;
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && v[j] != 0) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

std::pair<QMatrix, std::vector<int>> rref(const QMatrix& m) {
  QMatrix a = m;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Rat inv = 1 / a.at(r, c);
    for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).second.size()); }

Subspace Subspace::zero(int ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = QMatrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(int ambient_dim) { return from_rows(QMatrix::identity(ambient_dim)); }

Subspace Subspace::from_rows(const QMatrix& rows) {
  auto [e, piv] = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  s.pivots_ = piv;
  s.basis_ = QMatrix(static_cast<int>(piv.size()), rows.cols());
  for (int i = 0; i < static_cast<int>(piv.size()); ++i) s.basis_.set_row(i, e.row(i));
  return s;
}

Subspace Subspace::from_vectors(const std::vector<std::vector<Rat>>& vs, int ambient_dim) {
  QMatrix m(static_cast<int>(vs.size()), ambient_dim);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (static_cast<int>(vs[i].size()) != ambient_dim)
      throw std::invalid_argument("vector of wrong ambient dimension");
    m.set_row(static_cast<int>(i), vs[i]);
  }
  return from_rows(m);
}

std::vector<Rat> Subspace::reduce(const std::vector<Rat>& v) const {
  std::vector<Rat> w = v;
  for (int i = 0; i < dim(); ++i) {
    int p = pivots_[i];
    if (w[p] == 0) continue;
    Rat f = w[p];
    for (int j = p; j < ambient_; ++j)
      if (basis_.at(i, j) != 0) w[j] -= f * basis_.at(i, j);
  }
  return w;
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  std::vector<Rat> w = reduce(v);
  for (const Rat& x : w)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace kernel(const QMatrix& m) {
  auto [e, piv] = rref(m);
  int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(n);
    v[c] = 1;
    for (int i = 0; i < static_cast<int>(piv.size()); ++i) v[piv[i]] = -e.at(i, c);
    basis.push_back(std::move(v));
  }
  return Subspace::from_vectors(basis, n);
}

Subspace column_space(const QMatrix& m) { return Subspace::from_rows(m.transpose()); }

std::optional<std::vector<Rat>> solve_linear(const QMatrix& a, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_linear shape mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto [e, piv] = rref(aug);
  for (int p : piv)
    if (p == a.cols()) return std::nullopt;
  std::vector<Rat> x(a.cols(), Rat(0));
  for (int i = 0; i < static_cast<int>(piv.size()); ++i) x[piv[i]] = e.at(i, a.cols());
  return x;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("subspace_sum ambient mismatch");
  QMatrix m(u.dim() + v.dim(), u.ambient_dim());
  for (int i = 0; i < u.dim(); ++i) m.set_row(i, u.basis_vector(i));
  for (int i = 0; i < v.dim(); ++i) m.set_row(u.dim() + i, v.basis_vector(i));
  return Subspace::from_rows(m);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("subspace_intersect ambient mismatch");
  int n = u.ambient_dim();
  // x·U − y·V = 0 over coefficients (x, y); intersection vectors are x·U.
  QMatrix stacked(u.dim() + v.dim(), n);
  for (int i = 0; i < u.dim(); ++i) stacked.set_row(i, u.basis_vector(i));
  for (int i = 0; i < v.dim(); ++i) {
    std::vector<Rat> r = v.basis_vector(i);
    for (Rat& x : r) x = -x;
    stacked.set_row(u.dim() + i, r);
  }
  Subspace coeff = kernel(stacked.transpose());
  std::vector<std::vector<Rat>> vecs;
  for (int i = 0; i < coeff.dim(); ++i) {
    std::vector<Rat> c = coeff.basis_vector(i);
    std::vector<Rat> w(n);
    for (int k = 0; k < u.dim(); ++k) {
      if (c[k] == 0) continue;
      for (int j = 0; j < n; ++j) w[j] += c[k] * u.basis().at(k, j);
    }
    vecs.push_back(std::move(w));
  }
  return Subspace::from_vectors(vecs, n);
}

Subspace complement_within(const Subspace& u, const Subspace& w) {
  if (!w.contains(u)) throw std::invalid_argument("complement_within: u not contained in w");
  std::vector<std::vector<Rat>> chosen;
  Subspace acc = u;
  for (int i = 0; i < w.dim() && acc.dim() < w.dim(); ++i) {
    std::vector<Rat> cand = w.basis_vector(i);
    Subspace bigger = subspace_sum(acc, Subspace::from_vectors({cand}, w.ambient_dim()));
    if (bigger.dim() > acc.dim()) {
      chosen.push_back(cand);
      acc = bigger;
    }
  }
  return Subspace::from_vectors(chosen, w.ambient_dim());
}

Subspace complement_avoiding(const Subspace& z, const Subspace& w, const Subspace& seed) {
  if (!w.contains(z)) throw std::invalid_argument("complement_avoiding: z not contained in w");
  if (!w.contains(seed)) throw std::invalid_argument("complement_avoiding: seed not contained in w");
  Subspace c = seed;
  Subspace acc = subspace_sum(z, seed);
  if (acc.dim() != z.dim() + seed.dim())
    throw std::invalid_argument("complement_avoiding: seed meets z");
  for (int i = 0; i < w.dim() && acc.dim() < w.dim(); ++i) {
    std::vector<Rat> cand = w.basis_vector(i);
    Subspace bigger = subspace_sum(acc, Subspace::from_vectors({cand}, w.ambient_dim()));
    if (bigger.dim() > acc.dim()) {
      c = subspace_sum(c, Subspace::from_vectors({cand}, w.ambient_dim()));
      acc = bigger;
    }
  }
  if (acc.dim() != w.dim()) throw std::logic_error("complement_avoiding: completion failed");
  return c;
}

Subspace orth_complement(const Subspace& u, const QMatrix& form, const Subspace& w) {
  int n = u.ambient_dim();
  if (form.rows() != n || form.cols() != n || w.ambient_dim() != n)
    throw std::invalid_argument("orth_complement dimension mismatch");
  if (u.dim() == 0) return w;
  // Rows u_i^T G, applied to w-coordinates: B(u_i, sum c_k w_k) = 0.
  QMatrix ug = u.basis().mul(form);          // dim(u) × n
  QMatrix sys = ug.mul(w.basis().transpose());  // dim(u) × dim(w)
  Subspace coeff = kernel(sys);
  std::vector<std::vector<Rat>> vecs;
  for (int i = 0; i < coeff.dim(); ++i) {
    std::vector<Rat> c = coeff.basis_vector(i);
    std::vector<Rat> v(n);
    for (int k = 0; k < w.dim(); ++k) {
      if (c[k] == 0) continue;
      for (int j = 0; j < n; ++j) v[j] += c[k] * w.basis().at(k, j);
    }
    vecs.push_back(std::move(v));
  }
  return Subspace::from_vectors(vecs, n);
}

}  // namespace padm
