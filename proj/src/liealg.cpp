#include "padm/liealg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace padm {

std::string AlgebraKind::str() const {
  const char* t = type == AlgebraType::SL ? "sl" : type == AlgebraType::SO ? "so" : "sp";
  return std::string(t) + " " + std::to_string(n);
}

AlgebraKind AlgebraKind::parse(const std::string& type_token, int n) {
  AlgebraKind k;
  if (type_token == "sl")
    k.type = AlgebraType::SL;
  else if (type_token == "so")
    k.type = AlgebraType::SO;
  else if (type_token == "sp")
    k.type = AlgebraType::SP;
  else
    throw std::invalid_argument("unknown algebra type: " + type_token);
  if (n < 1) throw std::invalid_argument("algebra size must be positive");
  if (k.type == AlgebraType::SL && n < 2) throw std::invalid_argument("sl requires n >= 2");
  if (k.type == AlgebraType::SP && n % 2 != 0) throw std::invalid_argument("sp requires even n");
  k.n = n;
  return k;
}

int Partition::total() const {
  int s = 0;
  for (int d : parts) s += d;
  return s;
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int d : parts) m[d]++;
  return m;
}

Partition Partition::parse(const std::vector<int>& parts) {
  Partition p;
  p.parts = parts;
  for (int d : p.parts)
    if (d < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(p.parts.begin(), p.parts.end(), std::greater<int>());
  return p;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

bool partition_valid_for(const AlgebraKind& kind, const Partition& p, std::string* why) {
  if (p.total() != kind.n) {
    if (why) *why = "partition total " + std::to_string(p.total()) + " != n";
    return false;
  }
  if (kind.type == AlgebraType::SL) return true;
  for (const auto& [size, mult] : p.multiplicities()) {
    bool even_part = size % 2 == 0;
    if (kind.type == AlgebraType::SO && even_part && mult % 2 != 0) {
      if (why) *why = "so: even part " + std::to_string(size) + " has odd multiplicity";
      return false;
    }
    if (kind.type == AlgebraType::SP && !even_part && mult % 2 != 0) {
      if (why) *why = "sp: odd part " + std::to_string(size) + " has odd multiplicity";
      return false;
    }
  }
  return true;
}

int MatrixLieAlgebra::eta(int i) const {
  if (kind_.type == AlgebraType::SP) return i < kind_.n / 2 ? 1 : -1;
  return 1;
}

MatrixLieAlgebra MatrixLieAlgebra::build(const AlgebraKind& kind) {
  MatrixLieAlgebra A;
  A.kind_ = kind;
  int n = kind.n;
  auto E = [n](int i, int j) {
    QMatrix m(n, n);
    m.at(i, j) = 1;
    return m;
  };
  if (kind.type == AlgebraType::SL) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) A.basis_.push_back(E(i, j));
    for (int i = 0; i + 1 < n; ++i) A.basis_.push_back(E(i, i).sub(E(i + 1, i + 1)));
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int pi = n - 1 - j, pj = n - 1 - i;  // orbit partner of (i,j)
        if (std::make_pair(i, j) > std::make_pair(pi, pj)) continue;
        int s = A.eta(i) * A.eta(j);
        if (pi == i && pj == j) {
          if (s == 1) continue;  // so: M vanishes on the anti-diagonal
          A.basis_.push_back(E(i, j));
        } else {
          QMatrix m = E(i, j);
          m.at(pi, pj) -= Rat(s);
          A.basis_.push_back(m);
        }
      }
  }
  for (const QMatrix& b : A.basis_) {
    std::vector<std::tuple<int, int, Rat>> es;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (b.at(i, j) != 0) es.emplace_back(i, j, b.at(i, j));
    A.entries_.push_back(std::move(es));
  }
  int d = A.dim();
  A.gram_ = QMatrix(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat tr = 0;  // tr(B_i B_j) from sparse entries
      for (const auto& [a, b, v] : A.entries_[i])
        if (A.basis_[j].at(b, a) != 0) tr += v * A.basis_[j].at(b, a);
      A.gram_.at(i, j) = tr;
      A.gram_.at(j, i) = tr;
    }
  // structure constants, kept sparse
  A.bracket_table_.resize(static_cast<size_t>(d) * d);
  QMatrix scratch(n, n);
  std::vector<std::pair<int, int>> touched;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      for (const auto& [a, b, v] : A.entries_[i])
        for (const auto& [c, dd, w] : A.entries_[j]) {
          if (b == c) {
            scratch.at(a, dd) += v * w;
            touched.emplace_back(a, dd);
          }
          if (dd == a) {
            scratch.at(c, b) -= v * w;
            touched.emplace_back(c, b);
          }
        }
      Element coords = A.raw_coords(scratch);
      auto& cell = A.bracket_table_[static_cast<size_t>(i) * d + j];
      for (int k = 0; k < d; ++k)
        if (coords[k] != 0) cell.emplace_back(k, coords[k]);
      for (const auto& [a, b] : touched) scratch.at(a, b) = 0;
      touched.clear();
    }
  return A;
}

QMatrix MatrixLieAlgebra::to_matrix(const Element& x) const {
  if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("element of wrong length");
  QMatrix m(n(), n());
  for (int k = 0; k < dim(); ++k) {
    if (x[k] == 0) continue;
    for (const auto& [i, j, v] : entries_[k]) m.at(i, j) += x[k] * v;
  }
  return m;
}

Element MatrixLieAlgebra::raw_coords(const QMatrix& m) const {
  int nn = n();
  Element c(dim(), Rat(0));
  if (kind_.type == AlgebraType::SL) {
    int k = 0;
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j)
        if (i != j) c[k++] = m.at(i, j);
    Rat partial = 0;
    for (int i = 0; i + 1 < nn; ++i) {
      partial += m.at(i, i);
      c[k++] = partial;
    }
    return c;
  }
  // so/sp: the representative entry of each basis element determines its
  // coefficient.
  for (int k = 0; k < dim(); ++k) {
    const auto& [i, j, v] = entries_[k].front();
    c[k] = m.at(i, j) / v;
  }
  return c;
}

Element MatrixLieAlgebra::from_matrix(const QMatrix& m) const {
  int nn = n();
  if (m.rows() != nn || m.cols() != nn) throw std::invalid_argument("matrix of wrong size");
  if (kind_.type == AlgebraType::SL) {
    Rat tr = 0;
    for (int i = 0; i < nn; ++i) tr += m.at(i, i);
    if (tr != 0) throw std::invalid_argument("matrix not in sl: nonzero trace");
    return raw_coords(m);
  }
  Element c = raw_coords(m);
  if (!(to_matrix(c) == m)) throw std::invalid_argument("matrix not in the algebra");
  return c;
}

bool MatrixLieAlgebra::in_algebra(const QMatrix& m) const {
  try {
    from_matrix(m);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Element MatrixLieAlgebra::bracket(const Element& x, const Element& y) const {
  int d = dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::invalid_argument("bracket: element of wrong length");
  Element out(d, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const auto& cell = bracket_table_[static_cast<size_t>(i) * d + j];
      if (cell.empty()) continue;
      Rat coef = x[i] * y[j];
      for (const auto& [k, c] : cell) out[k] += coef * c;
    }
  }
  return out;
}

Rat MatrixLieAlgebra::invariant_form(const Element& x, const Element& y) const {
  Rat s = 0;
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j)
      if (y[j] != 0 && gram_.at(i, j) != 0) s += x[i] * gram_.at(i, j) * y[j];
  }
  return s;
}

QMatrix MatrixLieAlgebra::ad_matrix(const Element& x) const {
  int d = dim();
  QMatrix ad(d, d);
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      const auto& cell = bracket_table_[static_cast<size_t>(i) * d + j];
      for (const auto& [k, c] : cell) ad.at(k, j) += x[i] * c;
    }
  }
  return ad;
}

Subspace MatrixLieAlgebra::centralizer(const Element& e) const { return kernel(ad_matrix(e)); }

Element MatrixLieAlgebra::from_diag(const std::vector<Rat>& d) const {
  if (static_cast<int>(d.size()) != n()) throw std::invalid_argument("diagonal of wrong length");
  QMatrix m(n(), n());
  for (int i = 0; i < n(); ++i) m.at(i, i) = d[i];
  return from_matrix(m);
}

bool MatrixLieAlgebra::diag_in_algebra(const std::vector<Rat>& d) const {
  if (static_cast<int>(d.size()) != n()) return false;
  if (kind_.type == AlgebraType::SL) {
    Rat tr = 0;
    for (const Rat& x : d) tr += x;
    return tr == 0;
  }
  for (int i = 0; i < n(); ++i)
    if (d[i] != -d[n() - 1 - i]) return false;
  return true;
}

Partition jordan_type(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("jordan_type: square matrix required");
  int n = m.rows();
  std::vector<int> r;  // r[k] = rank m^k
  r.push_back(n);
  QMatrix p = m;
  while (true) {
    int rk = rank(p);
    r.push_back(rk);
    if (rk == 0) break;
    if (static_cast<int>(r.size()) > n + 1) throw std::invalid_argument("jordan_type: matrix not nilpotent");
    p = p.mul(m);
  }
  r.push_back(0);
  std::vector<int> parts;
  for (int k = 1; k + 1 < static_cast<int>(r.size()); ++k) {
    int exactly_k = (r[k - 1] - r[k]) - (r[k] - r[k + 1]);
    for (int c = 0; c < exactly_k; ++c) parts.push_back(k);
  }
  return Partition::parse(parts);
}

int centralizer_dim_formula_sl(const Partition& p) {
  int s = 0;
  for (int a : p.parts)
    for (int b : p.parts) s += std::min(a, b);
  return s - 1;
}

namespace {

struct EntryMap {
  std::map<std::pair<int, int>, Rat> v;
  void set(int i, int j, const Rat& x) {
    auto key = std::make_pair(i, j);
    auto it = v.find(key);
    if (it != v.end() && it->second != x) throw std::logic_error("conflicting nilpotent entry");
    v[key] = x;
  }
};

// Fill mirrored entries so the matrix lands in so/sp for the fixed form.
void symmetrize(const MatrixLieAlgebra& A, EntryMap& em) {
  int n = A.n();
  auto snapshot = em.v;
  for (const auto& [key, val] : snapshot) {
    auto [i, j] = key;
    int pi = n - 1 - j, pj = n - 1 - i;
    Rat mirrored = -Rat(A.eta(i) * A.eta(j)) * val;
    if (pi == i && pj == j) {
      if (mirrored != val) throw std::logic_error("inconsistent self-mirrored entry");
    } else {
      em.set(pi, pj, mirrored);
    }
  }
}

QMatrix to_matrix(const EntryMap& em, int n) {
  QMatrix m(n, n);
  for (const auto& [key, val] : em.v) m.at(key.first, key.second) = val;
  return m;
}

// Chains u_1..u_m at positions upos and their mirrors, with an optional
// rank-one tie making the Jordan type (d1, d2) instead of (m, m).
struct PairGroup {
  int d1, d2;
  std::vector<int> upos;  // length m = (d1+d2)/2
};

void emit_pair_group(const MatrixLieAlgebra& A, const PairGroup& g, int p, int q, const Rat& c,
                     EntryMap& em) {
  int n = A.n();
  int m = static_cast<int>(g.upos.size());
  for (int k = 1; k < m; ++k) em.set(g.upos[k - 1], g.upos[k], Rat(1));
  if (c != 0) em.set(g.upos[q - 1], n - 1 - g.upos[p - 1], c);
}

Partition group_jordan_type(const MatrixLieAlgebra& A, const PairGroup& g, int p, int q,
                            const Rat& c) {
  int n = A.n();
  EntryMap em;
  emit_pair_group(A, g, p, q, c, em);
  symmetrize(A, em);
  std::vector<int> pos = g.upos;
  for (int k = static_cast<int>(g.upos.size()) - 1; k >= 0; --k) pos.push_back(n - 1 - g.upos[k]);
  QMatrix full = to_matrix(em, n);
  QMatrix sub(static_cast<int>(pos.size()), static_cast<int>(pos.size()));
  for (size_t a = 0; a < pos.size(); ++a)
    for (size_t b = 0; b < pos.size(); ++b) sub.at(static_cast<int>(a), static_cast<int>(b)) = full.at(pos[a], pos[b]);
  return jordan_type(sub);
}

}  // namespace

PartitionRep partition_rep(const MatrixLieAlgebra& A, const Partition& p) {
  std::string why;
  if (!partition_valid_for(A.kind(), p, &why)) throw std::invalid_argument("invalid partition: " + why);
  int n = A.n();
  PartitionRep rep;
  rep.h_diag.assign(n, Rat(0));

  if (A.kind().type == AlgebraType::SL) {
    QMatrix m(n, n);
    int off = 0;
    for (int d : p.parts) {
      for (int k = 1; k < d; ++k) m.at(off + k - 1, off + k) = 1;
      for (int k = 0; k < d; ++k) rep.h_diag[off + k] = d - 1 - 2 * k;
      off += d;
    }
    rep.e = A.from_matrix(m);
    return rep;
  }

  // so/sp: equal parts pair hyperbolically; leftover parts pair two at a time
  // with a rank-one tie; at most one part remains and sits astride the middle.
  std::vector<PairGroup> groups;
  std::vector<int> leftovers;
  for (const auto& [size, mult] : p.multiplicities()) {
    for (int k = 0; k < mult / 2; ++k) groups.push_back({size, size, {}});
    if (mult % 2) leftovers.push_back(size);
  }
  std::sort(leftovers.begin(), leftovers.end(), std::greater<int>());
  for (size_t i = 0; i + 1 < leftovers.size(); i += 2)
    groups.push_back({leftovers[i], leftovers[i + 1], {}});
  int selfdual = leftovers.size() % 2 ? leftovers.back() : 0;
  std::sort(groups.begin(), groups.end(), [](const PairGroup& a, const PairGroup& b) {
    return std::make_pair(a.d1, a.d2) > std::make_pair(b.d1, b.d2);
  });

  int next_low = 0;
  for (PairGroup& g : groups) {
    int m = (g.d1 + g.d2) / 2;
    for (int k = 0; k < m; ++k) g.upos.push_back(next_low + k);
    next_low += m;
    for (int k = 0; k < m; ++k) {
      rep.h_diag[g.upos[k]] = g.d1 - 1 - 2 * k;
      rep.h_diag[n - 1 - g.upos[k]] = -(g.d1 - 1 - 2 * k);
    }
  }

  EntryMap em;
  for (const PairGroup& g : groups) {
    if (g.d1 == g.d2) {
      emit_pair_group(A, g, 0, 0, Rat(0), em);
      continue;
    }
    bool found = false;
    int m = (g.d1 + g.d2) / 2;
    for (int q = 2; q <= m && !found; ++q) {
      int pp = g.d1 - q;
      if (pp < 1 || pp >= q) continue;
      for (int sign : {1, -1}) {
        Partition t = group_jordan_type(A, g, pp, q, Rat(sign));
        if (t.parts == std::vector<int>{g.d1, g.d2}) {
          emit_pair_group(A, g, pp, q, Rat(sign), em);
          found = true;
          break;
        }
      }
    }
    if (!found) throw std::logic_error("no admissible tie for block pair " + std::to_string(g.d1) +
                                       "," + std::to_string(g.d2));
  }

  if (selfdual > 0) {
    int d = selfdual;
    std::vector<int> ell;
    int s = d / 2;
    for (int k = 0; k < s; ++k) ell.push_back(next_low + k);
    if (d % 2) ell.push_back((n - 1) / 2);
    for (int k = s - 1; k >= 0; --k) ell.push_back(n - 1 - (next_low + k));
    next_low += s;
    for (int k = 0; k < d; ++k) rep.h_diag[ell[k]] = d - 1 - 2 * k;
    for (int k = 1; k < d; ++k)
      if (k <= d - k) em.set(ell[k - 1], ell[k], Rat(1));
  }

  symmetrize(A, em);
  QMatrix mat = to_matrix(em, n);
  Partition full_type = jordan_type(mat);
  if (!(full_type.parts == p.parts)) throw std::logic_error("partition representative has wrong type");
  rep.e = A.from_matrix(mat);
  return rep;
}

Element nilpotent_from_partition(const MatrixLieAlgebra& A, const Partition& p) {
  return partition_rep(A, p).e;
}

}  // namespace padm
