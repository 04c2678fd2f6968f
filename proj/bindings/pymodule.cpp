#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "padm/certio.hpp"
#include "padm/connectivity.hpp"
#include "padm/equivalence.hpp"
#include "padm/problem.hpp"

namespace py = pybind11;
using namespace padm;

namespace {

using AlgebraPtr = std::shared_ptr<MatrixLieAlgebra>;

struct PyAlgebra {
  AlgebraPtr A;
};

struct PyElement {
  AlgebraPtr A;
  Element x;
};

struct PyGrading {
  AlgebraPtr A;
  Grading g;
};

struct PySubspace {
  AlgebraPtr A;
  Subspace s;
};

Rat rat_arg(const std::string& s) { return parse_rat(s); }

py::list entry_list(const MatrixLieAlgebra& A, const Element& x) {
  py::list out;
  QMatrix m = A.to_matrix(x);
  for (int i = 0; i < A.n(); ++i)
    for (int j = 0; j < A.n(); ++j)
      if (m.at(i, j) != 0) out.append(py::make_tuple(i + 1, j + 1, rat_str(m.at(i, j))));
  return out;
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["A1"] = r.a1;
  d["A2"] = r.a2;
  d["A3"] = r.a3;
  d["A4"] = r.a4;
  d["A5"] = r.a5;
  d["A6"] = r.a6;
  d["m_subalgebra"] = r.subalg_m;
  d["n_subalgebra"] = r.subalg_n;
  d["overall"] = r.overall;
  d["notes"] = r.notes;
  return d;
}

Problem make_problem(const PyGrading& g, const PyElement& e, const Rat& a) {
  Problem p;
  p.algebra = g.A;
  p.e = e.x;
  p.grading = g.g;
  p.a = a;
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "admissible gradings and admissible pairs for nilpotent elements of classical Lie algebras";

  py::class_<PyElement>(m, "Element")
      .def_property_readonly("entries", [](const PyElement& e) { return entry_list(*e.A, e.x); });

  py::class_<PySubspace>(m, "Subspace")
      .def_property_readonly("dim", [](const PySubspace& s) { return s.s.dim(); })
      .def_property_readonly("basis", [](const PySubspace& s) {
        py::list out;
        for (int i = 0; i < s.s.dim(); ++i) out.append(entry_list(*s.A, s.s.basis_vector(i)));
        return out;
      });

  py::class_<PyGrading>(m, "Grading")
      .def_property_readonly("diagonal",
                             [](const PyGrading& g) {
                               std::vector<std::string> out;
                               for (const Rat& q : g.g.diag()) out.push_back(rat_str(q));
                               return out;
                             })
      .def_property_readonly("degrees",
                             [](const PyGrading& g) {
                               std::vector<std::string> out;
                               for (const Rat& q : g.g.occupied_degrees())
                                 out.push_back(rat_str(q));
                               return out;
                             })
      .def("piece_dim",
           [](const PyGrading& g, const std::string& j) { return g.g.piece(rat_arg(j)).dim(); })
      .def("piece",
           [](const PyGrading& g, const std::string& j) {
             return PySubspace{g.A, g.g.piece(rat_arg(j))};
           })
      .def("piece_range", [](const PyGrading& g, const std::string& op, const std::string& k) {
        Cmp c = op == "<=" ? Cmp::LE : op == "<" ? Cmp::LT : op == ">=" ? Cmp::GE : Cmp::GT;
        return PySubspace{g.A, g.g.piece_range(c, rat_arg(k))};
      });

  py::class_<PyAlgebra>(m, "Algebra")
      .def(py::init([](const std::string& type, int n) {
             return PyAlgebra{std::make_shared<MatrixLieAlgebra>(
                 MatrixLieAlgebra::build(AlgebraKind::parse(type, n)))};
           }),
           py::arg("type"), py::arg("n"))
      .def_property_readonly("dim", [](const PyAlgebra& a) { return a.A->dim(); })
      .def_property_readonly("n", [](const PyAlgebra& a) { return a.A->n(); })
      .def_property_readonly("kind", [](const PyAlgebra& a) { return a.A->kind().str(); })
      .def("nilpotent_from_partition",
           [](const PyAlgebra& a, const std::vector<int>& parts) {
             return PyElement{a.A, nilpotent_from_partition(*a.A, Partition::parse(parts))};
           })
      .def("partition_h_diagonal",
           [](const PyAlgebra& a, const std::vector<int>& parts) {
             PartitionRep rep = partition_rep(*a.A, Partition::parse(parts));
             std::vector<std::string> out;
             for (const Rat& q : rep.h_diag) out.push_back(rat_str(q));
             return out;
           })
      .def("element",
           [](const PyAlgebra& a, const std::vector<std::tuple<int, int, std::string>>& entries) {
             MatrixEntries es;
             for (const auto& [i, j, v] : entries) es.emplace_back(i, j, rat_arg(v));
             return PyElement{a.A, element_from_entries(*a.A, es)};
           })
      .def("grading",
           [](const PyAlgebra& a, const std::vector<std::string>& diag) {
             std::vector<Rat> d;
             for (const std::string& s : diag) d.push_back(rat_arg(s));
             return PyGrading{a.A, Grading::from_diagonal(*a.A, d)};
           })
      .def("span",
           [](const PyAlgebra& a, const std::vector<PyElement>& vecs) {
             std::vector<std::vector<Rat>> rows;
             for (const PyElement& v : vecs) rows.push_back(v.x);
             return PySubspace{a.A, Subspace::from_vectors(rows, a.A->dim())};
           })
      .def("bracket",
           [](const PyAlgebra& a, const PyElement& x, const PyElement& y) {
             return PyElement{a.A, a.A->bracket(x.x, y.x)};
           })
      .def("invariant_form",
           [](const PyAlgebra& a, const PyElement& x, const PyElement& y) {
             return rat_str(a.A->invariant_form(x.x, y.x));
           })
      .def("centralizer_dim",
           [](const PyAlgebra& a, const PyElement& e) { return a.A->centralizer(e.x).dim(); });

  m.def("is_admissible_grading",
        [](const PyGrading& g, const PyElement& e, const std::string& a) {
          return is_admissible_grading(g.g, e.x, rat_arg(a));
        });
  m.def("is_good_grading", [](const PyGrading& g, const PyElement& e, const std::string& two_d) {
    return is_good_grading(g.g, e.x, rat_arg(two_d));
  });
  m.def("is_b_optimal",
        [](const PyGrading& g, const PyElement& e, const std::string& a, const std::string& b) {
          return is_b_optimal(g.g, e.x, rat_arg(a), rat_arg(b));
        });

  m.def("check_pair", [](const PyGrading& g, const PyElement& e, const std::string& a,
                         const PySubspace& mm, const PySubspace& nn) {
    return report_dict(check_pair(g.g, e.x, rat_arg(a), mm.s, nn.s));
  });

  m.def("construct_pair", [](const PyGrading& g, const PyElement& e, const std::string& a) {
    AdmissiblePair p = construct_pair(g.g, e.x, rat_arg(a));
    return py::make_tuple(PySubspace{g.A, p.m}, PySubspace{g.A, p.n});
  });

  m.def("optimal_pair", [](const PyGrading& g, const PyElement& e, const std::string& a) {
    OptimalOutcome oc = optimal_pair(g.g, e.x, rat_arg(a));
    py::dict d;
    d["status"] = oc.status == OptimalOutcome::Status::Yes  ? "yes"
                  : oc.status == OptimalOutcome::Status::No ? "no"
                                                            : "unknown";
    d["detail"] = oc.detail;
    if (oc.pair) {
      d["m"] = PySubspace{g.A, oc.pair->m};
      d["n"] = PySubspace{g.A, oc.pair->n};
    }
    return d;
  });

  m.def("adapted_triple", [](const PyGrading& g, const PyElement& e, const std::string& a) {
    Sl2Triple tr = adapted_triple(g.g, e.x, rat_arg(a));
    py::dict d;
    d["e"] = PyElement{g.A, tr.e};
    d["h"] = PyElement{g.A, tr.h};
    d["f"] = PyElement{g.A, tr.f};
    return d;
  });

  m.def("isotypic_blocks", [](const PyGrading& g, const PyElement& e, const std::string& a) {
    IsotypicDecomposition dec = isotypic_decompose(g.g, e.x, rat_arg(a));
    py::list out;
    for (const IsotypicBlock& b : dec.blocks) {
      py::dict d;
      d["d"] = b.d;
      d["lambda"] = rat_str(b.lambda);
      d["rho"] = rat_str(b.rho);
      d["multiplicity"] = b.mult;
      out.append(d);
    }
    return out;
  });

  m.def("breakpoints", [](const PyGrading& g, const PyElement& e, const std::string& a) {
    IsotypicDecomposition dec = isotypic_decompose(g.g, e.x, rat_arg(a));
    std::vector<std::string> out;
    for (const Rat& q : breakpoints(dec)) out.push_back(rat_str(q));
    return out;
  });

  m.def("connect_to_dynkin", [](const PyGrading& g, const PyElement& e, const std::string& a) {
    Rat ar = rat_arg(a);
    ConnectivityCertificate cert = connect_to_dynkin(g.g, e.x, ar);
    IsotypicDecomposition dec = isotypic_decompose(g.g, e.x, ar);
    py::dict d;
    d["verified"] = cert.verified;
    std::vector<std::string> bps, chain;
    for (const Rat& q : cert.break_points) bps.push_back(rat_str(q));
    for (const Rat& q : cert.chain) chain.push_back(rat_str(q));
    d["breakpoints"] = bps;
    d["chain"] = chain;
    d["steps"] = static_cast<int>(cert.steps.size());
    d["certificate"] = serialize_connectivity(make_problem(g, e, ar), dec, cert);
    return d;
  });

  m.def("b_optimal_chain", [](const PyGrading& g, const PyElement& e, const std::string& a,
                              const std::string& b, const PySubspace& mm, const PySubspace& nn) {
    Rat ar = rat_arg(a);
    EquivalenceChain chain = b_optimal_chain(g.g, e.x, ar, rat_arg(b), {mm.s, nn.s});
    ChainVerdict v = verify_chain(e.x, chain);
    py::dict d;
    d["verified"] = v.ok;
    d["length"] = static_cast<int>(chain.pairs.size());
    py::list dims;
    for (const AdmissiblePair& pr : chain.pairs) dims.append(py::make_tuple(pr.m.dim(), pr.n.dim()));
    d["pair_dims"] = dims;
    d["certificate"] = serialize_chain(make_problem(g, e, ar), chain);
    return d;
  });

  m.def("two_level_chain", [](const PyGrading& g, const PyElement& e, const std::string& a,
                              const std::string& b, const PySubspace& mm, const PySubspace& nn) {
    Rat ar = rat_arg(a);
    EquivalenceChain chain = two_level_chain(g.g, e.x, ar, rat_arg(b), {mm.s, nn.s});
    ChainVerdict v = verify_chain(e.x, chain);
    py::dict d;
    d["verified"] = v.ok;
    d["length"] = static_cast<int>(chain.pairs.size());
    d["certificate"] = serialize_chain(make_problem(g, e, ar), chain);
    return d;
  });

  m.def("classify", [](const std::string& type, int n, const std::vector<int>& parts) {
    RankClass rc = rank_classifier(AlgebraKind::parse(type, n), Partition::parse(parts));
    py::dict d;
    d["rank"] = rc.rank;
    d["iso_class"] = rc.iso_class;
    d["case_label"] = rc.case_label;
    return d;
  });

  m.def("exceptional_rank1_table", []() {
    py::list out;
    for (const ExceptionalOrbit& row : exceptional_rank1_table()) {
      py::dict d;
      d["type"] = row.type;
      d["label"] = row.label;
      d["diagram"] = row.diagram;
      d["orbit_dim"] = row.orbit_dim;
      out.append(d);
    }
    return out;
  });

  m.def("verify_certificate", [](const std::string& text) {
    VerifyResult res = verify_certificate_text(text);
    py::dict d;
    d["ok"] = res.ok;
    d["kind"] = res.kind;
    d["detail"] = res.detail;
    d["steps"] = res.steps;
    return d;
  });
}
