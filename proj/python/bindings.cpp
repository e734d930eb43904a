// Python bindings for the main operations: exact linear algebra, twisted
// cellular cohomology, KR groups, the axiom suite and the document commands.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tdual/axioms.hpp"
#include "tdual/commands.hpp"
#include "tdual/exterior.hpp"
#include "tdual/kr.hpp"

namespace py = pybind11;
using namespace tdual;

namespace {

py::object big(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.get_str());
}

IntMatrix matrix_from(const std::vector<std::vector<long long>>& rows,
                      std::size_t cols_hint = 0) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : cols_hint;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = Int(static_cast<long>(rows[i][j]));
  }
  return m;
}

py::list matrix_to(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(big(m(i, j)));
    rows.append(row);
  }
  return rows;
}

TwistClass twist_from(const DeltaComplex& k, const std::vector<int>& v) {
  if (v.empty()) return TwistClass::zero(k);
  if (v.size() != k.n(1))
    throw std::invalid_argument("twist has wrong number of edge values");
  TwistClass t{v};
  for (int& x : t.val) x &= 1;
  return t;
}

Coeff coeff_from(const std::string& s, Int* modulus) {
  if (s == "Z") return Coeff::Z;
  if (s == "Q") return Coeff::Q;
  if (s.rfind("Z/", 0) == 0) {
    *modulus = Int(s.substr(2));
    return Coeff::Zm;
  }
  throw std::invalid_argument("unknown coefficient domain '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact orientifold T-duality: twisted cohomology, KR groups and the "
      "conformal Courant algebroid identity suite";

  py::class_<AbelianGroup>(m, "AbelianGroup")
      .def_readonly("rank", &AbelianGroup::rank)
      .def_property_readonly("torsion",
                             [](const AbelianGroup& g) {
                               py::list t;
                               for (const auto& d : g.torsion)
                                 t.append(big(d));
                               return t;
                             })
      .def("__str__", &AbelianGroup::to_string)
      .def("__repr__", &AbelianGroup::to_string)
      .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) {
        return a == b;
      });

  py::class_<DeltaComplex, std::shared_ptr<DeltaComplex>>(m, "DeltaComplex")
      .def(py::init([](const DeltaComplex::Cells& cells) {
             return std::make_shared<DeltaComplex>(cells);
           }),
           py::arg("cells"))
      .def_property_readonly("dim", &DeltaComplex::dim)
      .def("cells", &DeltaComplex::n, py::arg("dim"));

  m.def(
      "catalog",
      [](const std::string& name) {
        return std::make_shared<DeltaComplex>(catalog::by_name(name));
      },
      "standard complex by name: point, s1, circle2, s2, s3, t2, t3, "
      "klein_bottle");

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<long long>>& rows) {
        SmithResult s = smith_normal_form(matrix_from(rows));
        return py::make_tuple(matrix_to(s.u), matrix_to(s.d), matrix_to(s.v));
      },
      "u, d, v with d = u * m * v, u and v unimodular, d a divisor chain");

  m.def("cohomology_group",
        [](const std::vector<std::vector<long long>>& d_in, std::size_t n,
           const std::vector<std::vector<long long>>& d_out) {
          return cohomology_group(matrix_from(d_in, 0),
                                  matrix_from(d_out, n));
        });

  m.def(
      "twisted_coboundary",
      [](std::shared_ptr<DeltaComplex> k, const std::vector<int>& twist,
         int p) { return matrix_to(twisted_coboundary(*k, twist_from(*k, twist), p)); },
      py::arg("complex"), py::arg("twist"), py::arg("p"));

  m.def(
      "cohomology",
      [](std::shared_ptr<DeltaComplex> k, const std::vector<int>& twist,
         const std::string& coeff) {
        Int modulus = 0;
        Coeff mode = coeff_from(coeff, &modulus);
        return cohomology(*k, twist_from(*k, twist), mode, modulus);
      },
      py::arg("complex"), py::arg("twist") = std::vector<int>{},
      py::arg("coeff") = "Z",
      "list of groups by degree; twist is a per-edge 0/1 list (empty = 0)");

  m.def(
      "kr",
      [](std::shared_ptr<DeltaComplex> k, const std::vector<int>& twist) {
        py::dict out;
        TwistClass tw = twist_from(*k, twist);
        for (int n = 0; n < 4; ++n) {
          KRResult r = kr_ahss(*k, tw, n);
          out[py::str("KR" + std::to_string(n))] = r.assembled.to_string();
          out["periodicity"] = r.periodicity;
        }
        return out;
      },
      py::arg("complex"), py::arg("twist") = std::vector<int>{});

  m.def(
      "run_axioms",
      [](unsigned long long seed, long count, bool corrupt) {
        AxiomReport rep = run_axiom_suite(seed, count, corrupt);
        py::dict out;
        for (const auto& line : rep.lines)
          out[py::str(line.name)] = py::make_tuple(line.checked, line.failed);
        out["instances"] = rep.instances;
        out["all_pass"] = rep.all_pass();
        return out;
      },
      py::arg("seed") = 1, py::arg("count") = 200, py::arg("corrupt") = false);

  m.def(
      "invariant_twisted_cohomology",
      [](int n, unsigned atwist, unsigned ltwist, long volume_flux, int i) {
        CoefForm f = CoefForm::zero(n, 3, 0);
        if (volume_flux != 0) {
          if (n < 3)
            throw std::invalid_argument("volume flux needs n >= 3");
          f.add(7u, FourierScalar::constant(
                        n, GaussianRational(Rat(volume_flux))));
        }
        return invariant_twisted_cohomology(n, atwist, ltwist, FluxForm(f), i);
      },
      py::arg("n"), py::arg("atwist"), py::arg("ltwist"),
      py::arg("volume_flux"), py::arg("i"),
      "dimension of the invariant twisted cohomology on the n-torus");

  // document commands on text, mirroring the CLI subcommands
  auto run_doc = [](const std::string& text, auto&& fn) {
    Document doc = Document::parse(text);
    std::ostringstream out;
    int code = fn(doc, out);
    return py::make_tuple(code, out.str());
  };
  m.def("doc_cohomology", [run_doc](const std::string& text,
                                    const std::string& complex_name,
                                    const std::string& twist,
                                    const std::string& coeff) {
    return run_doc(text, [&](Document& d, std::ostream& o) {
      return cmd_cohomology(d, complex_name, twist, coeff, o);
    });
  });
  m.def("doc_tdual",
        [run_doc](const std::string& text, const std::string& background) {
          return run_doc(text, [&](Document& d, std::ostream& o) {
            return cmd_tdual(d, background, o);
          });
        });
  m.def("doc_kr", [run_doc](const std::string& text,
                            const std::string& complex_name,
                            const std::string& twist) {
    return run_doc(text, [&](Document& d, std::ostream& o) {
      return cmd_kr(d, complex_name, twist, o);
    });
  });
  m.def("doc_transform",
        [run_doc](const std::string& text, const std::string& triple,
                  const std::string& form) {
          return run_doc(text, [&](Document& d, std::ostream& o) {
            return cmd_transform(d, triple, form, o);
          });
        });
}
