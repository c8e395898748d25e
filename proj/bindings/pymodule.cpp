#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvs/classify.hpp"
#include "mvs/corpus.hpp"
#include "mvs/functors.hpp"
#include "mvs/json_io.hpp"
#include "mvs/mcnaughton.hpp"
#include "mvs/spectra.hpp"
#include "mvs/verify.hpp"

namespace py = pybind11;
using namespace mvs;

namespace {

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json from_py(const py::object& o) {
  auto s = py::module_::import("json").attr("dumps")(o).cast<std::string>();
  return Json::parse(s);
}

std::vector<Rational> parse_point(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& s : xs) out.push_back(rational_from_string(s));
  return out;
}

py::dict poset_dict(const Poset& p, const std::vector<std::string>& labels) {
  py::dict d;
  d["n"] = p.n;
  std::vector<std::vector<bool>> leq(p.n);
  for (int i = 0; i < p.n; ++i)
    leq[i] = std::vector<bool>(p.leq[i].begin(), p.leq[i].end());
  d["leq"] = leq;
  d["labels"] = labels;
  return d;
}

}  // namespace

PYBIND11_MODULE(_mvs, m) {
  m.doc() = "finite MV-algebras, their prime spectra and classifiers";

  py::register_exception<InputError>(m, "InputError");
  py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError");

  py::class_<FiniteMvAlgebra>(m, "Algebra")
      .def_readonly("size", &FiniteMvAlgebra::size)
      .def_readonly("oplus_table", &FiniteMvAlgebra::oplus)
      .def_readonly("neg_table", &FiniteMvAlgebra::neg)
      .def("zero", &FiniteMvAlgebra::zero)
      .def("one", &FiniteMvAlgebra::one)
      .def("oplus", &FiniteMvAlgebra::op)
      .def("neg", &FiniteMvAlgebra::nn)
      .def("odot", &FiniteMvAlgebra::odot)
      .def("join", &FiniteMvAlgebra::join)
      .def("meet", &FiniteMvAlgebra::meet)
      .def("leq", &FiniteMvAlgebra::leq)
      .def("label", &FiniteMvAlgebra::label)
      .def("ord",
           [](const FiniteMvAlgebra& a, int x) { return mvs::ord(a, x); })
      .def("to_json", [](const FiniteMvAlgebra& a) {
        return to_py(algebra_to_json(a));
      })
      .def("__repr__", [](const FiniteMvAlgebra& a) {
        return "<Algebra of size " + std::to_string(a.size) + ">";
      });

  m.def("lukasiewicz", &lukasiewicz, py::arg("m"),
        "The chain with m + 1 elements");
  m.def("trivial", &trivial_algebra);
  m.def("product", &product);
  m.def("algebra_from_json",
        [](const py::object& o) { return algebra_from_json(from_py(o)); });
  m.def("validate", [](const FiniteMvAlgebra& a) {
    auto r = validate_algebra(a);
    py::dict d;
    d["ok"] = r.ok();
    d["detail"] = r.describe();
    return d;
  });
  m.def("isomorphic", &mv_isomorphic);
  m.def("quotient", [](const FiniteMvAlgebra& a, const std::vector<int>& ideal) {
    return quotient(a, vec_to_mask(ideal)).algebra;
  });

  m.def("ideals", [](const FiniteMvAlgebra& a) {
    std::vector<std::vector<int>> out;
    for (const auto& i : enumerate_ideals(a)) out.push_back(mask_to_vec(i.members));
    return out;
  });
  m.def("primes", [](const FiniteMvAlgebra& a) {
    std::vector<std::vector<int>> out;
    for (const auto& i : enumerate_ideals(a))
      if (is_prime(a, i)) out.push_back(mask_to_vec(i.members));
    return out;
  });
  m.def("maximal_ideals", [](const FiniteMvAlgebra& a) {
    std::vector<std::vector<int>> out;
    for (const auto& i : maximal_ideals(a)) out.push_back(mask_to_vec(i.members));
    return out;
  });
  m.def("radical",
        [](const FiniteMvAlgebra& a) { return mask_to_vec(radical(a).members); });
  m.def("spec", [](const FiniteMvAlgebra& a) {
    auto s = spec(a);
    return poset_dict(s.order, s.labels);
  });
  m.def("belluce", [](const FiniteMvAlgebra& a) {
    return to_py(lattice_to_json(belluce(a)));
  });
  m.def("compact_opens", [](const FiniteMvAlgebra& a) {
    return to_py(lattice_to_json(compact_opens_lattice(spec(a))));
  });

  m.def("is_perfect", [](const FiniteMvAlgebra& a) { return is_perfect(a); });
  m.def("is_local", [](const FiniteMvAlgebra& a) { return is_local(a); });
  m.def("is_semisimple", &is_semisimple);
  m.def("rank", [](const FiniteMvAlgebra& a) { return rank(a); });
  m.def("in_VC", [](const FiniteMvAlgebra& a) { return in_VC(a); });
  m.def("in_VK", [](const FiniteMvAlgebra& a, int mm) { return in_VKm(a, mm); },
        py::arg("a"), py::arg("m"));
  m.def("classify", [](const FiniteMvAlgebra& a, const std::vector<int>& ms) {
    return to_py(classification_to_json(classify(a, ms)));
  }, py::arg("a"), py::arg("komori_indices") = std::vector<int>{1, 2, 3, 4});

  m.def("normal_form_eval",
        [](const py::object& nf, const std::vector<std::string>& point) {
          auto f = normal_form_from_json(from_py(nf));
          return rational_to_string(eval_nf(f, parse_point(point)));
        });
  m.def("normal_form_zeroset", [](const py::object& nf) {
    auto f = normal_form_from_json(from_py(nf));
    return interval_to_string(zeroset_1d(f));
  });
  m.def("locally_homogeneous", [](const py::object& nf) {
    return is_locally_homogeneous(normal_form_from_json(from_py(nf)));
  });
  m.def("homogenize", [](const py::object& nf) {
    return to_py(normal_form_to_json(homogenize(normal_form_from_json(from_py(nf)))));
  });

  m.def("all_algebras", &all_mv_algebras, py::arg("n"));
  m.def("chain_products", &chain_products);

  m.def("registry_ids", [] { return registry_ids(); });
  m.def("verify", [](const std::vector<std::string>& ids) {
    CorpusSpec cs;
    py::list out;
    for (const auto& r : run_verify(cs, ids)) {
      py::dict d;
      d["id"] = r.id;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      d["runtime_ms"] = r.runtime_ms;
      out.append(d);
    }
    return out;
  });
}
