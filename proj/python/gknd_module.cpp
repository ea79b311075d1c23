#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gknd/checker.hpp"
#include "gknd/compiler.hpp"
#include "gknd/derivations.hpp"
#include "gknd/parse.hpp"
#include "gknd/proof_io.hpp"
#include "gknd/render.hpp"
#include "gknd/translation.hpp"

namespace py = pybind11;
using namespace gknd;

namespace {

// Immutable trees are held through shared_ptr-to-const, which pybind11 cannot
// use as a holder; these value wrappers stand in.
struct PyFormula {
  FormulaPtr ptr;
};
struct PyProof {
  ProofPtr ptr;
};
struct PyJudgment {
  Judgment j;
};

Mode mode_arg(const std::string& s) {
  auto m = Mode::from_string(s);
  if (!m) throw py::value_error("unknown mode '" + s + "'");
  return *m;
}

std::vector<PyFormula> wrap_all(const std::vector<FormulaPtr>& fs) {
  std::vector<PyFormula> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back({f});
  return out;
}

}  // namespace

PYBIND11_MODULE(_gknd, m) {
  m.doc() = "Natural deduction kernel, double-negation translation, NK<->NJ compiler";

  py::register_exception<ParseError>(m, "FormulaParseError");
  py::register_exception<ProofError>(m, "ProofStructureError");
  py::register_exception<CheckError>(m, "CheckFailure");

  py::class_<PyFormula>(m, "Formula")
      .def("__str__", [](const PyFormula& f) { return print_formula(f.ptr); })
      .def("__repr__",
           [](const PyFormula& f) { return "Formula('" + print_formula(f.ptr) + "')"; })
      .def("__eq__",
           [](const PyFormula& a, const PyFormula& b) { return alpha_eq(a.ptr, b.ptr); })
      .def("free_vars", [](const PyFormula& f) { return free_vars(f.ptr); });

  py::class_<PyProof>(m, "Proof")
      .def("__str__", [](const PyProof& p) { return write_proof(p.ptr); })
      .def_property_readonly("size",
                             [](const PyProof& p) { return proof_size(p.ptr); })
      .def_property_readonly("height",
                             [](const PyProof& p) { return proof_height(p.ptr); });

  py::class_<PyJudgment>(m, "Judgment")
      .def_property_readonly("context",
                             [](const PyJudgment& j) { return wrap_all(j.j.context); })
      .def_property_readonly("conclusion",
                             [](const PyJudgment& j) { return PyFormula{j.j.conclusion}; })
      .def("__str__", [](const PyJudgment& j) { return print_judgment(j.j); });

  m.def("parse_formula",
        [](const std::string& s) { return PyFormula{parse_formula(s)}; });
  m.def("print_formula", [](const PyFormula& f) { return print_formula(f.ptr); });
  m.def("nn_translate",
        [](const PyFormula& f) { return PyFormula{nn_translate(f.ptr)}; });
  m.def(
      "substitute",
      [](const PyFormula& f, const std::string& var, const std::string& term) {
        return PyFormula{substitute(f.ptr, var, parse_term(term))};
      },
      py::arg("formula"), py::arg("var"), py::arg("term"));
  m.def("alpha_eq",
        [](const PyFormula& a, const PyFormula& b) { return alpha_eq(a.ptr, b.ptr); });

  m.def(
      "check",
      [](const PyProof& p, const std::string& mode) {
        return PyJudgment{check(p.ptr, mode_arg(mode))};
      },
      py::arg("proof"), py::arg("mode") = "nj");
  m.def("open_hypotheses",
        [](const PyProof& p) { return wrap_all(open_hypotheses(p.ptr)); });
  m.def("classical_axioms_used", [](const PyProof& p) {
    std::vector<std::string> out;
    for (auto a : classical_axioms_used(p.ptr))
      out.push_back(a == ClassicalAxiom::TND        ? "tnd"
                    : a == ClassicalAxiom::RAA      ? "raa"
                    : a == ClassicalAxiom::RAA_RULE ? "raa_rule"
                                                    : "peirce");
    return out;
  });

  m.def("stability_proof",
        [](const PyFormula& f) { return PyProof{stability_proof(f.ptr)}; });
  m.def("triple_neg_proof",
        [](const PyFormula& f) { return PyProof{triple_neg_proof(f.ptr)}; });
  m.def("raa_implies_tnd",
        [](const PyFormula& a) { return PyProof{raa_implies_tnd(a.ptr)}; });
  m.def("tnd_implies_peirce", [](const PyFormula& p, const PyFormula& q) {
    return PyProof{tnd_implies_peirce(p.ptr, q.ptr)};
  });
  m.def("peirce_implies_raa",
        [](const PyFormula& p) { return PyProof{peirce_implies_raa(p.ptr)}; });
  m.def("raa_axiom_from_rule",
        [](const PyFormula& a) { return PyProof{raa_axiom_from_rule(a.ptr)}; });

  m.def(
      "nk_to_nj",
      [](const PyProof& p, size_t cap) { return PyProof{nk_to_nj(p.ptr, cap)}; },
      py::arg("proof"), py::arg("size_cap") = kDefaultProofSizeCap);
  m.def("add_dn_proof",
        [](const PyFormula& a) { return PyProof{add_dn_proof(a.ptr)}; });
  m.def("drop_dn_proof",
        [](const PyFormula& a) { return PyProof{drop_dn_proof(a.ptr)}; });
  m.def(
      "nj_translation_to_nk",
      [](const PyProof& p, const std::vector<PyFormula>& gamma, const PyFormula& f,
         size_t cap) {
        std::vector<FormulaPtr> ctx;
        ctx.reserve(gamma.size());
        for (const auto& g : gamma) ctx.push_back(g.ptr);
        return PyProof{nj_translation_to_nk(p.ptr, ctx, f.ptr, cap)};
      },
      py::arg("proof"), py::arg("context"), py::arg("conclusion"),
      py::arg("size_cap") = kDefaultProofSizeCap);

  m.def("read_proof",
        [](const std::string& text) { return PyProof{read_proof(text).proof}; });
  m.def("write_proof", [](const PyProof& p) { return write_proof(p.ptr); });
  m.def(
      "render",
      [](const PyProof& p, const std::string& style, const std::string& mode) {
        return style == "latex" ? render_latex(p.ptr, mode_arg(mode))
                                : render_ascii(p.ptr, mode_arg(mode));
      },
      py::arg("proof"), py::arg("style") = "ascii", py::arg("mode") = "nk");
}
