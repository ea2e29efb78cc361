#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycroots/branches.hpp"
#include "cycroots/classify.hpp"
#include "cycroots/cli.hpp"
#include "cycroots/rootgen.hpp"
#include "cycroots/spectral.hpp"
#include "cycroots/structure.hpp"
#include "cycroots/verify.hpp"

namespace py = pybind11;
using namespace cycroots;

namespace {

py::dict verdict_dict(const EnnVerdict& v) {
    py::dict d;
    d["verdict"] = to_string(v.verdict);
    d["power_index"] = v.power_index_estimate ? py::cast(*v.power_index_estimate) : py::none();
    d["k_max"] = v.k_max;
    d["reason"] = v.reason;
    return d;
}

py::dict root_dict(const RootCandidate& r) {
    py::dict d;
    d["X"] = r.is_real ? py::cast(MatrixXr(r.X.real())) : py::cast(r.X);
    d["real"] = r.is_real;
    d["residual"] = r.residual;
    d["selection"] = r.selection.per_family;
    return d;
}

VerifyOptions options(int k_max) {
    VerifyOptions o;
    o.k_max = k_max;
    return o;
}

}  // namespace

PYBIND11_MODULE(_cycroots, m) {
    m.doc() = "Eventually nonnegative p-th roots of imprimitive nonnegative matrices";

    static py::exception<Error> base(m, "Error");
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<StructureError>(m, "StructureError", base.ptr());
    py::register_exception<SingularityError>(m, "SingularityError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
    py::register_exception<SizeError>(m, "SizeError", base.ptr());
    py::register_exception<InputError>(m, "InputError", base.ptr());

    m.def(
        "index_of_imprimitivity",
        [](const MatrixXr& a, double zero_tol) { return index_of_imprimitivity(digraph_of(a, zero_tol)); },
        py::arg("a"), py::arg("zero_tol") = 0.0);
    m.def(
        "cyclic_partition",
        [](const MatrixXr& a, double zero_tol) {
            const auto g = digraph_of(a, zero_tol);
            return cyclic_partition(g, index_of_imprimitivity(g)).parts();
        },
        py::arg("a"), py::arg("zero_tol") = 0.0, "Cyclic partition (0-based parts) for the full cyclic index.");

    m.def(
        "unique_branch_tuple",
        [](std::int64_t h, std::int64_t p) -> py::object {
            const auto t = unique_branch_tuple(h, p);
            if (!t) {
                return py::none();
            }
            py::dict d;
            d["j"] = t->j;
            d["E"] = exponent_set(*t);
            d["q"] = power_q(*t).reduced;
            return d;
        },
        py::arg("h"), py::arg("p"));

    py::class_<CyclicJordanForm>(m, "CyclicJordanForm")
        .def_readonly("h", &CyclicJordanForm::h)
        .def_readonly("r1", &CyclicJordanForm::r1)
        .def_readonly("r2", &CyclicJordanForm::r2)
        .def_readonly("c", &CyclicJordanForm::c)
        .def_readonly("c_pairs", &CyclicJordanForm::complex_pairs)
        .def_readonly("derogatory", &CyclicJordanForm::derogatory)
        .def_readonly("Z", &CyclicJordanForm::Z)
        .def_property_readonly("n", &CyclicJordanForm::n)
        .def_property_readonly("source", [](const CyclicJordanForm& f) { return f.source; })
        .def_property_readonly("families",
                               [](const CyclicJordanForm& f) {
                                   py::list out;
                                   for (std::size_t i = 0; i < f.families.size(); ++i) {
                                       py::dict d;
                                       d["base_eigenvalue"] = f.families[i].base_eigenvalue;
                                       d["block_size"] = f.families[i].block_size;
                                       d["label"] = to_string(f.labels[i]);
                                       out.append(d);
                                   }
                                   return out;
                               })
        .def_property_readonly("zero_block_sizes", [](const CyclicJordanForm& f) {
            std::vector<int> s;
            for (auto b : f.zero_blocks) {
                s.push_back(f.blocks[b].size);
            }
            return s;
        });

    m.def(
        "eigendecompose", [](const MatrixXr& a) { return eigendecompose(a); }, py::arg("a"));
    m.def(
        "from_jordan_pair",
        [](const MatrixXc& z, const std::vector<std::pair<Complex, int>>& blocks, int h) {
            std::vector<JordanBlock> jb;
            for (const auto& [l, s] : blocks) {
                jb.push_back({l, s});
            }
            return from_jordan_pair(z, jb, h);
        },
        py::arg("Z"), py::arg("blocks"), py::arg("h"), "blocks: list of (eigenvalue, size) in Z's column order.");

    m.def(
        "count_enn_primary_roots",
        [](const CyclicJordanForm& f, int p) {
            const auto c = count_enn_primary_roots(f, p);
            py::dict d;
            d["count"] = c.count ? py::cast(*c.count) : py::none();
            d["gcd_ok"] = c.gcd_ok;
            d["r1"] = c.r1;
            d["r2"] = c.r2;
            d["c"] = c.c;
            d["c_pairs"] = c.c_pairs;
            d["derogatory"] = c.derogatory;
            d["rule"] = c.rule;
            return d;
        },
        py::arg("form"), py::arg("p"));
    m.def(
        "enumerate_enn_roots",
        [](const CyclicJordanForm& f, int p, std::size_t cap) {
            const auto en = enumerate_enn_roots(f, p, cap);
            py::list roots;
            for (const auto& r : en.roots) {
                roots.append(root_dict(r));
            }
            py::dict d;
            d["roots"] = roots;
            d["truncated"] = en.truncated;
            d["diagnostic"] = en.diagnostic;
            return d;
        },
        py::arg("form"), py::arg("p"), py::arg("cap") = 64);
    m.def(
        "primary_roots",
        [](const CyclicJordanForm& f, int p, std::size_t cap) {
            PrimarySelectionEnumerator it(f, p);
            BranchSelection sel;
            py::list out;
            for (std::size_t k = 0; k < cap && it.next(sel); ++k) {
                out.append(root_dict(construct_root(f, sel)));
            }
            return out;
        },
        py::arg("form"), py::arg("p"), py::arg("cap") = 64);
    m.def(
        "enn_root_exists",
        [](const CyclicJordanForm& f, int p) {
            const auto e = enn_root_exists(f, p);
            return py::make_tuple(e.exists, e.reason);
        },
        py::arg("form"), py::arg("p"));

    m.def(
        "power_verdict", [](const MatrixXr& x, int k_max) { return verdict_dict(power_verdict(x, options(k_max))); },
        py::arg("x"), py::arg("k_max") = 200);
    m.def(
        "perron_projection",
        [](const MatrixXr& a, const std::vector<std::vector<int>>& parts) {
            return perron_projection(a, OrderedPartition(static_cast<int>(a.rows()), parts));
        },
        py::arg("a"), py::arg("parts"));
    m.def(
        "stochastic_principal_root_check",
        [](const MatrixXr& a, int p) {
            const auto r = stochastic_principal_root_check(a, p);
            py::dict d;
            d["stochastic"] = r.stochastic;
            d["reason"] = r.reason;
            d["row_sums"] = r.row_sums;
            d["min_entry"] = r.min_entry;
            d["max_imag"] = r.max_imag;
            d["max_row_sum_error"] = r.max_row_sum_error;
            d["root"] = r.root;
            return d;
        },
        py::arg("a"), py::arg("p"));
    m.def(
        "completely_reducible_criterion",
        [](const MatrixXr& a, int p) {
            const auto r = completely_reducible_criterion(a, p);
            py::dict d;
            d["applicable"] = r.applicable;
            d["holds"] = r.holds;
            d["reason"] = r.reason;
            d["warnings"] = r.warnings;
            std::vector<int> hs;
            for (const auto& b : r.blocks) {
                hs.push_back(b.h);
            }
            d["block_cyclic_indices"] = hs;
            return d;
        },
        py::arg("a"), py::arg("p"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"cycroots"};
            for (const auto& a : args) {
                argv.push_back(a.c_str());
            }
            std::ostringstream out;
            std::ostringstream err;
            const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
