#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "helmls/analysis.hpp"
#include "helmls/projection.hpp"
#include "helmls/solver.hpp"
#include "helmls/study.hpp"

namespace py = pybind11;
using namespace helmls;

namespace {

py::dict error_dict(const ErrorReport& e)
{
    py::dict d;
    d["l2_rel"] = e.l2_rel;
    d["h1_err"] = e.h1_err;
    d["bnd_l2"] = e.bnd_l2;
    d["e1"] = e.e1;
    d["e2"] = e.e2;
    d["flux_l2"] = e.flux_l2;
    d["boundary_term"] = e.boundary_term;
    d["quadrature_change"] = e.quadrature_change;
    return d;
}

py::dict row_dict(const StudyRow& r)
{
    py::dict d;
    d["problem"] = r.problem;
    d["method"] = r.method;
    d["d"] = r.d;
    d["k"] = r.k;
    d["p"] = r.p;
    d["n_elems"] = r.n_elems;
    d["h"] = r.h;
    d["DOF"] = r.dofs;
    d["N_lambda"] = r.n_lambda;
    d["errors"] = error_dict(r.errors);
    d["eoc_l2"] = r.eoc_l2 ? py::cast(*r.eoc_l2) : py::none();
    d["galerkin_residual"] = r.galerkin_residual;
    d["solve_residual"] = r.solve_residual;
    d["solver"] = r.solver;
    return d;
}

StudyConfig config_from_dict(const py::dict& cfg)
{
    return parse_config(py::module_::import("json").attr("dumps")(cfg).cast<std::string>());
}

} // namespace

PYBIND11_MODULE(_helmls, m)
{
    m.doc() = "FOSLS and classical hp-FEM for the Helmholtz impedance problem";

    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

    py::class_<Mesh, std::shared_ptr<Mesh>>(m, "Mesh")
        .def_property_readonly("dim", &Mesh::dim)
        .def_property_readonly("num_elements", &Mesh::num_elements)
        .def_property_readonly("num_vertices", &Mesh::num_vertices)
        .def_property_readonly("num_facets", &Mesh::num_facets)
        .def_property_readonly("h", &Mesh::h)
        .def_property_readonly("volume", &Mesh::volume)
        .def("vertices", [](const Mesh& mesh) {
            MatrixXd v(mesh.num_vertices(), mesh.dim());
            for (int i = 0; i < mesh.num_vertices(); ++i) {
                v.row(i) = mesh.vertex(i).head(mesh.dim()).transpose();
            }
            return v;
        })
        .def("map_to_physical", &Mesh::map_to_physical, py::arg("elem"), py::arg("xhat"));

    auto as_mutable = [](MeshPtr p) { return std::const_pointer_cast<Mesh>(p); };
    m.def("interval_mesh", [as_mutable](double a, double b, int n) { return as_mutable(build_interval_mesh(a, b, n)); },
          py::arg("a"), py::arg("b"), py::arg("n_elems"));
    m.def("square_mesh", [as_mutable](int n) { return as_mutable(build_square_mesh(n)); }, py::arg("n_per_side"));
    m.def("disk_mesh", [as_mutable](int nb, int nr) { return as_mutable(build_polygonal_disk_mesh(nb, nr)); },
          py::arg("n_boundary"), py::arg("n_refine"));

    m.def("space_size", [](std::shared_ptr<Mesh> mesh, int p, bool hdiv) {
        return hdiv ? build_hdiv_space(mesh, p).num_dofs() : build_h1_space(mesh, p).num_dofs();
    }, py::arg("mesh"), py::arg("p"), py::arg("hdiv") = false);

    m.def("list_problems", [] {
        std::vector<std::string> names;
        for (const auto& p : problem_registry()) {
            names.push_back(p.name);
        }
        return names;
    });

    m.def("h12_00_gram", [](int p) {
        const EdgeNormGram g = h12_00_gram(p);
        return py::make_tuple(g.gram_l2, g.gram_h12_00);
    }, py::arg("p"), "(L2 Gram of the full edge basis, H^{1/2}_00 Gram of the bubbles)");

    m.def("project_reference",
          [](std::function<double(double, double)> value, std::function<std::pair<double, double>(double, double)> grad,
             int d, int p) {
              const ScalarFunction u{[&](const Vec2& x) { return value(x.x(), x.y()); },
                                     [&](const Vec2& x) {
                                         const auto g = grad(x.x(), x.y());
                                         return Vec2(g.first, g.second);
                                     }};
              return project_reference(u, d, p).coefficients;
          },
          py::arg("value"), py::arg("gradient"), py::arg("d"), py::arg("p"),
          "Coefficients of the reference projection in the hierarchical basis.");

    m.def("basis_values", [](int d, int p, double x, double y) { return ScalarBasis(d, p).values(Vec2(x, y)); },
          py::arg("d"), py::arg("p"), py::arg("x"), py::arg("y") = 0.0);

    m.def("assemble", [](const std::string& problem, double k, int p, std::shared_ptr<Mesh> mesh, const std::string& method) {
        const WaveProblem pr = make_problem(problem, k);
        const FunctionSpace w = build_h1_space(mesh, p);
        const AssembledSystem sys = method == "fem" ? assemble_classical_fem(w, pr)
                                                    : assemble_fosls(build_hdiv_space(mesh, p), w, pr);
        return py::make_tuple(sys.matrix.to_dense(), sys.rhs);
    }, py::arg("problem"), py::arg("k"), py::arg("p"), py::arg("mesh"), py::arg("method") = "fosls",
       "Dense matrix and right-hand side (small systems only).");

    m.def("solve", [](const std::string& problem, double k, int p, std::shared_ptr<Mesh> mesh, const std::string& method) {
        const WaveProblem pr = make_problem(problem, k);
        auto w = std::make_shared<const FunctionSpace>(build_h1_space(mesh, p));
        py::dict out;
        if (method == "fem") {
            const AssembledSystem sys = assemble_classical_fem(*w, pr);
            const SolveReport rep = solve_general(sys);
            out["errors"] = error_dict(compute_errors(make_solution(sys, nullptr, w, rep.solution), pr));
            out["DOF"] = sys.size();
            out["relative_residual"] = rep.relative_residual;
        } else {
            auto v = std::make_shared<const FunctionSpace>(build_hdiv_space(mesh, p));
            const AssembledSystem sys = assemble_fosls(*v, *w, pr);
            const SolveReport rep = solve_hpd(sys);
            const DiscreteSolution sol = make_solution(sys, v, w, rep.solution);
            out["errors"] = error_dict(compute_errors(sol, pr));
            out["galerkin_residual"] = galerkin_orthogonality_residual(sol, sys, pr);
            out["DOF"] = sys.size();
            out["relative_residual"] = rep.relative_residual;
        }
        return out;
    }, py::arg("problem"), py::arg("k"), py::arg("p"), py::arg("mesh"), py::arg("method") = "fosls");

    m.def("dofs_per_wavelength", &dofs_per_wavelength, py::arg("dofs"), py::arg("k"), py::arg("volume"), py::arg("d"));

    m.def("empirical_order", [](const std::vector<double>& h, const std::vector<double>& e) {
        const OrderEstimate o = empirical_order(h, e);
        return py::make_tuple(o.pairwise, o.tail);
    }, py::arg("h"), py::arg("errors"), "(pairwise orders, least-squares slope of the last 3 rows)");

    m.def("run_study", [](const py::dict& cfg) {
        const StudyResult r = run_study(config_from_dict(cfg));
        py::list rows;
        for (const auto& row : r.rows) {
            rows.append(row_dict(row));
        }
        py::dict out;
        out["rows"] = rows;
        out["warnings"] = r.warnings;
        out["csv"] = format_csv(r);
        return out;
    }, py::arg("config"), "Run a study described by a dict with the JSON config fields.");
}
