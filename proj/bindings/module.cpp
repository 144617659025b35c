#include "braingk/data_model.hpp"
#include "braingk/graph_kernels.hpp"
#include "braingk/learn.hpp"
#include "braingk/pipeline.hpp"
#include "braingk/similarity.hpp"
#include "braingk/sparse_graph.hpp"
#include "braingk/topology.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace braingk;

namespace {

py::array_t<double> diagram_to_array(const PersistenceDiagram& d) {
  py::array_t<double> out({static_cast<py::ssize_t>(d.pairs.size()), py::ssize_t(2)});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < view.shape(0); ++i) {
    view(i, 0) = d.pairs[i].birth;
    view(i, 1) = d.pairs[i].death;
  }
  return out;
}

PersistenceDiagram diagram_from_array(const Eigen::MatrixXd& pairs, int dimension) {
  if (pairs.size() > 0 && pairs.cols() != 2)
    throw std::invalid_argument("diagram array must have shape (n, 2)");
  PersistenceDiagram d;
  d.dimension = dimension;
  for (int i = 0; i < pairs.rows(); ++i) d.pairs.push_back({pairs(i, 0), pairs(i, 1)});
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Similarity graphs, graph kernels and LOO severity classification "
            "for multivariate time series";

  py::enum_<SeverityClass>(m, "SeverityClass")
      .value("Mild", SeverityClass::Mild)
      .value("Moderate", SeverityClass::Moderate)
      .value("Severe", SeverityClass::Severe);

  py::enum_<SimilarityMethod>(m, "SimilarityMethod")
      .value("Correlation", SimilarityMethod::Correlation)
      .value("RBF", SimilarityMethod::RBF)
      .value("PcaRbf", SimilarityMethod::PcaRbf)
      .value("L1Graph", SimilarityMethod::L1Graph)
      .value("Persistence", SimilarityMethod::Persistence);

  py::class_<SubjectRecord>(m, "SubjectRecord")
      .def(py::init<>())
      .def(py::init([](std::string id, std::string site, int ados, Eigen::MatrixXd data) {
             SubjectRecord r;
             r.id = std::move(id);
             r.site = std::move(site);
             r.ados = ados;
             r.data = std::move(data);
             return r;
           }),
           py::arg("id"), py::arg("site"), py::arg("ados"), py::arg("data"))
      .def_readwrite("id", &SubjectRecord::id)
      .def_readwrite("site", &SubjectRecord::site)
      .def_readwrite("ados", &SubjectRecord::ados)
      .def_readwrite("data", &SubjectRecord::data)
      .def_property_readonly("regions", &SubjectRecord::regions)
      .def_property_readonly("samples", &SubjectRecord::samples);

  py::class_<Cohort>(m, "Cohort")
      .def(py::init<>())
      .def_readwrite("subjects", &Cohort::subjects)
      .def("__len__", &Cohort::size)
      .def("__getitem__",
           [](const Cohort& c, int i) {
             if (i < 0) i += c.size();
             if (i < 0 || i >= c.size()) throw py::index_error();
             return c.subjects[i];
           })
      .def_property_readonly("regions", &Cohort::regions);

  py::class_<SimilarityMatrix>(m, "SimilarityMatrix")
      .def_readonly("values", &SimilarityMatrix::values)
      .def_readonly("method", &SimilarityMatrix::method)
      .def_readonly("normalized", &SimilarityMatrix::normalized)
      .def_readonly("degenerate_rows", &SimilarityMatrix::degenerate_rows);

  py::class_<KernelMatrix>(m, "KernelMatrix")
      .def(py::init([](Eigen::MatrixXd values, std::string kind, bool normalized) {
             KernelMatrix k;
             k.values = std::move(values);
             k.kind = std::move(kind);
             k.normalized = normalized;
             return k;
           }),
           py::arg("values"), py::arg("kind") = "custom", py::arg("normalized") = false)
      .def_readonly("values", &KernelMatrix::values)
      .def_readonly("kind", &KernelMatrix::kind)
      .def_readonly("normalized", &KernelMatrix::normalized);

  py::class_<PersistenceDiagram>(m, "PersistenceDiagram")
      .def(py::init([](const Eigen::MatrixXd& pairs, int dimension) {
             return diagram_from_array(pairs, dimension);
           }),
           py::arg("pairs"), py::arg("dimension") = 1)
      .def_readonly("dimension", &PersistenceDiagram::dimension)
      .def_property_readonly("pairs", &diagram_to_array)
      .def("drop_infinite", &PersistenceDiagram::drop_infinite)
      .def("cap_infinite", &PersistenceDiagram::cap_infinite)
      .def("__len__", &PersistenceDiagram::size);

  py::class_<PointCloud>(m, "PointCloud")
      .def(py::init([](Eigen::MatrixXd points) {
             PointCloud c;
             c.points = std::move(points);
             return c;
           }),
           py::arg("points"))
      .def_readonly("points", &PointCloud::points)
      .def("__len__", &PointCloud::size);

  py::class_<LabeledGraph>(m, "LabeledGraph")
      .def_readonly("n", &LabeledGraph::n)
      .def_readonly("adj", &LabeledGraph::adj)
      .def_readonly("labels", &LabeledGraph::labels)
      .def("degree", &LabeledGraph::degree);

  // data model
  m.def("bin_ados", &bin_ados, py::arg("score"));
  m.def(
      "znormalize",
      [](const Eigen::VectorXd& series) {
        const auto z = znormalize(series);
        return py::make_tuple(z.values, z.degenerate);
      },
      py::arg("series"), "Returns (values, degenerate_flag).");
  m.def("load_manifest", &load_manifest, py::arg("path"));
  m.def("generate_synthetic_cohort", &generate_synthetic_cohort, py::arg("seed"), py::arg("L"),
        py::arg("K"), py::arg("N"));

  // similarity
  m.def("pearson_similarity", &pearson_similarity, py::arg("data"));
  m.def("rbf_similarity", &rbf_similarity, py::arg("data"),
        py::arg("gamma") = std::optional<double>{});
  m.def("rbf_median_gamma", &rbf_median_gamma, py::arg("data"));
  m.def("pca_features", &pca_features, py::arg("data"), py::arg("d"));
  m.def("pca_directions", &pca_directions, py::arg("samples"), py::arg("d"));
  m.def("normalize_unit_interval", &normalize_unit_interval, py::arg("m"));

  // sparse graph
  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("lambda_", &SolverConfig::lambda)
      .def_readwrite("tol", &SolverConfig::tol)
      .def_readwrite("max_iter", &SolverConfig::max_iter);
  py::class_<SparseCode>(m, "SparseCode")
      .def_readonly("coefficients", &SparseCode::coefficients)
      .def_readonly("objective", &SparseCode::objective)
      .def_readonly("iterations", &SparseCode::iterations)
      .def_readonly("kkt_residual", &SparseCode::kkt_residual)
      .def_readonly("objective_history", &SparseCode::objective_history);
  m.def("solve_nonneg_lasso", &solve_nonneg_lasso, py::arg("X"), py::arg("target"),
        py::arg("config") = SolverConfig{});
  m.def("l1_graph", &l1_graph, py::arg("data"), py::arg("config") = SolverConfig{});

  // topology
  m.def("delay_embed", &delay_embed, py::arg("series"), py::arg("m"), py::arg("tau"));
  py::class_<RipsResult>(m, "RipsResult")
      .def_readonly("h0", &RipsResult::h0)
      .def_readonly("h1", &RipsResult::h1)
      .def_readonly("max_scale", &RipsResult::max_scale);
  m.def("rips_persistence", &rips_persistence, py::arg("cloud"),
        py::arg("max_scale") = std::optional<double>{});
  m.def("pssk", &pssk, py::arg("f"), py::arg("g"), py::arg("sigma"));
  py::class_<PersistenceParams>(m, "PersistenceParams")
      .def(py::init<>())
      .def_readwrite("m", &PersistenceParams::m)
      .def_readwrite("tau", &PersistenceParams::tau)
      .def_readwrite("sigma", &PersistenceParams::sigma);
  m.def("persistence_similarity", &persistence_similarity, py::arg("subject"),
        py::arg("params") = PersistenceParams{});
  m.def("region_diagrams", &region_diagrams, py::arg("subject"),
        py::arg("params") = PersistenceParams{});

  // graph kernels
  m.def("binarize", &binarize, py::arg("m"), py::arg("threshold"));
  m.def(
      "binarize_density",
      [](const SimilarityMatrix& m, double density) {
        double chosen = 0.0;
        auto g = binarize_density(m, density, &chosen);
        return py::make_tuple(g, chosen);
      },
      py::arg("m"), py::arg("density"), "Returns (graph, chosen_threshold).");
  m.def(
      "wl_kernel",
      [](const std::vector<LabeledGraph>& graphs, int h) { return wl_kernel(graphs, h); },
      py::arg("graphs"), py::arg("h") = 3);
  m.def("sp_kernel", &sp_kernel, py::arg("graphs"));

  // learn
  py::class_<SvmConfig>(m, "SvmConfig")
      .def(py::init<>())
      .def_readwrite("C", &SvmConfig::C)
      .def_readwrite("tol", &SvmConfig::tol)
      .def_readwrite("max_iter", &SvmConfig::max_iter);
  py::class_<SVMModel>(m, "SVMModel")
      .def_readonly("alpha", &SVMModel::alpha)
      .def_readonly("bias", &SVMModel::bias)
      .def_readonly("support", &SVMModel::support)
      .def_readonly("C", &SVMModel::C)
      .def_readonly("kkt_violation", &SVMModel::kkt_violation);
  py::class_<EvalReport>(m, "EvalReport")
      .def_readonly("truth", &EvalReport::truth)
      .def_readonly("predicted", &EvalReport::predicted)
      .def_readonly("warnings", &EvalReport::warnings)
      .def_property_readonly("accuracy",
                             [](const EvalReport& r) { return r.accuracy_percent(); })
      .def_property_readonly("confusion",
                             [](const EvalReport& r) {
                               Eigen::MatrixXd c(3, 3);
                               for (int i = 0; i < 3; ++i)
                                 for (int j = 0; j < 3; ++j) c(i, j) = r.confusion(i, j);
                               return c;
                             })
      .def("to_json", [](const EvalReport& r) { return r.to_json().dump(2); });

  m.def("vectorize_upper", &vectorize_upper, py::arg("m"));
  m.def("linear_kernel", &linear_kernel, py::arg("features"));
  m.def("normalize_kernel", &normalize_kernel, py::arg("k"));
  m.def("sum_kernel", &sum_kernel, py::arg("kernels"), py::arg("weights"));
  m.def("train_svm", &train_svm, py::arg("kernel"), py::arg("y"),
        py::arg("config") = SvmConfig{});
  m.def("predict", &predict, py::arg("model"), py::arg("kernel_row"));
  m.def("loo_evaluate", &loo_evaluate, py::arg("kernel"), py::arg("labels"),
        py::arg("config") = SvmConfig{}, py::arg("ids") = std::vector<std::string>{});

  m.attr("__version__") = "0.1.0";
}
