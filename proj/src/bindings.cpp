// Python bindings for the core pipeline operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "indnet/community.hpp"
#include "indnet/ingest.hpp"
#include "indnet/mstcluster.hpp"
#include "indnet/netbuild.hpp"
#include "indnet/pipeline.hpp"
#include "indnet/synthkit.hpp"
#include "indnet/topometrics.hpp"

namespace py = pybind11;
using namespace indnet;

PYBIND11_MODULE(_indnet, m) {
    m.doc() = "Industry proximity-network toolkit";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
    py::register_exception<ConnectivityError>(m, "ConnectivityError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    py::class_<OutputTable>(m, "OutputTable")
        .def(py::init<>())
        .def_readwrite("year", &OutputTable::year)
        .def_readwrite("industries", &OutputTable::industries)
        .def_readwrite("products", &OutputTable::products)
        .def_readwrite("values", &OutputTable::values)
        .def("value", py::overload_cast<std::size_t, std::size_t>(&OutputTable::value, py::const_))
        .def("row_total", &OutputTable::row_total)
        .def("__repr__", [](const OutputTable& t) {
            std::ostringstream s;
            s << "OutputTable(year=" << t.year << ", industries=" << t.n_industries()
              << ", products=" << t.n_products() << ")";
            return s.str();
        });

    py::class_<NormalizedTable>(m, "NormalizedTable")
        .def_readonly("year", &NormalizedTable::year)
        .def_readonly("industries", &NormalizedTable::industries)
        .def_readonly("products", &NormalizedTable::products)
        .def_readonly("shares", &NormalizedTable::shares)
        .def("share", &NormalizedTable::share);

    py::class_<WeightMatrix>(m, "WeightMatrix")
        .def_readonly("ids", &WeightMatrix::ids)
        .def_readonly("values", &WeightMatrix::w)
        .def("at", py::overload_cast<std::size_t, std::size_t>(&WeightMatrix::at, py::const_));

    py::class_<DistanceMatrix>(m, "DistanceMatrix")
        .def_readonly("ids", &DistanceMatrix::ids)
        .def_readonly("values", &DistanceMatrix::d)
        .def("at", py::overload_cast<std::size_t, std::size_t>(&DistanceMatrix::at, py::const_))
        .def("reachable", &DistanceMatrix::reachable);

    py::class_<TreeEdge>(m, "TreeEdge")
        .def_readonly("a", &TreeEdge::a)
        .def_readonly("b", &TreeEdge::b)
        .def_readonly("distance", &TreeEdge::distance)
        .def("__repr__", [](const TreeEdge& e) {
            return "TreeEdge(" + e.a + ", " + e.b + ", " + std::to_string(e.distance) + ")";
        });

    py::class_<SpanningTree>(m, "SpanningTree")
        .def_readonly("ids", &SpanningTree::ids)
        .def_readonly("edges", &SpanningTree::edges)
        .def_readonly("threshold", &SpanningTree::threshold);

    py::class_<Partition>(m, "Partition")
        .def_readonly("assignment", &Partition::assignment)
        .def_readonly("modularity_score", &Partition::modularity_score)
        .def_readonly("pass_scores", &Partition::pass_scores)
        .def("n_communities", &Partition::n_communities);

    py::class_<SynthParams>(m, "SynthParams")
        .def(py::init<>())
        .def_readwrite("n_industries", &SynthParams::n_industries)
        .def_readwrite("n_products", &SynthParams::n_products)
        .def_readwrite("p_inter", &SynthParams::p_inter)
        .def_readwrite("diversification", &SynthParams::diversification)
        .def_readwrite("seed", &SynthParams::seed)
        .def_readwrite("break_year", &SynthParams::break_year)
        .def_readwrite("shock", &SynthParams::shock)
        .def_readwrite("noise_sigma", &SynthParams::noise_sigma)
        .def_readwrite("start_year", &SynthParams::start_year);

    m.def("parse_output_table",
          [](const std::string& raw, int year) { return parse_output_table(raw, year); },
          py::arg("raw"), py::arg("year"));
    m.def("serialize_output_table", &serialize_output_table, py::arg("table"),
          py::arg("delim") = ',');
    m.def("read_output_table_file", &read_output_table_file, py::arg("file"), py::arg("year"));
    m.def("apply_exclusions", &apply_exclusions, py::arg("table"), py::arg("excluded"),
          py::arg("min_products"));

    m.def("normalize_rows", &normalize_rows, py::arg("table"));
    m.def("similarity_weights", &similarity_weights, py::arg("normalized"));
    m.def("distance_matrix", &distance_matrix, py::arg("weights"));

    m.def("minimum_spanning_tree",
          [](const DistanceMatrix& d) { return single_linkage(d).second; }, py::arg("distances"));
    m.def("replaced_links", &replaced_links, py::arg("a"), py::arg("b"));
    m.def("redundancy", &redundancy, py::arg("distances"), py::arg("threshold"));
    m.def("residuality", &residuality, py::arg("distances"), py::arg("threshold"));

    m.def("detect_communities", &detect_communities, py::arg("weights"),
          py::arg("resolution") = 1.0, py::arg("max_passes") = 16);
    m.def("modularity", &modularity, py::arg("weights"), py::arg("partition"),
          py::arg("resolution") = 1.0);
    m.def("stable_core", &stable_core, py::arg("partitions_by_year"));

    m.def("generate_table", &generate_table, py::arg("params"), py::arg("year_index"));
    m.def("generate_series", &generate_series, py::arg("params"), py::arg("years"));

    m.def(
        "run_analyze",
        [](const std::vector<std::filesystem::path>& inputs, const std::filesystem::path& out_dir,
           const std::set<std::string>& exclude, int min_products, double resolution,
           const std::set<std::string>& formats, int workers) {
            RunConfig cfg;
            cfg.inputs = inputs;
            cfg.out_dir = out_dir;
            cfg.exclude = exclude;
            cfg.min_products = min_products;
            cfg.resolution = resolution;
            cfg.formats = formats;
            cfg.workers = workers;
            std::ostringstream diag;
            int rc = run_analyze(cfg, diag);
            if (rc != 0) throw std::runtime_error(diag.str());
        },
        py::arg("inputs"), py::arg("out_dir"),
        py::arg("exclude") = std::set<std::string>{"T", "U"}, py::arg("min_products") = 2,
        py::arg("resolution") = 1.0, py::arg("formats") = std::set<std::string>{"json", "csv"},
        py::arg("workers") = 4);
}
