#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>

#include "alcs/corpus.hpp"
#include "alcs/index_builder.hpp"
#include "alcs/index_io.hpp"
#include "alcs/lz_parse.hpp"
#include "alcs/oracle.hpp"
#include "alcs/query_engine.hpp"

namespace py = pybind11;

namespace {

alcs::QueryResult run_query(const alcs::AlcsIndex& index, const std::string& pattern,
                            const std::string& algo, alcs::QueryStats* stats) {
    if (algo == "naive") return alcs::query_naive(index, pattern, stats);
    if (algo == "pruned") return alcs::query_pruned(index, pattern, stats);
    throw std::invalid_argument("algo must be 'naive' or 'pruned'");
}

}  // namespace

PYBIND11_MODULE(_alcs, m) {
    m.doc() = "Index for approximately longest common substrings, built on the LZ77 parse";

    py::class_<alcs::QueryResult>(m, "QueryResult")
        .def_readonly("p_start", &alcs::QueryResult::p_start)
        .def_readonly("p_end", &alcs::QueryResult::p_end)
        .def_readonly("length", &alcs::QueryResult::length)
        .def_readonly("t_pos", &alcs::QueryResult::t_pos)
        .def("__repr__", [](const alcs::QueryResult& r) {
            std::ostringstream os;
            os << "QueryResult(length=" << r.length << ", p_start=" << r.p_start
               << ", p_end=" << r.p_end << ", t_pos=";
            if (r.t_pos) {
                os << *r.t_pos;
            } else {
                os << "None";
            }
            os << ")";
            return os.str();
        });

    py::class_<alcs::QueryStats>(m, "QueryStats")
        .def_readonly("map_lookups", &alcs::QueryStats::map_lookups)
        .def_readonly("grid_checks", &alcs::QueryStats::grid_checks)
        .def_readonly("candidates", &alcs::QueryStats::candidates);

    py::class_<alcs::LcsAnswer>(m, "LcsAnswer")
        .def_readonly("length", &alcs::LcsAnswer::length)
        .def_readonly("p_start", &alcs::LcsAnswer::p_start)
        .def_readonly("p_end", &alcs::LcsAnswer::p_end)
        .def_readonly("t_start", &alcs::LcsAnswer::t_start)
        .def_readonly("t_end", &alcs::LcsAnswer::t_end);

    py::class_<alcs::AlcsIndex>(m, "Index")
        .def_property_readonly("n", [](const alcs::AlcsIndex& i) { return i.n; })
        .def_property_readonly("z", [](const alcs::AlcsIndex& i) { return i.z; })
        .def_property_readonly("epsilon", [](const alcs::AlcsIndex& i) { return i.epsilon; })
        .def_property_readonly("seed", [](const alcs::AlcsIndex& i) { return i.build_seed; })
        .def_property_readonly("lengths",
                               [](const alcs::AlcsIndex& i) { return i.lengths.values; })
        .def(
            "query",
            [](const alcs::AlcsIndex& index, const std::string& pattern, const std::string& algo) {
                return run_query(index, pattern, algo, nullptr);
            },
            py::arg("pattern"), py::arg("algo") = "pruned",
            py::call_guard<py::gil_scoped_release>())
        .def(
            "query_with_stats",
            [](const alcs::AlcsIndex& index, const std::string& pattern, const std::string& algo) {
                alcs::QueryStats stats;
                alcs::QueryResult result = run_query(index, pattern, algo, &stats);
                return std::make_pair(result, stats);
            },
            py::arg("pattern"), py::arg("algo") = "pruned",
            py::call_guard<py::gil_scoped_release>())
        .def("save", &alcs::save_index_file, py::arg("path"))
        .def_static("load", &alcs::load_index_file, py::arg("path"))
        .def("serialize",
             [](const alcs::AlcsIndex& index) { return py::bytes(alcs::serialize_index(index)); })
        .def_static("deserialize",
                    [](const std::string& bytes) { return alcs::deserialize_index(bytes); },
                    py::arg("bytes"))
        .def("__eq__", [](const alcs::AlcsIndex& a, const alcs::AlcsIndex& b) { return a == b; });

    m.def(
        "build_index",
        [](const std::string& text, double epsilon, std::optional<uint64_t> seed,
           std::optional<uint64_t> max_pattern_len) {
            alcs::BuildOptions options;
            options.seed = seed;
            options.max_pattern_len = max_pattern_len;
            return alcs::build_index(text, epsilon, options);
        },
        py::arg("text"), py::arg("epsilon"), py::arg("seed") = std::nullopt,
        py::arg("max_pattern_len") = std::nullopt, py::call_guard<py::gil_scoped_release>());

    m.def("exact_lcs", &alcs::exact_lcs, py::arg("pattern"), py::arg("text"),
          py::call_guard<py::gil_scoped_release>());

    m.def(
        "verify_result",
        [](const alcs::QueryResult& result, const std::string& pattern, const std::string& text) {
            return alcs::verify_result(result, pattern, text);
        },
        py::arg("result"), py::arg("pattern"), py::arg("text"));

    m.def(
        "lz77_parse",
        [](const std::string& text) {
            py::list out;
            for (const alcs::Phrase& ph : alcs::lz77_parse(text).phrases) {
                out.append(py::make_tuple(ph.start, ph.end, ph.source));
            }
            return out;
        },
        py::arg("text"), "Greedy parse as (start, end, source) tuples, 1-based; source is None "
                         "for single-character phrases");

    m.def(
        "generate_corpus",
        [](uint64_t base_len, uint64_t repeats, double mut_rate, uint64_t seed,
           uint32_t alphabet) {
            return py::bytes(alcs::generate_corpus({base_len, repeats, mut_rate, seed, alphabet}));
        },
        py::arg("base_len") = 1024, py::arg("repeats") = 64, py::arg("mut_rate") = 0.001,
        py::arg("seed") = 7, py::arg("alphabet") = 4);
}
