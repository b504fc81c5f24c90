#include "defzero/complex_space.hpp"
#include "defzero/experiments.hpp"
#include "defzero/netparse.hpp"
#include "defzero/network.hpp"
#include "defzero/output.hpp"
#include "defzero/sampler.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace defzero;

namespace {

py::dict report_dict(const DeficiencyReport& r)
{
    py::list comps;
    for (const auto& c : r.components) {
        py::dict d;
        d["complex_count"] = c.complex_count;
        d["rank"] = c.rank;
        d["deficiency"] = c.deficiency;
        comps.append(d);
    }
    py::dict d;
    d["num_complexes"] = r.num_complexes;
    d["num_components"] = r.num_components;
    d["rank"] = r.rank;
    d["deficiency"] = r.deficiency;
    d["is_paired"] = r.is_paired;
    d["components"] = comps;
    return d;
}

py::dict row_dict(const EstimateRow& r)
{
    py::dict d;
    d["n"] = r.n;
    d["p"] = r.p;
    if (r.k)
        d["k"] = *r.k;
    d["trials"] = r.trials;
    d["successes"] = r.successes;
    d["estimate"] = r.estimate;
    d["ci_low"] = r.ci_low;
    d["ci_high"] = r.ci_high;
    d["wall_time_ms"] = r.wall_time_ms;
    return d;
}

std::tuple<int, std::uint32_t, std::uint32_t> complex_tuple(const Complex& c)
{
    return {c.molecularity(), c.kind() == Complex::Kind::ZeroOrder ? 0 : c.first().value,
            c.kind() == Complex::Kind::Binary ? c.second().value : 0};
}

// Releases the GIL for the long-running Monte Carlo loops.
template <typename F>
auto nogil(F&& f)
{
    py::gil_scoped_release release;
    return f();
}

} // namespace

PYBIND11_MODULE(_defzero, m)
{
    m.doc() = "Deficiency of reaction networks and Erdős–Rényi threshold experiments";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("universe_size", [](std::uint64_t n) { return universe_size(n); }, py::arg("n"));
    m.def("index_to_complex", [](std::uint32_t n, std::uint64_t idx) { return complex_tuple(index_to_complex(n, idx)); },
          py::arg("n"), py::arg("idx"),
          "Complex at a universe index as (molecularity, a, b); unused slots are 0.");
    m.def(
        "complex_vector",
        [](std::uint32_t n, std::uint64_t idx) { return complex_vector(n, index_to_complex(n, idx)); },
        py::arg("n"), py::arg("idx"));

    py::class_<ReactionNetwork>(m, "ReactionNetwork")
        .def_property_readonly("species_count", &ReactionNetwork::species_count)
        .def_property_readonly("num_complexes", [](const ReactionNetwork& n) { return n.vertices().size(); })
        .def_property_readonly("num_reactions", &ReactionNetwork::reaction_count)
        .def("__repr__", [](const ReactionNetwork& n) {
            return "<ReactionNetwork species=" + std::to_string(n.species_count()) +
                   " complexes=" + std::to_string(n.vertices().size()) +
                   " reactions=" + std::to_string(n.reaction_count()) + ">";
        });

    m.def("parse_network", [](const std::string& text) { return to_reaction_network(parse_network(text)); },
          py::arg("text"));
    m.def("canonical_text", [](const std::string& text) { return serialize_network(parse_network(text)); },
          py::arg("text"));
    m.def("network_text", [](const ReactionNetwork& net) { return serialize_network(document_from_network(net)); });
    m.def("from_edge_list", [](std::uint32_t n, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
        return from_edge_list(n, edges);
    });
    m.def("deficiency", [](const ReactionNetwork& net) { return report_dict(deficiency(net)); });
    m.def("stoich_rank", &stoich_rank);
    m.def("is_paired", [](const ReactionNetwork& net) {
        auto s = is_paired(net);
        return std::make_pair(s.paired, s.components);
    });
    m.def("paired_def_zero", &paired_def_zero);

    m.def("sample_er_network", [](std::uint32_t n, double p, std::uint64_t seed) {
        return sample_er_network({n, p, seed});
    }, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("sample_k_paired", &sample_k_paired, py::arg("n"), py::arg("k"), py::arg("seed"));
    m.def("count_isolated", &count_isolated);

    m.def("exact_def_zero_prob_small", &exact_def_zero_prob_small, py::arg("n"), py::arg("p"));
    m.def(
        "estimate_def_zero_prob",
        [](std::uint32_t n, double p, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
            return row_dict(nogil([&] { return estimate_def_zero_prob({n, p, seed}, trials, {threads}); }));
        },
        py::arg("n"), py::arg("p"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);
    m.def(
        "sweep_threshold",
        [](std::vector<std::uint32_t> n_grid, double c, double beta, std::uint64_t trials, std::uint64_t seed,
           unsigned threads) {
            SweepSpec spec{std::move(n_grid), c, beta, trials, seed};
            auto rows = nogil([&] { return sweep_threshold(spec, {threads}); });
            py::list out;
            for (const auto& r : rows)
                out.append(row_dict(r));
            return out;
        },
        py::arg("n_grid"), py::arg("c"), py::arg("beta"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);
    m.def(
        "estimate_matrix_independence",
        [](std::uint32_t n, std::uint64_t k, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
            return row_dict(nogil([&] { return estimate_matrix_independence(n, k, trials, seed, {threads}); }));
        },
        py::arg("n"), py::arg("k"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);
    m.def(
        "estimate_four_species_given_paired",
        [](std::uint32_t n, std::uint32_t k, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
            return row_dict(nogil([&] { return estimate_four_species_given_paired(n, k, trials, seed, {threads}); }));
        },
        py::arg("n"), py::arg("k"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);
    m.def(
        "estimate_isolated_tail",
        [](std::uint32_t n, double alpha, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
            return row_dict(nogil([&] { return estimate_isolated_tail({n, alpha, trials, seed}, {threads}); }));
        },
        py::arg("n"), py::arg("alpha"), py::arg("trials"), py::arg("seed"), py::arg("threads") = 1);
}
