#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "parikh/attractors.hpp"
#include "parikh/countable.hpp"
#include "parikh/dynamics.hpp"
#include "parikh/errors.hpp"
#include "parikh/inverse.hpp"

namespace py = pybind11;
using namespace parikh;

namespace {

using Components = std::vector<Count>;

Components components(const ParikhVector& v) { return Components(v.components().begin(), v.components().end()); }

std::vector<Components> components(const std::vector<ParikhVector>& vs) {
    std::vector<Components> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(components(v));
    return out;
}

MappingMode mode_of(const std::string& mode) { return parse_mode(mode); }

py::dict trajectory_dict(const Trajectory& t) {
    py::dict d;
    d["states"] = components(t.states);
    d["tail_length"] = t.tail_length;
    d["cycle_length"] = t.cycle_length ? py::cast(*t.cycle_length) : py::none();
    d["terminated_by"] = std::string(to_string(t.terminated_by));
    if (t.escape) d["escape"] = py::make_tuple(t.escape->index, t.escape->value);
    else d["escape"] = py::none();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Parikh vectors, the basis map, its attractors and its inverse";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<OutOfRangeCount>(m, "OutOfRangeCount", base.ptr());
    py::register_exception<OutOfRangeComponent>(m, "OutOfRangeComponent", base.ptr());
    py::register_exception<NoPreimage>(m, "NoPreimage", base.ptr());
    py::register_exception<NoAttractor>(m, "NoAttractor", base.ptr());

    m.def(
        "alphabetic_map",
        [](const std::string& word, std::optional<std::string> alphabet) {
            const AlphabeticVector av = alphabet ? alphabetic_map(word, *alphabet) : alphabetic_map(word);
            return py::make_tuple(std::string(av.alphabet().begin(), av.alphabet().end()),
                                  Components(av.counts().begin(), av.counts().end()));
        },
        py::arg("word"), py::arg("alphabet") = py::none(),
        "Letter counts of a word; returns (alphabet, counts).");

    m.def(
        "alphabetic_basis_map",
        [](const Components& counts, std::size_t n, const std::string& mode) {
            std::vector<Letter> letters;
            for (std::size_t i = 0; i < counts.size(); ++i) letters.push_back(static_cast<Letter>('a' + i % 26));
            return components(alphabetic_basis_map(AlphabeticVector(letters, counts), Basis(n), mode_of(mode)));
        },
        py::arg("counts"), py::arg("n"), py::arg("mode") = "strict");

    m.def(
        "basis_map",
        [](const Components& v, const std::string& mode) { return components(basis_map(ParikhVector(v), mode_of(mode))); },
        py::arg("vector"), py::arg("mode") = "strict");

    m.def(
        "iterate",
        [](const Components& v, const std::string& mode, std::size_t step_limit) {
            return trajectory_dict(iterate(ParikhVector(v), mode_of(mode), step_limit));
        },
        py::arg("vector"), py::arg("mode") = "strict", py::arg("step_limit") = kDefaultStepLimit);

    m.def(
        "map_word",
        [](const std::string& word, std::size_t n, std::optional<std::string> alphabet, const std::string& mode) {
            const AlphabeticVector av = alphabet ? alphabetic_map(word, *alphabet) : alphabetic_map(word);
            const ParikhVector beta = alphabetic_basis_map(av, Basis(n), mode_of(mode));
            py::dict d = trajectory_dict(iterate(beta, mode_of(mode)));
            d["alphabetic_vector"] = Components(av.counts().begin(), av.counts().end());
            d["alphabetic_basis_vector"] = components(beta);
            return d;
        },
        py::arg("word"), py::arg("n"), py::arg("alphabet") = py::none(), py::arg("mode") = "strict",
        "Alphabetic map, alphabetic-basis map, then basis maps until a cycle.");

    m.def(
        "state_space", [](std::size_t n) { return components(enumerate_state_space(Basis(n)).vectors); }, py::arg("n"));

    m.def(
        "find_attractors",
        [](std::size_t n, std::size_t max_order) {
            const AttractorTable table = find_attractors(Basis(n), max_order);
            py::dict d;
            for (const auto& [k, list] : table.entries) {
                py::list cycles;
                for (const auto& a : list) cycles.append(components(a.cycle()));
                d[py::int_(k)] = cycles;
            }
            return d;
        },
        py::arg("n"), py::arg("max_order") = kDefaultMaxOrder,
        "Order -> list of cycles, each starting at its greatest member.");

    m.def(
        "formula_attractor", [](std::size_t n, std::size_t k) { return components(formula_attractor(Basis(n), k)); },
        py::arg("n"), py::arg("k"));

    m.def(
        "verify_formula",
        [](std::size_t first, std::size_t last, std::size_t exhaustive_cap) {
            return verify_formula(first, last, {1, 2}, exhaustive_cap).passed();
        },
        py::arg("n_first"), py::arg("n_last"), py::arg("exhaustive_cap") = kDefaultExhaustiveCap);

    m.def(
        "inverse_map", [](const Components& t) { return components(inverse_map(ParikhVector(t)).vectors); },
        py::arg("target"));

    m.def(
        "preimage_count", [](const Components& t) { return preimage_count(ParikhVector(t)); }, py::arg("target"));

    m.def(
        "reachability_rate",
        [](std::size_t n, std::size_t k) {
            const ReachabilityReport r = reachability_rate(Basis(n), k);
            py::dict d;
            d["rate_from_alphabetic"] = r.rate_from_alphabetic;
            d["rate_from_word"] = r.rate_from_word;
            d["witness_chain"] = components(r.witness_chain);
            d["levels"] = r.levels();
            d["flagged"] = r.flagged;
            const WitnessChain w = witness_chain(r);
            d["witness_word"] = w.example_word.empty() ? py::none() : py::cast(w.example_word);
            d["witness_verified"] = w.valid;
            return d;
        },
        py::arg("n"), py::arg("k"));

    m.def("verify_countable", [] {
        py::list out;
        for (const auto& c : verify_countable_attractors().checks) out.append(py::make_tuple(c.name, c.passed));
        return out;
    });

    m.def(
        "parse_vector",
        [](const std::string& text, std::optional<std::size_t> n) { return components(parse_vector(text, n)); },
        py::arg("text"), py::arg("n") = py::none());

    m.def(
        "format_vector", [](const Components& v) { return format_vector(ParikhVector(v)); }, py::arg("vector"));
}
