#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rotasim/json_io.hpp"
#include "rotasim/vcd.hpp"

namespace py = pybind11;

namespace {

using rotasim::io::json;

rotasim::BitVec bits_from(const std::vector<int>& coords, int width, const char* what) {
    if (static_cast<int>(coords.size()) != width)
        throw std::invalid_argument(std::string(what) + " needs exactly " +
                                    std::to_string(width) + " coordinates");
    rotasim::BitVec v(width);
    for (int i = 0; i < width; ++i) {
        if (coords[i] != 0 && coords[i] != 1)
            throw std::invalid_argument(std::string(what) + " coordinates must be 0 or 1");
        v = v.with(i, coords[i] == 1);
    }
    return v;
}

std::vector<int> bits_to(const rotasim::BitVec& v) {
    std::vector<int> out(static_cast<std::size_t>(v.width()));
    for (int i = 0; i < v.width(); ++i) out[static_cast<std::size_t>(i)] = v[i] ? 1 : 0;
    return out;
}

rotasim::ReTrace trace_of(const std::string& doc_text, bool inverse) {
    auto doc = rotasim::io::input_document_from_json(json::parse(doc_text, nullptr, true));
    return inverse ? rotasim::f_inv_mu(doc.initial, doc.input)
                   : rotasim::f_mu_closed(doc.initial, doc.input);
}

rotasim::SimulationResult circuit_of(const std::string& netlist_text,
                                     const std::string& horizon) {
    auto net = rotasim::io::netlist_document_from_json(json::parse(netlist_text, nullptr, true));
    return rotasim::simulate(net, rotasim::Time::parse(horizon));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "rotary element simulator core";

    py::register_exception<rotasim::AdmissibilityError>(m, "AdmissibilityError",
                                                        PyExc_ValueError);
    py::register_exception<rotasim::io::SchemaError>(m, "SchemaError", PyExc_ValueError);
    py::register_exception<rotasim::NetlistError>(m, "NetlistError", PyExc_ValueError);
    py::register_exception<rotasim::CollisionError>(m, "CollisionError", PyExc_RuntimeError);

    m.def(
        "simulate_json",
        [](const std::string& doc, bool inverse) {
            return rotasim::io::trace_document_to_json(trace_of(doc, inverse), inverse).dump(2);
        },
        py::arg("document"), py::arg("inverse") = false,
        "Run one element on an input document (JSON text); returns the trace document.");

    m.def(
        "simulate_vcd",
        [](const std::string& doc, bool inverse) {
            return rotasim::vcd::trace_vcd(trace_of(doc, inverse));
        },
        py::arg("document"), py::arg("inverse") = false,
        "Run one element and render the trace as a value change dump.");

    m.def(
        "run_suite_json",
        [](int depth, int samples, std::uint64_t seed, int mutation) {
            if (mutation < 0 || mutation > rotasim::phi_mutation_count)
                throw std::invalid_argument("mutation must be 0.." +
                                            std::to_string(rotasim::phi_mutation_count));
            rotasim::VerifyConfig config{depth, samples, seed,
                                         static_cast<rotasim::PhiMutation>(mutation)};
            auto verdicts = rotasim::run_suite(config);
            return rotasim::io::report_document_to_json(verdicts, config).dump(2);
        },
        py::arg("depth") = 3, py::arg("samples") = 0, py::arg("seed") = 0,
        py::arg("mutation") = 0, "Run the claim checker suite; returns the report document.");

    m.def(
        "circuit_json",
        [](const std::string& netlist, const std::string& horizon) {
            return rotasim::io::circuit_document_to_json(circuit_of(netlist, horizon)).dump(2);
        },
        py::arg("netlist"), py::arg("horizon"),
        "Simulate a netlist document strictly before the horizon; returns the trace document.");

    m.def(
        "circuit_vcd",
        [](const std::string& netlist, const std::string& horizon) {
            return rotasim::vcd::circuit_vcd(circuit_of(netlist, horizon));
        },
        py::arg("netlist"), py::arg("horizon"),
        "Simulate a netlist and render every element as a value change dump.");

    m.def(
        "phi",
        [](const std::vector<int>& state, const std::vector<int>& letter) {
            return bits_to(rotasim::phi(bits_from(state, 5, "state"),
                                        bits_from(letter, 4, "letter")));
        },
        py::arg("state"), py::arg("letter"),
        "One-letter forward map on (bar, outputs) x input value.");

    m.def(
        "phi_inv",
        [](const std::vector<int>& state, const std::vector<int>& letter) {
            return bits_to(rotasim::phi_inv(bits_from(state, 5, "state"),
                                            bits_from(letter, 4, "letter")));
        },
        py::arg("state"), py::arg("letter"), "One-letter backward map.");

    m.def(
        "equation_step",
        [](const std::vector<int>& x_prev, const std::vector<int>& u_prev,
           const std::vector<int>& u_now) {
            return bits_to(rotasim::equation_step(bits_from(x_prev, 5, "state"),
                                                  bits_from(u_prev, 4, "previous input"),
                                                  bits_from(u_now, 4, "current input")));
        },
        py::arg("x_prev"), py::arg("u_prev"), py::arg("u_now"),
        "Single update of the five state equations.");

    m.attr("mutation_count") = rotasim::phi_mutation_count;
}
