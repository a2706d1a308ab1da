#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "rotasim/json_io.hpp"
#include "rotasim/vcd.hpp"

namespace {

using rotasim::io::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

int run_guarded(const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const rotasim::io::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 1;
    } catch (const rotasim::NetlistError& e) {
        std::cerr << "netlist error: " << e.what() << "\n";
        return 1;
    } catch (const rotasim::CollisionError& e) {
        std::cerr << "collision: " << e.what() << "\n";
        return 2;
    } catch (const rotasim::AdmissibilityError& e) {
        std::cerr << "inadmissible input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotary element simulator and claim checker"};
    app.require_subcommand(1);

    std::string sim_file, sim_format = "json", sim_out;
    bool sim_inverse = false;
    auto* sim = app.add_subcommand("simulate", "run one element on a pulse program");
    sim->add_option("input", sim_file, "input document (JSON)")->required();
    sim->add_flag("--inverse", sim_inverse, "run the backward system instead");
    sim->add_option("--format", sim_format, "output format")
        ->check(CLI::IsMember({"json", "vcd"}));
    sim->add_option("--out", sim_out, "write to this file instead of stdout");

    int v_depth = 3, v_samples = 0, v_mutate = 0;
    std::uint64_t v_seed = 0;
    std::string v_out;
    auto* ver = app.add_subcommand("verify", "run the claim checker suite");
    ver->add_option("--depth", v_depth, "maximum pulse-word length")->check(CLI::PositiveNumber);
    ver->add_option("--samples", v_samples, "random cases per sampled layer")
        ->check(CLI::NonNegativeNumber);
    ver->add_option("--seed", v_seed, "seed for the random layers");
    ver->add_option("--mutate", v_mutate, "corrupt the forward map with catalog entry 1..10")
        ->check(CLI::Range(0, rotasim::phi_mutation_count));
    ver->add_option("--out", v_out, "write the report to this file instead of stdout");

    std::string c_file, c_horizon, c_format = "json", c_out;
    auto* cir = app.add_subcommand("circuit", "simulate a netlist of elements");
    cir->add_option("netlist", c_file, "netlist document (JSON)")->required();
    cir->add_option("--horizon", c_horizon, "simulate strictly before this time")->required();
    cir->add_option("--format", c_format, "output format")
        ->check(CLI::IsMember({"json", "vcd"}));
    cir->add_option("--out", c_out, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (sim->parsed()) {
        return run_guarded([&] {
            auto doc = rotasim::io::input_document_from_json(rotasim::io::load_json_file(sim_file));
            rotasim::ReTrace trace = sim_inverse
                                         ? rotasim::f_inv_mu(doc.initial, doc.input)
                                         : rotasim::f_mu_closed(doc.initial, doc.input);
            if (sim_format == "vcd")
                emit(rotasim::vcd::trace_vcd(trace), sim_out);
            else
                emit(rotasim::io::trace_document_to_json(trace, sim_inverse).dump(2) + "\n",
                     sim_out);
        });
    }

    if (ver->parsed()) {
        int code = 0;
        int guarded = run_guarded([&] {
            rotasim::VerifyConfig config;
            config.depth = v_depth;
            config.samples = v_samples;
            config.seed = v_seed;
            config.mutation = static_cast<rotasim::PhiMutation>(v_mutate);
            auto verdicts = rotasim::run_suite(config);
            emit(rotasim::io::report_document_to_json(verdicts, config).dump(2) + "\n", v_out);
            for (const auto& v : verdicts)
                if (v.status == rotasim::VerdictStatus::falsified) code = 3;
        });
        return guarded != 0 ? guarded : code;
    }

    if (cir->parsed()) {
        return run_guarded([&] {
            auto net = rotasim::io::netlist_document_from_json(rotasim::io::load_json_file(c_file));
            rotasim::Time horizon = rotasim::Time::parse(c_horizon);
            auto result = rotasim::simulate(net, horizon);
            if (c_format == "vcd")
                emit(rotasim::vcd::circuit_vcd(result), c_out);
            else
                emit(rotasim::io::circuit_document_to_json(result).dump(2) + "\n", c_out);
        });
    }

    return 1;
}
