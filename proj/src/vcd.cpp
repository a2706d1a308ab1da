#include "rotasim/vcd.hpp"

#include <map>
#include <sstream>

namespace rotasim::vcd {

namespace {

std::string var_id(std::size_t k) {
    std::string id;
    do {
        id.insert(id.begin(), static_cast<char>('!' + k % 94));
        k /= 94;
    } while (k > 0);
    return id;
}

} // namespace

std::string render(const std::vector<Scope>& scopes) {
    long long den_lcm = 1;
    bool any_event = false;
    Time earliest(0);
    for (const Scope& sc : scopes) {
        for (const Track& tr : sc.tracks) {
            for (const SignalEvent& e : tr.signal.events()) {
                den_lcm = lcm_den(den_lcm, e.at);
                if (!any_event || e.at < earliest) earliest = e.at;
                any_event = true;
            }
        }
    }
    Time offset = any_event && earliest < Time(0) ? earliest : Time(0);
    auto tick_of = [&](const Time& t) {
        Time rel = t - offset;
        return rel.num() * (den_lcm / rel.den());
    };

    std::ostringstream out;
    out << "$comment 1 tick = 1/" << den_lcm << " time units; tick 0 is at t=" << offset.str()
        << " $end\n";
    out << "$timescale 1 s $end\n";
    std::size_t next_var = 0;
    std::vector<std::pair<std::string, const Signal*>> vars;  // id, signal
    for (const Scope& sc : scopes) {
        out << "$scope module " << sc.name << " $end\n";
        for (const Track& tr : sc.tracks) {
            std::string id = var_id(next_var++);
            out << "$var wire 1 " << id << " " << tr.name << " $end\n";
            vars.push_back({std::move(id), &tr.signal});
        }
        out << "$upscope $end\n";
    }
    out << "$enddefinitions $end\n";
    out << "#0\n$dumpvars\n";
    for (const auto& [id, sig] : vars)
        out << (sig->initial_value()[0] ? '1' : '0') << id << "\n";
    out << "$end\n";

    std::map<long long, std::vector<std::string>> changes;
    for (const auto& [id, sig] : vars)
        for (const SignalEvent& e : sig->events())
            changes[tick_of(e.at)].push_back((e.value[0] ? "1" : "0") + id);
    for (const auto& [tick, records] : changes) {
        out << "#" << tick << "\n";
        for (const std::string& r : records) out << r << "\n";
    }
    return out.str();
}

std::string trace_vcd(const ReTrace& trace) {
    Scope sc{"re", {}};
    Signal input = trace.input.to_signal();
    for (int i = 0; i < 4; ++i)
        sc.tracks.push_back({"u" + std::to_string(i + 1), input.slice(i, 1)});
    for (int i = 0; i < 5; ++i)
        sc.tracks.push_back({"x" + std::to_string(i), trace.state.slice(i, 1)});
    return render({sc});
}

std::string circuit_vcd(const SimulationResult& r) {
    std::vector<Scope> scopes;
    for (const auto& [id, trace] : r.elements) {
        Scope sc{id, {}};
        Signal input = trace.input.to_signal();
        for (int i = 0; i < 4; ++i)
            sc.tracks.push_back({"u" + std::to_string(i + 1), input.slice(i, 1)});
        for (int i = 0; i < 5; ++i)
            sc.tracks.push_back({"x" + std::to_string(i), trace.state.slice(i, 1)});
        scopes.push_back(std::move(sc));
    }
    if (!r.outputs.empty()) {
        Scope sc{"outputs", {}};
        for (const auto& [name, sig] : r.outputs) sc.tracks.push_back({name, sig});
        scopes.push_back(std::move(sc));
    }
    return render(scopes);
}

} // namespace rotasim::vcd
