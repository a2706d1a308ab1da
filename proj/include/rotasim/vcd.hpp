#pragma once

#include <string>
#include <vector>

#include "rotasim/circuit.hpp"

namespace rotasim::vcd {

struct Track {
    std::string name;
    Signal signal;  // width 1
};

struct Scope {
    std::string name;
    std::vector<Track> tracks;
};

// Renders scopes of one-bit tracks as a value change dump. Exact rational
// times map losslessly to integer ticks: the tick is 1/L time units where L
// is the least common multiple of all event-time denominators, and tick 0
// sits at the earliest event time when that is negative, at zero otherwise.
// The header comment states both constants.
std::string render(const std::vector<Scope>& scopes);

// Nine tracks for a single element: input channels u1..u4, state x0..x4.
std::string trace_vcd(const ReTrace& trace);

// One scope per element plus a scope of external output probes.
std::string circuit_vcd(const SimulationResult& r);

} // namespace rotasim::vcd
