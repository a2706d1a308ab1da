#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rotasim/rotary.hpp"

namespace rotasim {

struct NetlistElement {
    std::string id;
    Bar initial = Bar::horizontal;
};

struct InputPin {
    std::string element;
    int channel = 1;  // 1..4

    friend bool operator==(const InputPin&, const InputPin&) = default;
};

struct OutputPin {
    std::string element;
    int channel = 1;  // 1..4

    friend bool operator==(const OutputPin&, const OutputPin&) = default;
};

// Directed connection with a strictly positive propagation delay. The target
// is either another element's input channel or a named probe collecting an
// external output signal.
struct Wire {
    OutputPin from;
    std::variant<InputPin, std::string> to;
    Time delay{0};
};

struct Interval {
    Time start;
    TimeBound end;
};

// Pulse program delivered directly to one element input channel, with the
// listed times taken as arrival times.
struct ExternalInput {
    std::string name;
    InputPin target;
    std::vector<Interval> intervals;
};

struct Netlist {
    std::vector<NetlistElement> elements;
    std::vector<Wire> wires;
    std::vector<ExternalInput> externals;
};

// Structural problem: bad reference, duplicate driver, nonpositive delay,
// pulse at or beyond the horizon.
class NetlistError : public std::runtime_error {
public:
    explicit NetlistError(const std::string& what) : std::runtime_error(what) {}
};

// Two bullets meeting at one element's inputs: the assembled input signal
// leaves the admissible set.
class CollisionError : public std::runtime_error {
public:
    CollisionError(std::string element, Time at, InputCondition condition);

    const std::string& element() const { return element_; }
    const Time& at() const { return at_; }
    InputCondition condition() const { return condition_; }

private:
    std::string element_;
    Time at_;
    InputCondition condition_;
};

struct SimulationResult {
    std::vector<std::pair<std::string, ReTrace>> elements;  // netlist order
    std::vector<std::pair<std::string, Signal>> outputs;    // width 1, wire order
    Time horizon{0};
};

// Event-driven evaluation on [min event time, horizon). Delays are strictly
// positive, so events resolve in increasing time order and the result is
// unique regardless of element ordering. Each element's assembled input is
// checked against the admissible set as events land; afterwards every trace
// is cross-checked against the closed-form evaluator.
SimulationResult simulate(const Netlist& net, const Time& horizon);

} // namespace rotasim
