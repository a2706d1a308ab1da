#include "rotasim/circuit.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace rotasim {

CollisionError::CollisionError(std::string element, Time at, InputCondition condition)
    : std::runtime_error("collision at element '" + element + "' at t=" + at.str() + ": " +
                         condition_name(condition)),
      element_(std::move(element)),
      at_(at),
      condition_(condition) {}

namespace {

struct ElementState {
    Bar initial = Bar::horizontal;
    BitVec u{4};
    BitVec x{5};
    std::vector<SignalEvent> input_events;
    std::vector<SignalEvent> state_events;
};

void check_structure(const Netlist& net, const Time& horizon) {
    std::set<std::string> ids;
    for (const auto& e : net.elements) {
        if (e.id.empty()) throw NetlistError("element with empty id");
        if (!ids.insert(e.id).second) throw NetlistError("duplicate element id '" + e.id + "'");
    }
    auto check_pin = [&](const std::string& element, int channel, const char* kind) {
        if (!ids.count(element))
            throw NetlistError(std::string(kind) + " refers to unknown element '" + element + "'");
        if (channel < 1 || channel > 4)
            throw NetlistError(std::string(kind) + " channel " + std::to_string(channel) +
                               " out of range 1..4 on element '" + element + "'");
    };
    std::set<std::pair<std::string, int>> driven, tapped;
    std::set<std::string> output_names;
    for (const auto& w : net.wires) {
        check_pin(w.from.element, w.from.channel, "wire source");
        if (!(Time(0) < w.delay))
            throw NetlistError("wire from '" + w.from.element + "' needs a positive delay, got " +
                               w.delay.str());
        if (!tapped.insert({w.from.element, w.from.channel}).second)
            throw NetlistError("output channel " + std::to_string(w.from.channel) +
                               " of element '" + w.from.element + "' feeds two wires");
        if (const auto* pin = std::get_if<InputPin>(&w.to)) {
            check_pin(pin->element, pin->channel, "wire target");
            if (!driven.insert({pin->element, pin->channel}).second)
                throw NetlistError("input channel " + std::to_string(pin->channel) +
                                   " of element '" + pin->element + "' has two drivers");
        } else {
            const auto& name = std::get<std::string>(w.to);
            if (name.empty()) throw NetlistError("external output with empty name");
            if (!output_names.insert(name).second)
                throw NetlistError("duplicate external output name '" + name + "'");
        }
    }
    std::set<std::string> input_names;
    for (const auto& ext : net.externals) {
        if (ext.name.empty()) throw NetlistError("external input with empty name");
        if (!input_names.insert(ext.name).second)
            throw NetlistError("duplicate external input name '" + ext.name + "'");
        check_pin(ext.target.element, ext.target.channel, "external input target");
        if (!driven.insert({ext.target.element, ext.target.channel}).second)
            throw NetlistError("input channel " + std::to_string(ext.target.channel) +
                               " of element '" + ext.target.element + "' has two drivers");
        for (const auto& iv : ext.intervals) {
            if (!(iv.start < horizon) || (iv.end && !(*iv.end < horizon)))
                throw NetlistError("pulse of external input '" + ext.name +
                                   "' reaches the horizon " + horizon.str());
        }
        // one channel's pulses form an admissible single-channel input
        std::vector<Pulse> pulses;
        for (const auto& iv : ext.intervals)
            pulses.push_back({Letter::channel(ext.target.channel), iv.start, iv.end});
        auto r = try_build_input(std::move(pulses));
        if (const auto* rej = std::get_if<Rejection>(&r))
            throw CollisionError(ext.target.element, rej->witness.value_or(Time(0)),
                                 rej->condition);
    }
}

} // namespace

SimulationResult simulate(const Netlist& net, const Time& horizon) {
    check_structure(net, horizon);

    std::map<std::string, ElementState> state;
    for (const auto& e : net.elements) {
        state[e.id].initial = e.initial;
        state[e.id].x = initial_state(e.initial);
    }
    std::map<std::pair<std::string, int>, const Wire*> wire_at;
    for (const auto& w : net.wires) wire_at[{w.from.element, w.from.channel}] = &w;
    std::map<std::string, std::vector<SignalEvent>> output_events;
    for (const auto& w : net.wires)
        if (const auto* name = std::get_if<std::string>(&w.to)) output_events[*name];

    // pending input edges grouped by time, then element, for deterministic
    // same-instant processing
    std::map<Time, std::map<std::string, std::vector<std::pair<int, bool>>>> queue;
    for (const auto& ext : net.externals) {
        for (const auto& iv : ext.intervals) {
            queue[iv.start][ext.target.element].push_back({ext.target.channel, true});
            if (iv.end) queue[*iv.end][ext.target.element].push_back({ext.target.channel, false});
        }
    }

    while (!queue.empty()) {
        auto node = queue.extract(queue.begin());
        const Time& t = node.key();
        for (const auto& [id, arrivals] : node.mapped()) {
            ElementState& st = state.at(id);
            BitVec u_now = st.u;
            for (const auto& [channel, value] : arrivals) u_now = u_now.with(channel - 1, value);
            if (u_now == st.u) continue;
            if (u_now.count() > 1) throw CollisionError(id, t, InputCondition::overlapping_channels);
            bool rises = false, falls = false;
            for (int i = 0; i < 4; ++i) {
                rises = rises || (u_now[i] && !st.u[i]);
                falls = falls || (!u_now[i] && st.u[i]);
            }
            if (rises && falls) throw CollisionError(id, t, InputCondition::rise_with_fall);
            BitVec x_new = equation_step(st.x, st.u, u_now);
            st.input_events.push_back({t, u_now});
            if (x_new != st.x) {
                st.state_events.push_back({t, x_new});
                for (int c = 1; c <= 4; ++c) {
                    if (x_new[c] == st.x[c]) continue;
                    auto it = wire_at.find({id, c});
                    if (it == wire_at.end()) continue;  // unconnected output
                    const Wire& w = *it->second;
                    Time arrival = t + w.delay;
                    if (!(arrival < horizon)) continue;  // outside the window
                    if (const auto* pin = std::get_if<InputPin>(&w.to))
                        queue[arrival][pin->element].push_back({pin->channel, x_new[c]});
                    else
                        output_events[std::get<std::string>(w.to)].push_back(
                            {arrival, BitVec::of({x_new[c]})});
                }
            }
            st.u = u_now;
            st.x = x_new;
        }
    }

    SimulationResult result;
    result.horizon = horizon;
    for (const auto& e : net.elements) {
        ElementState& st = state.at(e.id);
        Signal input_signal = Signal::normalize(BitVec(4), std::move(st.input_events));
        auto membership = validate_membership(input_signal);
        if (const auto* rej = std::get_if<Rejection>(&membership))
            throw CollisionError(e.id, rej->witness.value_or(Time(0)), rej->condition);
        ReTrace closed = f_mu_closed(e.initial, std::get<AdmissibleInput>(membership));
        Signal looped = Signal::normalize(initial_state(e.initial), std::move(st.state_events));
        if (closed.state != looped)
            throw std::logic_error("event loop disagrees with the closed form at element '" +
                                   e.id + "'");
        result.elements.push_back({e.id, std::move(closed)});
    }
    for (const auto& w : net.wires) {
        if (const auto* name = std::get_if<std::string>(&w.to))
            result.outputs.push_back(
                {*name, Signal::normalize(BitVec(1), std::move(output_events.at(*name)))});
    }
    return result;
}

} // namespace rotasim
