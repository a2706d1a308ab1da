#include "rotasim/json_io.hpp"

#include <fstream>
#include <limits>

namespace rotasim::io {

SchemaError::SchemaError(std::string field, const std::string& what)
    : std::runtime_error("field '" + field + "': " + what), field_(std::move(field)) {}

namespace {

const json& need(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path + "." + key, "missing");
    return *it;
}

std::string need_string(const json& obj, const char* key, const std::string& path) {
    const json& v = need(obj, key, path);
    if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
    return v.get<std::string>();
}

long long need_int(const json& obj, const char* key, const std::string& path) {
    const json& v = need(obj, key, path);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw SchemaError(path + "." + key, "expected an integer");
    if (v.is_number_unsigned() &&
        v.get<std::uint64_t>() > std::uint64_t(std::numeric_limits<long long>::max()))
        throw SchemaError(path + "." + key, "integer out of range");
    return v.get<long long>();
}

const json& need_array(const json& obj, const char* key, const std::string& path) {
    const json& v = need(obj, key, path);
    if (!v.is_array()) throw SchemaError(path + "." + key, "expected an array");
    return v;
}

void check_format(const json& doc, const char* expected) {
    std::string format = need_string(doc, "format", "$");
    if (format != expected)
        throw SchemaError("$.format",
                          "expected \"" + std::string(expected) + "\", got \"" + format + "\"");
}

Bar bar_from(const json& obj, const char* key, const std::string& path) {
    std::string name = need_string(obj, key, path);
    auto bar = parse_bar(name);
    if (!bar)
        throw SchemaError(path + "." + key,
                          "expected \"horizontal\" or \"vertical\", got \"" + name + "\"");
    return *bar;
}

InputPin pin_from(const json& obj, const char* key, const std::string& path) {
    const json& v = need(obj, key, path);
    std::string sub = path + "." + key;
    InputPin pin;
    pin.element = need_string(v, "element", sub);
    pin.channel = static_cast<int>(need_int(v, "channel", sub));
    return pin;
}

} // namespace

Time time_from_json(const json& v, const std::string& field) {
    if (v.is_string()) {
        try {
            return Time::parse(v.get<std::string>());
        } catch (const std::exception& e) {
            throw SchemaError(field, e.what());
        }
    }
    if (v.is_number_integer() && !v.is_number_unsigned()) return Time(v.get<long long>());
    if (v.is_number_unsigned()) {
        auto raw = v.get<std::uint64_t>();
        if (raw > std::uint64_t(std::numeric_limits<long long>::max()))
            throw SchemaError(field, "integer out of range");
        return Time(static_cast<long long>(raw));
    }
    throw SchemaError(field, "times must be exact strings or integers, not floats");
}

TimeBound bound_from_json(const json& v, const std::string& field) {
    if (v.is_string() && v.get<std::string>() == "inf") return std::nullopt;
    return time_from_json(v, field);
}

json time_to_json(const Time& t) { return t.str(); }

json bound_to_json(const TimeBound& b) { return bound_str(b); }

InputDocument input_document_from_json(const json& doc) {
    check_format(doc, input_format);
    InputDocument result;
    result.initial = bar_from(doc, "initial_state", "$");
    const json& pulses = need_array(doc, "pulses", "$");
    std::vector<Pulse> list;
    list.reserve(pulses.size());
    for (std::size_t i = 0; i < pulses.size(); ++i) {
        std::string path = "$.pulses[" + std::to_string(i) + "]";
        long long channel = need_int(pulses[i], "channel", path);
        if (channel < 1 || channel > 4)
            throw SchemaError(path + ".channel", "expected 1..4, got " + std::to_string(channel));
        Time start = time_from_json(need(pulses[i], "start", path), path + ".start");
        TimeBound end = bound_from_json(need(pulses[i], "end", path), path + ".end");
        list.push_back({Letter::channel(static_cast<int>(channel)), start, end});
    }
    result.input = build_input(std::move(list));
    return result;
}

json pulses_to_json(const AdmissibleInput& u) {
    json arr = json::array();
    for (const Pulse& p : u.pulses()) {
        arr.push_back({{"channel", p.letter.channel_index()},
                       {"start", time_to_json(p.start)},
                       {"end", bound_to_json(p.end)}});
    }
    return arr;
}

json input_document_to_json(Bar initial, const AdmissibleInput& u) {
    return {{"format", input_format},
            {"initial_state", bar_name(initial)},
            {"pulses", pulses_to_json(u)}};
}

json signal_to_json(const Signal& s) {
    json events = json::array();
    for (const SignalEvent& e : s.events())
        events.push_back({{"at", time_to_json(e.at)}, {"value", e.value.str()}});
    return {{"initial", s.initial_value().str()}, {"events", std::move(events)}};
}

json coordinate_signal_to_json(const Signal& s, int coord) {
    Signal one = s.slice(coord, 1);
    json events = json::array();
    for (const SignalEvent& e : one.events())
        events.push_back({{"at", time_to_json(e.at)}, {"value", e.value[0] ? 1 : 0}});
    return {{"initial", one.initial_value()[0] ? 1 : 0}, {"events", std::move(events)}};
}

json trace_document_to_json(const ReTrace& trace, bool backward) {
    json signals = json::object();
    for (int i = 0; i < 5; ++i)
        signals["x" + std::to_string(i)] = coordinate_signal_to_json(trace.state, i);
    return {{"format", trace_format},
            {"direction", backward ? "backward" : "forward"},
            {"initial_state", bar_name(trace.initial)},
            {"signals", std::move(signals)},
            {"input", input_document_to_json(trace.initial, trace.input)}};
}

json verdicts_to_json(const std::vector<Verdict>& verdicts) {
    json arr = json::array();
    for (const Verdict& v : verdicts) {
        json item = {{"id", v.id}, {"status", status_name(v.status)}, {"cases", v.cases}};
        if (!v.witness.empty()) item["witness"] = json::parse(v.witness);
        arr.push_back(std::move(item));
    }
    return arr;
}

json report_document_to_json(const std::vector<Verdict>& verdicts,
                             const VerifyConfig& config) {
    json timing = json::array();
    for (const Verdict& v : verdicts)
        timing.push_back({{"id", v.id}, {"wall_seconds", v.wall_seconds}});
    return {{"format", report_format},
            {"config",
             {{"depth", config.depth},
              {"samples", config.samples},
              {"seed", config.seed},
              {"mutation", static_cast<int>(config.mutation)}}},
            {"verdicts", verdicts_to_json(verdicts)},
            {"timing", std::move(timing)}};
}

Netlist netlist_document_from_json(const json& doc) {
    check_format(doc, netlist_format);
    Netlist net;
    const json& elements = need_array(doc, "elements", "$");
    for (std::size_t i = 0; i < elements.size(); ++i) {
        std::string path = "$.elements[" + std::to_string(i) + "]";
        net.elements.push_back(
            {need_string(elements[i], "id", path), bar_from(elements[i], "initial_state", path)});
    }
    const json& wires = need_array(doc, "wires", "$");
    for (std::size_t i = 0; i < wires.size(); ++i) {
        std::string path = "$.wires[" + std::to_string(i) + "]";
        Wire w;
        InputPin from = pin_from(wires[i], "from", path);
        w.from = {from.element, from.channel};
        const json& to = need(wires[i], "to", path);
        if (to.is_object() && to.contains("output")) {
            if (!to["output"].is_string())
                throw SchemaError(path + ".to.output", "expected a string");
            w.to = to["output"].get<std::string>();
        } else {
            w.to = pin_from(wires[i], "to", path);
        }
        w.delay = time_from_json(need(wires[i], "delay", path), path + ".delay");
        net.wires.push_back(std::move(w));
    }
    const json& inputs = need_array(doc, "inputs", "$");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        std::string path = "$.inputs[" + std::to_string(i) + "]";
        ExternalInput ext;
        ext.name = need_string(inputs[i], "name", path);
        ext.target = pin_from(inputs[i], "to", path);
        const json& pulses = need_array(inputs[i], "pulses", path);
        for (std::size_t k = 0; k < pulses.size(); ++k) {
            std::string ppath = path + ".pulses[" + std::to_string(k) + "]";
            ext.intervals.push_back(
                {time_from_json(need(pulses[k], "start", ppath), ppath + ".start"),
                 bound_from_json(need(pulses[k], "end", ppath), ppath + ".end")});
        }
        net.externals.push_back(std::move(ext));
    }
    return net;
}

json netlist_document_to_json(const Netlist& net) {
    json elements = json::array();
    for (const auto& e : net.elements)
        elements.push_back({{"id", e.id}, {"initial_state", bar_name(e.initial)}});
    json wires = json::array();
    for (const auto& w : net.wires) {
        json to;
        if (const auto* pin = std::get_if<InputPin>(&w.to))
            to = {{"element", pin->element}, {"channel", pin->channel}};
        else
            to = {{"output", std::get<std::string>(w.to)}};
        wires.push_back({{"from", {{"element", w.from.element}, {"channel", w.from.channel}}},
                         {"to", std::move(to)},
                         {"delay", time_to_json(w.delay)}});
    }
    json inputs = json::array();
    for (const auto& ext : net.externals) {
        json pulses = json::array();
        for (const auto& iv : ext.intervals)
            pulses.push_back({{"start", time_to_json(iv.start)}, {"end", bound_to_json(iv.end)}});
        inputs.push_back(
            {{"name", ext.name},
             {"to", {{"element", ext.target.element}, {"channel", ext.target.channel}}},
             {"pulses", std::move(pulses)}});
    }
    return {{"format", netlist_format},
            {"elements", std::move(elements)},
            {"wires", std::move(wires)},
            {"inputs", std::move(inputs)}};
}

json circuit_document_to_json(const SimulationResult& r) {
    json elements = json::object();
    for (const auto& [id, trace] : r.elements) {
        json signals = json::object();
        for (int i = 0; i < 5; ++i)
            signals["x" + std::to_string(i)] = coordinate_signal_to_json(trace.state, i);
        elements[id] = {{"initial_state", bar_name(trace.initial)},
                        {"input", {{"pulses", pulses_to_json(trace.input)}}},
                        {"signals", std::move(signals)}};
    }
    json outputs = json::object();
    for (const auto& [name, sig] : r.outputs) outputs[name] = coordinate_signal_to_json(sig, 0);
    return {{"format", circuit_trace_format},
            {"horizon", time_to_json(r.horizon)},
            {"elements", std::move(elements)},
            {"outputs", std::move(outputs)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("$", "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
}

} // namespace rotasim::io
