#pragma once

#include <nlohmann/json.hpp>

#include "rotasim/circuit.hpp"
#include "rotasim/verify.hpp"

namespace rotasim::io {

using json = nlohmann::ordered_json;

inline constexpr const char* input_format = "rotasim.input/1";
inline constexpr const char* trace_format = "rotasim.trace/1";
inline constexpr const char* netlist_format = "rotasim.netlist/1";
inline constexpr const char* report_format = "rotasim.report/1";
inline constexpr const char* circuit_trace_format = "rotasim.circuit-trace/1";

// Malformed document; `field` names the offending location.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string field, const std::string& what);
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Times travel as exact strings ("0.5", "7/3") or JSON integers; floating
// point values are rejected outright.
Time time_from_json(const json& v, const std::string& field);
TimeBound bound_from_json(const json& v, const std::string& field);  // "inf" allowed
json time_to_json(const Time& t);
json bound_to_json(const TimeBound& b);

struct InputDocument {
    Bar initial = Bar::horizontal;
    AdmissibleInput input;
};

// Throws SchemaError on shape problems, AdmissibilityError when the pulses
// fall outside the admissible set.
InputDocument input_document_from_json(const json& doc);
json input_document_to_json(Bar initial, const AdmissibleInput& u);

json pulses_to_json(const AdmissibleInput& u);
json signal_to_json(const Signal& s);
json coordinate_signal_to_json(const Signal& s, int coord);

// Full single-element trace: coordinate signals x0..x4 in order, then the
// input document echoed back for lossless re-simulation.
json trace_document_to_json(const ReTrace& trace, bool backward);

// Deterministic verdict list: id, status, case count, witness. Wall-clock
// times stay out of this part so identical configs serialize identically.
json verdicts_to_json(const std::vector<Verdict>& verdicts);
json report_document_to_json(const std::vector<Verdict>& verdicts,
                             const VerifyConfig& config);

Netlist netlist_document_from_json(const json& doc);
json netlist_document_to_json(const Netlist& net);
json circuit_document_to_json(const SimulationResult& r);

// Parses a file as JSON; wraps read and parse problems in SchemaError.
json load_json_file(const std::string& path);

} // namespace rotasim::io
