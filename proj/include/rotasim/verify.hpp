#pragma once

#include <cstdint>
#include <optional>

#include "rotasim/rotary.hpp"

namespace rotasim {

struct VerifyConfig {
    int depth = 3;      // maximum letter-word length of the enumerated family
    int samples = 0;    // random cases added to each sampled layer
    std::uint64_t seed = 0;
    PhiMutation mutation = PhiMutation::none;
};

enum class VerdictStatus {
    verified_exhaustive,  // every case of the enumerated family checked
    verified_sampled,     // family plus seeded random cases checked
    witness_found,        // existence claim settled by a concrete witness
    falsified,            // counterexample found; witness carries it
};

std::string status_name(VerdictStatus s);

struct Verdict {
    std::string id;
    VerdictStatus status = VerdictStatus::verified_exhaustive;
    long long cases = 0;
    std::string witness;        // serialized JSON; empty when absent
    double wall_seconds = 0.0;  // informational only, not part of the canonical report
};

// Every letter word of length 1..depth over the four one-hot letters, laid
// on the grid where pulse k occupies [2k, 2k+1), in a bounded and an
// unbounded-tail variant each.
std::vector<AdmissibleInput> canonical_family(int depth);

// Runs all checks and returns one verdict per claim in a fixed order.
// Deterministic for a fixed config. Counterexamples become falsified
// verdicts, never exceptions.
std::vector<Verdict> run_suite(const VerifyConfig& config);

struct ComposeMismatchWitness {
    AdmissibleInput input;
    Bar forward_initial;
    Bar backward_initial;
    Signal combined;  // width 6
};

// Smallest pulse word (shortest, then channel-lexicographic) whose
// backward∘forward composition fails to echo the input. `examined` counts
// candidate traces if given.
std::optional<ComposeMismatchWitness> search_compose_mismatch(
    int max_word_len, const TransitionModel& model = {}, long long* examined = nullptr);

struct RejectedPreimage {
    Bar mu;
    std::optional<AdmissibleInput> candidate;  // reconstructed input, when one is forced
    std::string reason;
};

struct NonSurjectiveWitness {
    Signal bar;  // width 1
    AdmissibleInput outputs;
    std::vector<RejectedPreimage> rejected;
};

// Smallest bar-signal/output pair (by event count, bar switches first) that
// no initial state and input can produce.
std::optional<NonSurjectiveWitness> search_non_surjective(
    int max_events, const TransitionModel& model = {}, long long* examined = nullptr);

} // namespace rotasim
