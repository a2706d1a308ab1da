#pragma once

#include <vector>

#include "rotasim/admissible.hpp"

namespace rotasim {

// Bar position of the rotating element. A bullet arriving parallel to the
// bar passes straight through; arriving perpendicular, it rotates the bar a
// quarter turn and leaves on the side the bar swept over.
enum class Bar { horizontal = 0, vertical = 1 };

// The two legal rest states: bar set, all four outputs low.
BitVec initial_state(Bar b);

const char* bar_name(Bar b);
std::optional<Bar> parse_bar(const std::string& name);

// Deliberate single-formula corruptions of the forward map, used to prove
// that the checker suite is not vacuous. Each one changes the map on at
// least one reachable (bar, letter) pair.
enum class PhiMutation {
    none = 0,
    bar_set_ignores_u4 = 1,
    bar_hold_ignores_u3 = 2,
    bar_set_swapped_inputs = 3,
    out1_missing_bar_guard = 4,
    out1_ignores_u2 = 5,
    out2_inverted_bar = 6,
    out3_wrong_inputs = 7,
    out4_wrong_inputs = 8,
    out4_stuck_zero = 9,
    bar_negated = 10,
};

constexpr int phi_mutation_count = 10;

// One-letter forward map on state × input value. Reads only coordinate 0 of
// the state; total on all of 𝔹⁵×𝔹⁴.
BitVec phi(const BitVec& state, const BitVec& letter);

// One-letter backward map: reconstructs where the bullet came from.
BitVec phi_inv(const BitVec& state, const BitVec& letter);

// Forward map with an optional corruption applied.
struct TransitionModel {
    PhiMutation mutation = PhiMutation::none;

    BitVec forward(const BitVec& state, const BitVec& letter) const;
};

// Left fold of the forward map over a letter word; empty word returns the
// initial state.
BitVec phi_iter(const BitVec& initial, const std::vector<Letter>& word,
                const TransitionModel& model = {});

struct ReTrace {
    AdmissibleInput input;
    Bar initial;
    Signal state;  // width 5: bar then the four outputs

    friend bool operator==(const ReTrace&, const ReTrace&) = default;
};

// Single update of the five state equations: new state from the previous
// state, the previous input value and the current input value.
BitVec equation_step(const BitVec& x_prev, const BitVec& u_prev, const BitVec& u_now);

// State trace assembled from forward-map iterates: the initial state before
// the first pulse, the iterate over λ⁰…λᵏ on pulse k, and the iterate over
// λ⁰…λᵏ𝟎 on the gap after it.
ReTrace f_mu_closed(Bar mu, const AdmissibleInput& u, const TransitionModel& model = {});

// Independent evaluator walking the input's switch times through the five
// state equations directly. Kept free of any shortcut shared with
// f_mu_closed so the two can check each other.
ReTrace eval_equations(Bar mu, const AdmissibleInput& u);

// Both branches of the multi-valued system: one trace per initial bar.
std::vector<ReTrace> f(const AdmissibleInput& u, const TransitionModel& model = {});

// Backward system: same closed-form construction built on the backward map.
ReTrace f_inv_mu(Bar nu, const AdmissibleInput& u);

// Projects the four output coordinates and certifies their membership in
// the admissible set. Throws AdmissibilityError if they fall outside it,
// which no well-formed trace ever does.
AdmissibleInput output_part(const ReTrace& x);

// One element of the backward∘forward composition: the forward bar signal
// paired with the full backward state run on the forward outputs.
struct CombinedTrace {
    AdmissibleInput input;
    Bar forward_initial;
    Bar backward_initial;
    Signal trace;  // width 6: forward bar, then the 5 backward coordinates

    friend bool operator==(const CombinedTrace&, const CombinedTrace&) = default;
};

// All four combinations of forward and backward initial bars.
std::vector<CombinedTrace> compose_inv_f(const AdmissibleInput& u,
                                         const TransitionModel& model = {});

} // namespace rotasim
