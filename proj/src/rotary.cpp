#include "rotasim/rotary.hpp"

#include <stdexcept>

namespace rotasim {

BitVec initial_state(Bar b) {
    return b == Bar::vertical ? BitVec::of({1, 0, 0, 0, 0}) : BitVec(5);
}

const char* bar_name(Bar b) {
    return b == Bar::vertical ? "vertical" : "horizontal";
}

std::optional<Bar> parse_bar(const std::string& name) {
    if (name == "horizontal") return Bar::horizontal;
    if (name == "vertical") return Bar::vertical;
    return std::nullopt;
}

static void check_widths(const BitVec& state, const BitVec& letter) {
    if (state.width() != 5 || letter.width() != 4)
        throw std::invalid_argument("transition maps take a width-5 state and a width-4 value");
}

BitVec phi(const BitVec& state, const BitVec& letter) {
    check_widths(state, letter);
    bool m0 = state[0];
    bool l1 = letter[0], l2 = letter[1], l3 = letter[2], l4 = letter[3];
    return BitVec::of({
        (!m0 && (l2 || l4)) || (m0 && !l1 && !l3),
        !m0 && (l1 || l2),
        m0 && (l2 || l3),
        !m0 && (l3 || l4),
        m0 && (l4 || l1),
    });
}

BitVec phi_inv(const BitVec& state, const BitVec& letter) {
    check_widths(state, letter);
    bool n0 = state[0];
    bool d1 = letter[0], d2 = letter[1], d3 = letter[2], d4 = letter[3];
    return BitVec::of({
        (!n0 && (d2 || d4)) || (n0 && !d1 && !d3),
        !n0 && (d4 || d1),
        n0 && (d1 || d2),
        !n0 && (d2 || d3),
        n0 && (d3 || d4),
    });
}

BitVec TransitionModel::forward(const BitVec& state, const BitVec& letter) const {
    if (mutation == PhiMutation::none) return phi(state, letter);
    check_widths(state, letter);
    bool m0 = state[0];
    bool l1 = letter[0], l2 = letter[1], l3 = letter[2], l4 = letter[3];
    bool set = !m0 && (l2 || l4);
    bool hold = m0 && !l1 && !l3;
    bool b0 = set || hold;
    bool b1 = !m0 && (l1 || l2);
    bool b2 = m0 && (l2 || l3);
    bool b3 = !m0 && (l3 || l4);
    bool b4 = m0 && (l4 || l1);
    switch (mutation) {
        case PhiMutation::bar_set_ignores_u4: b0 = (!m0 && l2) || hold; break;
        case PhiMutation::bar_hold_ignores_u3: b0 = set || (m0 && !l1); break;
        case PhiMutation::bar_set_swapped_inputs: b0 = (!m0 && (l1 || l3)) || hold; break;
        case PhiMutation::out1_missing_bar_guard: b1 = l1 || l2; break;
        case PhiMutation::out1_ignores_u2: b1 = !m0 && l1; break;
        case PhiMutation::out2_inverted_bar: b2 = !m0 && (l2 || l3); break;
        case PhiMutation::out3_wrong_inputs: b3 = !m0 && (l2 || l3); break;
        case PhiMutation::out4_wrong_inputs: b4 = m0 && (l4 || l2); break;
        case PhiMutation::out4_stuck_zero: b4 = false; break;
        case PhiMutation::bar_negated: b0 = !b0; break;
        case PhiMutation::none: break;
    }
    return BitVec::of({b0, b1, b2, b3, b4});
}

BitVec phi_iter(const BitVec& initial, const std::vector<Letter>& word,
                const TransitionModel& model) {
    BitVec state = initial;
    for (const Letter& l : word) state = model.forward(state, l.bits());
    return state;
}

BitVec equation_step(const BitVec& x_prev, const BitVec& u_prev, const BitVec& u_now) {
    if (x_prev.width() != 5 || u_prev.width() != 4 || u_now.width() != 4)
        throw std::invalid_argument("equation step takes a width-5 state and two width-4 values");
    bool x0 = x_prev[0], x1 = x_prev[1], x2 = x_prev[2], x3 = x_prev[3], x4 = x_prev[4];
    bool up1 = u_prev[0], up2 = u_prev[1], up3 = u_prev[2], up4 = u_prev[3];
    bool un1 = u_now[0], un2 = u_now[1], un3 = u_now[2], un4 = u_now[3];
    return BitVec::of({
        (!x0 && (un2 || un4)) || (x0 && !un1 && !un3),
        (!x1 && !x0 && ((!up1 && un1) || (!up2 && un2))) ||
            (x1 && (x0 || !up1 || un1) && (!x0 || !up2 || un2)),
        (!x2 && x0 && ((!up2 && un2) || (!up3 && un3))) ||
            (x2 && (!x0 || !up2 || un2) && (x0 || !up3 || un3)),
        (!x3 && !x0 && ((!up3 && un3) || (!up4 && un4))) ||
            (x3 && (x0 || !up3 || un3) && (!x0 || !up4 || un4)),
        (!x4 && x0 && ((!up4 && un4) || (!up1 && un1))) ||
            (x4 && (!x0 || !up4 || un4) && (x0 || !up1 || un1)),
    });
}

ReTrace f_mu_closed(Bar mu, const AdmissibleInput& u, const TransitionModel& model) {
    BitVec current = initial_state(mu);
    std::vector<SignalEvent> events;
    events.reserve(2 * u.pulses().size());
    for (const Pulse& p : u.pulses()) {
        current = model.forward(current, p.letter.bits());
        events.push_back({p.start, current});
        // the gap value extends the letter word by one blank but the word
        // itself continues from the pulse letters alone
        if (p.end) events.push_back({*p.end, model.forward(current, BitVec(4))});
    }
    return {u, mu, Signal::normalize(initial_state(mu), std::move(events))};
}

ReTrace eval_equations(Bar mu, const AdmissibleInput& u) {
    Signal us = u.to_signal();
    BitVec x = initial_state(mu);
    if (equation_step(x, BitVec(4), BitVec(4)) != x)
        throw std::logic_error("rest state is not a fixed point of the equations");
    std::vector<SignalEvent> events;
    events.reserve(us.events().size());
    BitVec u_prev(4);
    for (const SignalEvent& e : us.events()) {
        x = equation_step(x, u_prev, e.value);
        events.push_back({e.at, x});
        // between input switches the input is constant, so the state must be
        // a fixed point there
        if (equation_step(x, e.value, e.value) != x)
            throw std::logic_error("state drifts between input switches");
        u_prev = e.value;
    }
    return {u, mu, Signal::normalize(initial_state(mu), std::move(events))};
}

std::vector<ReTrace> f(const AdmissibleInput& u, const TransitionModel& model) {
    return {f_mu_closed(Bar::horizontal, u, model), f_mu_closed(Bar::vertical, u, model)};
}

ReTrace f_inv_mu(Bar nu, const AdmissibleInput& u) {
    BitVec current = initial_state(nu);
    std::vector<SignalEvent> events;
    events.reserve(2 * u.pulses().size());
    for (const Pulse& p : u.pulses()) {
        current = phi_inv(current, p.letter.bits());
        events.push_back({p.start, current});
        if (p.end) events.push_back({*p.end, phi_inv(current, BitVec(4))});
    }
    return {u, nu, Signal::normalize(initial_state(nu), std::move(events))};
}

AdmissibleInput output_part(const ReTrace& x) {
    auto r = validate_membership(x.state.slice(1, 4));
    if (auto* rej = std::get_if<Rejection>(&r)) throw AdmissibilityError(*rej);
    return std::get<AdmissibleInput>(std::move(r));
}

std::vector<CombinedTrace> compose_inv_f(const AdmissibleInput& u, const TransitionModel& model) {
    std::vector<CombinedTrace> result;
    result.reserve(4);
    for (Bar mu : {Bar::horizontal, Bar::vertical}) {
        ReTrace x = f_mu_closed(mu, u, model);
        AdmissibleInput out = output_part(x);
        Signal bar = x.state.slice(0, 1);
        for (Bar nu : {Bar::horizontal, Bar::vertical}) {
            ReTrace v = f_inv_mu(nu, out);
            result.push_back({u, mu, nu, zip(bar, v.state)});
        }
    }
    return result;
}

} // namespace rotasim
