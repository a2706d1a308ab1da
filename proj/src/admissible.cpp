#include "rotasim/admissible.hpp"

#include <algorithm>

namespace rotasim {

std::optional<Letter> Letter::from_bits(const BitVec& v) {
    if (v.width() != 4) throw std::invalid_argument("letter needs a width-4 vector");
    if (v.count() > 1) return std::nullopt;
    for (int i = 0; i < 4; ++i)
        if (v[i]) return channel(i + 1);
    return blank();
}

BitVec Letter::bits() const {
    BitVec v(4);
    return channel_ == 0 ? v : v.with(channel_ - 1, true);
}

std::string condition_name(InputCondition c) {
    switch (c) {
        case InputCondition::initial_nonzero: return "initial-nonzero";
        case InputCondition::overlapping_channels: return "overlapping-channels";
        case InputCondition::rise_with_fall: return "rise-with-fall";
        case InputCondition::missing_gap: return "missing-gap";
        case InputCondition::empty_interval: return "empty-interval";
        case InputCondition::infinite_not_last: return "infinite-not-last";
    }
    return "unknown";
}

static std::string describe(const Rejection& r) {
    std::string msg = condition_name(r.condition);
    if (r.witness) msg += " at t=" + r.witness->str();
    if (!r.detail.empty()) msg += ": " + r.detail;
    return msg;
}

AdmissibilityError::AdmissibilityError(Rejection r)
    : std::runtime_error(describe(r)), rejection_(std::move(r)) {}

std::variant<AdmissibleInput, Rejection> try_build_input(std::vector<Pulse> pulses) {
    std::erase_if(pulses, [](const Pulse& p) { return p.letter.is_blank(); });
    for (const auto& p : pulses)
        if (p.end && *p.end <= p.start)
            return Rejection{InputCondition::empty_interval, p.start,
                             "pulse on channel " + std::to_string(p.letter.channel_index()) +
                                 " ends at or before its start"};
    std::stable_sort(pulses.begin(), pulses.end(),
                     [](const Pulse& a, const Pulse& b) { return a.start < b.start; });
    for (std::size_t i = 0; i + 1 < pulses.size(); ++i) {
        if (!pulses[i].end)
            return Rejection{InputCondition::infinite_not_last, pulses[i + 1].start,
                             "unbounded pulse is followed by another pulse"};
        if (!(*pulses[i].end < pulses[i + 1].start))
            return Rejection{InputCondition::missing_gap, pulses[i + 1].start,
                             "no all-zero interval between consecutive pulses"};
    }
    AdmissibleInput u;
    u.pulses_ = std::move(pulses);
    return u;
}

AdmissibleInput build_input(std::vector<Pulse> pulses) {
    auto r = try_build_input(std::move(pulses));
    if (auto* rej = std::get_if<Rejection>(&r)) throw AdmissibilityError(*rej);
    return std::get<AdmissibleInput>(std::move(r));
}

Signal AdmissibleInput::to_signal() const {
    std::vector<SignalEvent> events;
    events.reserve(2 * pulses_.size());
    for (const auto& p : pulses_) {
        events.push_back({p.start, p.letter.bits()});
        if (p.end) events.push_back({*p.end, BitVec(4)});
    }
    return Signal::normalize(BitVec(4), std::move(events));
}

std::variant<AdmissibleInput, Rejection> validate_membership(const Signal& s) {
    if (s.width() != 4) throw std::invalid_argument("admissible inputs are width-4 signals");
    if (s.initial_value().any())
        return Rejection{InputCondition::initial_nonzero, std::nullopt,
                         "value before the first switch is " + s.initial_value().str()};
    std::vector<Pulse> pulses;
    BitVec prev(4);
    std::optional<Time> open_start;
    Letter open_letter;
    for (const auto& e : s.events()) {
        if (e.value.count() > 1)
            return Rejection{InputCondition::overlapping_channels, e.at,
                             "channels " + e.value.str() + " high together"};
        bool rises = false, falls = false;
        for (int i = 0; i < 4; ++i) {
            rises = rises || (e.value[i] && !prev[i]);
            falls = falls || (!e.value[i] && prev[i]);
        }
        if (rises && falls)
            return Rejection{InputCondition::rise_with_fall, e.at,
                             "one channel rises exactly when another falls"};
        if (e.value.any()) {
            open_start = e.at;
            open_letter = *Letter::from_bits(e.value);
        } else {
            pulses.push_back({open_letter, *open_start, e.at});
            open_start.reset();
        }
        prev = e.value;
    }
    if (open_start) pulses.push_back({open_letter, *open_start, std::nullopt});
    AdmissibleInput u;
    u.pulses_ = std::move(pulses);
    return u;
}

AdmissibleInput shift_input(const AdmissibleInput& u, const Time& d) {
    std::vector<Pulse> pulses = u.pulses();
    for (auto& p : pulses) {
        p.start = p.start + d;
        if (p.end) p.end = *p.end + d;
    }
    return build_input(std::move(pulses));
}

} // namespace rotasim
