#include "rotasim/signal.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotasim {

Signal Signal::normalize(BitVec initial, std::vector<SignalEvent> events) {
    for (const auto& e : events)
        if (e.value.width() != initial.width())
            throw std::invalid_argument("event width differs from initial value width");
    std::stable_sort(events.begin(), events.end(),
                     [](const SignalEvent& a, const SignalEvent& b) { return a.at < b.at; });
    Signal s(initial);
    BitVec current = initial;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (i + 1 < events.size() && events[i].at == events[i + 1].at)
            throw std::invalid_argument("two events share time " + events[i].at.str());
        if (events[i].value == current) continue;
        s.events_.push_back(events[i]);
        current = events[i].value;
    }
    return s;
}

Signal Signal::characteristic(const Time& a, const TimeBound& b) {
    if (b && *b <= a)
        throw std::invalid_argument("empty interval [" + a.str() + ", " + b->str() + ")");
    std::vector<SignalEvent> events{{a, BitVec::of({1})}};
    if (b) events.push_back({*b, BitVec::of({0})});
    return normalize(BitVec(1), std::move(events));
}

BitVec Signal::eval(const Time& t) const {
    auto it = std::upper_bound(events_.begin(), events_.end(), t,
                               [](const Time& v, const SignalEvent& e) { return v < e.at; });
    return it == events_.begin() ? initial_ : std::prev(it)->value;
}

BitVec Signal::eval_left(const Time& t) const {
    auto it = std::lower_bound(events_.begin(), events_.end(), t,
                               [](const SignalEvent& e, const Time& v) { return e.at < v; });
    return it == events_.begin() ? initial_ : std::prev(it)->value;
}

Signal Signal::shifted(const Time& d) const {
    Signal s(initial_);
    s.events_.reserve(events_.size());
    for (const auto& e : events_) s.events_.push_back({e.at + d, e.value});
    return s;
}

Signal Signal::slice(int first, int count) const {
    auto project = [&](const BitVec& v) {
        BitVec w(count);
        for (int i = 0; i < count; ++i) w = w.with(i, v[first + i]);
        return w;
    };
    std::vector<SignalEvent> events;
    events.reserve(events_.size());
    for (const auto& e : events_) events.push_back({e.at, project(e.value)});
    return normalize(project(initial_), std::move(events));
}

Signal zip(const Signal& a, const Signal& b) {
    std::vector<SignalEvent> events;
    events.reserve(a.events().size() + b.events().size());
    auto push = [&](const Time& t) {
        if (!events.empty() && events.back().at == t) return;
        events.push_back({t, concat(a.eval(t), b.eval(t))});
    };
    auto ia = a.events().begin(), ea = a.events().end();
    auto ib = b.events().begin(), eb = b.events().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->at <= ib->at))
            push((ia++)->at);
        else
            push((ib++)->at);
    }
    return Signal::normalize(concat(a.initial_value(), b.initial_value()), std::move(events));
}

bool equal_on_past(const Signal& a, const Signal& b, const Time& t) {
    if (a.initial_value() != b.initial_value()) return false;
    auto cut = [&](const Signal& s) {
        return std::partition_point(s.events().begin(), s.events().end(),
                                    [&](const SignalEvent& e) { return e.at < t; });
    };
    auto ca = cut(a), cb = cut(b);
    return std::equal(a.events().begin(), ca, b.events().begin(), cb);
}

} // namespace rotasim
