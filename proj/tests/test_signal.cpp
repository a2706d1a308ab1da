#include <doctest.h>

#include <random>
#include <vector>

#include "rotasim/signal.hpp"

using namespace rotasim;

namespace {

BitVec b1(int v) { return BitVec::of({v}); }

} // namespace

TEST_CASE("signals are right-continuous at a switch") {
    Signal s = Signal::normalize(b1(0), {{Time(0), b1(1)}, {Time(1), b1(0)}});
    CHECK(s.eval(Time(-1)) == b1(0));
    CHECK(s.eval(Time(0)) == b1(1));       // value at the switch is the new one
    CHECK(s.eval_left(Time(0)) == b1(0));  // left limit still sees the old one
    CHECK(s.eval(Time(1, 2)) == b1(1));
    CHECK(s.eval(Time(1)) == b1(0));
    CHECK(s.eval_left(Time(1)) == b1(1));
    CHECK(s.eval(Time(100)) == b1(0));
}

TEST_CASE("characteristic builds interval indicators") {
    Signal finite = Signal::characteristic(Time(0), TimeBound{Time(1)});
    CHECK(finite.initial_value() == b1(0));
    CHECK(finite.events().size() == 2);
    CHECK(finite.eval(Time(0)) == b1(1));
    CHECK(finite.eval_left(Time(1)) == b1(1));
    CHECK(finite.eval(Time(1)) == b1(0));

    Signal tail = Signal::characteristic(Time(2), TimeBound{});
    CHECK(tail.events().size() == 1);
    CHECK(tail.eval(Time(1000)) == b1(1));

    CHECK_THROWS_AS(Signal::characteristic(Time(1), TimeBound{Time(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Signal::characteristic(Time(2), TimeBound{Time(1)}),
                    std::invalid_argument);
}

TEST_CASE("normalize sorts and drops events that change nothing") {
    // unsorted input, one redundant event
    Signal s = Signal::normalize(
        b1(0), {{Time(1), b1(1)}, {Time(0), b1(1)}, {Time(2), b1(1)}});
    CHECK(s.events().size() == 1);
    CHECK(s.events()[0].at == Time(0));
    CHECK(s.events()[0].value == b1(1));

    // an event equal to the initial value disappears entirely
    Signal noop = Signal::normalize(b1(0), {{Time(5), b1(0)}});
    CHECK(noop.is_constant());
    CHECK(noop == Signal(b1(0)));
}

TEST_CASE("normalize rejects two events at one instant") {
    CHECK_THROWS_AS(
        Signal::normalize(b1(0), {{Time(1), b1(1)}, {Time(1), b1(0)}}),
        std::invalid_argument);
}

TEST_CASE("canonical form decides function equality") {
    Signal a = Signal::normalize(b1(0), {{Time(0), b1(1)}, {Time(1), b1(0)}});
    Signal b = Signal::normalize(
        b1(0), {{Time(1), b1(0)}, {Time(0), b1(1)}, {Time(1, 2), b1(1)}});
    CHECK(a == b);
}

TEST_CASE("normalize preserves the function it was given") {
    // oracle: sample the raw event list by explicit lookup and compare
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<long long> pick_num(-20, 20);
    std::uniform_int_distribution<long long> pick_den(1, 6);
    for (int round = 0; round < 200; ++round) {
        BitVec init = BitVec::of({coin(rng), coin(rng)});
        std::vector<SignalEvent> raw;
        std::vector<Time> times;
        for (int k = 0; k < 8; ++k) {
            Time t(pick_num(rng), pick_den(rng));
            bool fresh = true;
            for (const Time& seen : times) fresh = fresh && !(seen == t);
            if (!fresh) continue;
            times.push_back(t);
            raw.push_back({t, BitVec::of({coin(rng), coin(rng)})});
        }
        Signal s = Signal::normalize(init, raw);
        auto lookup = [&](const Time& at) {
            const SignalEvent* best = nullptr;
            for (const SignalEvent& e : raw)
                if (!(at < e.at) && (!best || best->at < e.at)) best = &e;
            return best ? best->value : init;
        };
        for (const Time& t : times) {
            CHECK(s.eval(t) == lookup(t));
            CHECK(s.eval(t + Time(1, 97)) == lookup(t + Time(1, 97)));
            CHECK(s.eval(t - Time(1, 97)) == lookup(t - Time(1, 97)));
        }
        CHECK(s.eval(Time(-1000)) == init);
    }
}

TEST_CASE("shift moves every event by the same amount") {
    Signal s = Signal::normalize(b1(0), {{Time(0), b1(1)}, {Time(1), b1(0)}});
    Signal moved = s.shifted(Time(3, 2));
    CHECK(moved.events()[0].at == Time(3, 2));
    CHECK(moved.events()[1].at == Time(5, 2));
    CHECK(moved.eval(Time(3, 2)) == b1(1));
    CHECK(moved.eval(Time(1)) == b1(0));
    // group action: shifting back recovers the original
    CHECK(moved.shifted(Time(-3, 2)) == s);
    CHECK(s.shifted(Time(0)) == s);
    // composition of shifts is the shift of the sum
    CHECK(s.shifted(Time(1, 3)).shifted(Time(1, 6)) == s.shifted(Time(1, 2)));
}

TEST_CASE("slice projects coordinates and renormalizes") {
    Signal s = Signal::normalize(
        BitVec::of({0, 0, 0}),
        {{Time(0), BitVec::of({1, 0, 0})}, {Time(1), BitVec::of({1, 1, 0})},
         {Time(2), BitVec::of({0, 1, 0})}});
    Signal first = s.slice(0, 1);
    CHECK(first.width() == 1);
    CHECK(first.events().size() == 2);  // the switch at t=1 does not touch coordinate 0
    CHECK(first.events()[0].at == Time(0));
    CHECK(first.events()[1].at == Time(2));
    Signal last = s.slice(2, 1);
    CHECK(last.is_constant());
}

TEST_CASE("zip concatenates pointwise over merged switch times") {
    Signal a = Signal::normalize(b1(0), {{Time(0), b1(1)}, {Time(2), b1(0)}});
    Signal b = Signal::normalize(b1(1), {{Time(1), b1(0)}});
    Signal z = zip(a, b);
    CHECK(z.width() == 2);
    CHECK(z.initial_value() == BitVec::of({0, 1}));
    CHECK(z.eval(Time(0)) == BitVec::of({1, 1}));
    CHECK(z.eval(Time(1)) == BitVec::of({1, 0}));
    CHECK(z.eval(Time(2)) == BitVec::of({0, 0}));
    CHECK(z.events().size() == 3);
    // zip then slice recovers the parts
    CHECK(z.slice(0, 1) == a);
    CHECK(z.slice(1, 1) == b);
}

TEST_CASE("equal_on_past ignores everything from the cut onward") {
    Signal a = Signal::normalize(b1(0), {{Time(0), b1(1)}, {Time(1), b1(0)}});
    Signal b = Signal::normalize(b1(0), {{Time(0), b1(1)}, {Time(1), b1(0)}, {Time(5), b1(1)}});
    CHECK(equal_on_past(a, b, Time(5)));
    CHECK(equal_on_past(a, b, Time(2)));
    CHECK(!equal_on_past(a, b, Time(6)));

    Signal c(b1(0));
    Signal d = Signal::normalize(b1(0), {{Time(0), b1(1)}});
    CHECK(equal_on_past(c, d, Time(0)));   // they agree strictly before 0
    CHECK(!equal_on_past(c, d, Time(1, 2)));

    Signal e(b1(0));
    Signal f(b1(1));
    CHECK(!equal_on_past(e, f, Time(-100)));  // different initial values never agree
}
