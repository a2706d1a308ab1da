#include <doctest.h>

#include <random>
#include <variant>
#include <vector>

#include "rotasim/admissible.hpp"

using namespace rotasim;

namespace {

Pulse pulse(int channel, Time start, TimeBound end) {
    return {Letter::channel(channel), start, end};
}

} // namespace

TEST_CASE("letters are blank or one of four channels") {
    CHECK(Letter::blank().is_blank());
    CHECK(Letter::blank().bits() == BitVec(4));
    CHECK(Letter::channel(1).bits() == BitVec::of({1, 0, 0, 0}));
    CHECK(Letter::channel(4).bits() == BitVec::of({0, 0, 0, 1}));
    CHECK(Letter::channel(3).channel_index() == 3);
    CHECK_THROWS_AS(Letter::channel(0), std::invalid_argument);
    CHECK_THROWS_AS(Letter::channel(5), std::invalid_argument);

    CHECK(Letter::from_bits(BitVec(4)) == Letter::blank());
    CHECK(Letter::from_bits(BitVec::of({0, 1, 0, 0})) == Letter::channel(2));
    CHECK(!Letter::from_bits(BitVec::of({1, 1, 0, 0})).has_value());
}

TEST_CASE("build_input accepts a single pulse") {
    AdmissibleInput u = build_input({pulse(1, Time(0), Time(1))});
    CHECK(u.pulses().size() == 1);
    CHECK(u.pulses()[0].letter == Letter::channel(1));
    CHECK(!u.ends_unbounded());
    Signal s = u.to_signal();
    CHECK(s.width() == 4);
    CHECK(s.initial_value() == BitVec(4));
    CHECK(s.eval(Time(1, 2)) == BitVec::of({1, 0, 0, 0}));
    CHECK(s.eval(Time(1)) == BitVec(4));
}

TEST_CASE("the empty pulse list is the constant-zero member") {
    AdmissibleInput u = build_input({});
    CHECK(u.empty());
    CHECK(u.to_signal() == Signal(BitVec(4)));
    CHECK(u == AdmissibleInput{});
}

TEST_CASE("blank letters vanish during the build") {
    AdmissibleInput u = build_input(
        {{Letter::blank(), Time(-5), Time(10)}, pulse(2, Time(0), Time(1))});
    CHECK(u.pulses().size() == 1);
    CHECK(u.pulses()[0].letter == Letter::channel(2));
}

TEST_CASE("build_input sorts pulses by start time") {
    AdmissibleInput u = build_input(
        {pulse(3, Time(2), Time(3)), pulse(1, Time(0), Time(1))});
    CHECK(u.pulses()[0].letter == Letter::channel(1));
    CHECK(u.pulses()[1].letter == Letter::channel(3));
}

TEST_CASE("touching pulses are rejected with the gap condition") {
    auto r = try_build_input({pulse(1, Time(0), Time(1)), pulse(2, Time(1), Time(2))});
    REQUIRE(std::holds_alternative<Rejection>(r));
    const auto& rej = std::get<Rejection>(r);
    CHECK(rej.condition == InputCondition::missing_gap);
    REQUIRE(rej.witness.has_value());
    CHECK(*rej.witness == Time(1));
}

TEST_CASE("overlapping pulses are rejected with the gap condition") {
    auto r = try_build_input({pulse(1, Time(0), Time(2)), pulse(2, Time(1), Time(3))});
    REQUIRE(std::holds_alternative<Rejection>(r));
    CHECK(std::get<Rejection>(r).condition == InputCondition::missing_gap);
}

TEST_CASE("an empty interval is rejected") {
    auto r = try_build_input({pulse(1, Time(1), Time(1))});
    REQUIRE(std::holds_alternative<Rejection>(r));
    const auto& rej = std::get<Rejection>(r);
    CHECK(rej.condition == InputCondition::empty_interval);
    CHECK(*rej.witness == Time(1));
    CHECK(std::holds_alternative<Rejection>(
        try_build_input({pulse(1, Time(2), Time(1))})));
}

TEST_CASE("an unbounded pulse must come last") {
    auto r = try_build_input({pulse(1, Time(0), TimeBound{}), pulse(2, Time(5), Time(6))});
    REQUIRE(std::holds_alternative<Rejection>(r));
    CHECK(std::get<Rejection>(r).condition == InputCondition::infinite_not_last);

    AdmissibleInput ok = build_input({pulse(1, Time(0), Time(1)), pulse(2, Time(2), TimeBound{})});
    CHECK(ok.ends_unbounded());
    CHECK(ok.to_signal().eval(Time(1000)) == BitVec::of({0, 1, 0, 0}));
}

TEST_CASE("build_input throws where try_build_input reports") {
    CHECK_THROWS_AS(build_input({pulse(1, Time(0), Time(1)), pulse(2, Time(1), Time(2))}),
                    AdmissibilityError);
    try {
        build_input({pulse(1, Time(0), Time(1)), pulse(2, Time(1), Time(2))});
    } catch (const AdmissibilityError& e) {
        CHECK(e.rejection().condition == InputCondition::missing_gap);
        CHECK(std::string(e.what()).find("missing-gap") != std::string::npos);
        CHECK(std::string(e.what()).find("t=1") != std::string::npos);
    }
}

TEST_CASE("condition names are stable identifiers") {
    CHECK(condition_name(InputCondition::initial_nonzero) == "initial-nonzero");
    CHECK(condition_name(InputCondition::overlapping_channels) == "overlapping-channels");
    CHECK(condition_name(InputCondition::rise_with_fall) == "rise-with-fall");
    CHECK(condition_name(InputCondition::missing_gap) == "missing-gap");
    CHECK(condition_name(InputCondition::empty_interval) == "empty-interval");
    CHECK(condition_name(InputCondition::infinite_not_last) == "infinite-not-last");
}

TEST_CASE("membership accepts the signal of every built input") {
    AdmissibleInput u = build_input({pulse(4, Time(-2), Time(-1)),
                                    pulse(1, Time(0), Time(1, 2)),
                                    pulse(3, Time(1), TimeBound{})});
    auto m = validate_membership(u.to_signal());
    REQUIRE(std::holds_alternative<AdmissibleInput>(m));
    CHECK(std::get<AdmissibleInput>(m) == u);
    CHECK(letters_of(std::get<AdmissibleInput>(m)).size() == 3);
}

TEST_CASE("membership accepts the constant-zero signal") {
    auto m = validate_membership(Signal(BitVec(4)));
    REQUIRE(std::holds_alternative<AdmissibleInput>(m));
    CHECK(std::get<AdmissibleInput>(m).empty());
}

TEST_CASE("membership rejects a nonzero initial value") {
    auto m = validate_membership(Signal(BitVec::of({1, 0, 0, 0})));
    REQUIRE(std::holds_alternative<Rejection>(m));
    const auto& rej = std::get<Rejection>(m);
    CHECK(rej.condition == InputCondition::initial_nonzero);
    CHECK(!rej.witness.has_value());  // the violation has no first instant
}

TEST_CASE("membership rejects two channels high at once") {
    Signal s = Signal::normalize(
        BitVec(4), {{Time(0), BitVec::of({1, 0, 0, 0})},
                    {Time(1), BitVec::of({1, 0, 1, 0})},
                    {Time(2), BitVec(4)}});
    auto m = validate_membership(s);
    REQUIRE(std::holds_alternative<Rejection>(m));
    const auto& rej = std::get<Rejection>(m);
    CHECK(rej.condition == InputCondition::overlapping_channels);
    CHECK(*rej.witness == Time(1));
}

TEST_CASE("membership rejects a rise at the instant of a fall") {
    Signal s = Signal::normalize(
        BitVec(4), {{Time(0), BitVec::of({1, 0, 0, 0})},
                    {Time(1), BitVec::of({0, 1, 0, 0})},
                    {Time(2), BitVec(4)}});
    auto m = validate_membership(s);
    REQUIRE(std::holds_alternative<Rejection>(m));
    const auto& rej = std::get<Rejection>(m);
    CHECK(rej.condition == InputCondition::rise_with_fall);
    CHECK(*rej.witness == Time(1));
}

TEST_CASE("membership requires width 4") {
    CHECK_THROWS_AS(validate_membership(Signal(BitVec(5))), std::invalid_argument);
}

TEST_CASE("membership and build agree on random admissible inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick_channel(1, 4);
    std::uniform_int_distribution<long long> jump(1, 12);
    std::uniform_int_distribution<long long> den(1, 8);
    std::uniform_int_distribution<int> tail(0, 7);
    for (int round = 0; round < 300; ++round) {
        std::vector<Pulse> ps;
        Time cursor(-16);
        int n = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < n; ++k) {
            Time start = cursor + Time(jump(rng), den(rng));
            bool unbounded = (k == n - 1) && tail(rng) == 0;
            if (unbounded) {
                ps.push_back({Letter::channel(pick_channel(rng)), start, TimeBound{}});
                break;
            }
            Time end = start + Time(jump(rng), den(rng));
            ps.push_back({Letter::channel(pick_channel(rng)), start, end});
            cursor = end;
        }
        AdmissibleInput u = build_input(ps);
        auto m = validate_membership(u.to_signal());
        REQUIRE(std::holds_alternative<AdmissibleInput>(m));
        CHECK(std::get<AdmissibleInput>(m) == u);
    }
}

TEST_CASE("shift_input translates the whole pulse train") {
    AdmissibleInput u = build_input({pulse(1, Time(0), Time(1)), pulse(2, Time(2), TimeBound{})});
    AdmissibleInput moved = shift_input(u, Time(-1, 2));
    CHECK(moved.pulses()[0].start == Time(-1, 2));
    CHECK(*moved.pulses()[0].end == Time(1, 2));
    CHECK(moved.pulses()[1].start == Time(3, 2));
    CHECK(!moved.pulses()[1].end);
    CHECK(moved.to_signal() == u.to_signal().shifted(Time(-1, 2)));
    CHECK(shift_input(moved, Time(1, 2)) == u);
}
