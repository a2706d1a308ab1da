#include "rotasim/verify.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

#include "rotasim/json_io.hpp"

namespace rotasim {

std::string status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::verified_exhaustive: return "verified-exhaustive";
        case VerdictStatus::verified_sampled: return "verified-sampled";
        case VerdictStatus::witness_found: return "witness-found";
        case VerdictStatus::falsified: return "FALSIFIED";
    }
    return "unknown";
}

std::vector<AdmissibleInput> canonical_family(int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    std::vector<AdmissibleInput> family;
    for (int len = 1; len <= depth; ++len) {
        std::vector<int> word(len, 1);
        while (true) {
            for (bool unbounded : {false, true}) {
                std::vector<Pulse> pulses;
                pulses.reserve(len);
                for (int k = 0; k < len; ++k) {
                    TimeBound end;
                    if (!(unbounded && k == len - 1)) end = Time(2 * k + 1);
                    pulses.push_back({Letter::channel(word[k]), Time(2 * k), end});
                }
                family.push_back(build_input(std::move(pulses)));
            }
            int i = len - 1;
            while (i >= 0 && word[i] == 4) word[i--] = 1;
            if (i < 0) break;
            ++word[i];
        }
    }
    return family;
}

namespace {

using io::json;

Time random_rational(std::mt19937_64& rng, long long num_lo, long long num_hi, int den_hi) {
    std::uniform_int_distribution<long long> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    long long n = num(rng);
    return Time(n, den(rng));
}

AdmissibleInput random_input(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, std::max(1, max_len));
    std::uniform_int_distribution<int> channel(1, 4);
    std::uniform_int_distribution<int> eighth(0, 7);
    int len = len_dist(rng);
    Time t = random_rational(rng, -32, 32, 8);
    std::vector<Pulse> pulses;
    pulses.reserve(len);
    for (int k = 0; k < len; ++k) {
        Time duration = random_rational(rng, 1, 16, 8);
        bool unbounded = k == len - 1 && eighth(rng) == 0;
        TimeBound end;
        if (!unbounded) end = t + duration;
        pulses.push_back({Letter::channel(channel(rng)), t, end});
        t = t + duration + random_rational(rng, 1, 16, 8);
    }
    return build_input(std::move(pulses));
}

json input_json(const AdmissibleInput& u) { return {{"pulses", io::pulses_to_json(u)}}; }

struct SuiteRunner {
    const VerifyConfig& config;
    TransitionModel model;
    std::vector<AdmissibleInput> family;
    std::vector<AdmissibleInput> pool;        // random inputs, size = samples
    std::vector<Time> shift_pool_closure;     // size = samples
    std::vector<Time> shift_pool_invariance;  // size = samples
    std::vector<Time> fixed_shifts;
    std::vector<Verdict> verdicts;

    // state traces of the family under the active model, shared by the
    // injectivity and disjointness layers
    std::vector<Signal> fam_h, fam_v;

    explicit SuiteRunner(const VerifyConfig& cfg)
        : config(cfg),
          model{cfg.mutation},
          family(canonical_family(cfg.depth)),
          fixed_shifts{Time(0), Time(1), Time(-2), Time(1, 2), Time(-3, 4), Time(7, 3)} {
        std::mt19937_64 rng(cfg.seed);
        pool.reserve(cfg.samples);
        for (int i = 0; i < cfg.samples; ++i) pool.push_back(random_input(rng, cfg.depth));
        for (int i = 0; i < cfg.samples; ++i) shift_pool_closure.push_back(random_rational(rng, -24, 24, 8));
        for (int i = 0; i < cfg.samples; ++i) shift_pool_invariance.push_back(random_rational(rng, -24, 24, 8));
    }

    void falsify(Verdict& v, json witness) {
        v.status = VerdictStatus::falsified;
        v.witness = witness.dump();
    }

    template <typename Body>
    void layer(const char* id, bool has_random_part, Body&& body) {
        Verdict v;
        v.id = id;
        auto t0 = std::chrono::steady_clock::now();
        body(v);
        v.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (v.status == VerdictStatus::verified_exhaustive && has_random_part &&
            config.samples > 0)
            v.status = VerdictStatus::verified_sampled;
        verdicts.push_back(std::move(v));
    }

    // runs a check over the family and then the random pool, stopping at the
    // first counterexample
    template <typename Check>
    void over_inputs(Verdict& v, Check&& check) {
        for (const auto* inputs : {&family, &pool})
            for (const AdmissibleInput& u : *inputs)
                if (!check(v, u)) return;
    }

    void run_input_initial_zero() {
        layer("input-initial-zero", true, [&](Verdict& v) {
            over_inputs(v, [&](Verdict& vv, const AdmissibleInput& u) {
                ++vv.cases;
                Signal s = u.to_signal();
                if (s.initial_value().any()) {
                    falsify(vv, {{"input", input_json(u)},
                                 {"initial", s.initial_value().str()}});
                    return false;
                }
                auto m = validate_membership(s);
                if (const auto* rej = std::get_if<Rejection>(&m)) {
                    falsify(vv, {{"input", input_json(u)},
                                 {"rejected", condition_name(rej->condition)}});
                    return false;
                }
                if (std::get<AdmissibleInput>(m) != u) {
                    falsify(vv, {{"input", input_json(u)},
                                 {"note", "membership validation altered the pulse list"}});
                    return false;
                }
                return true;
            });
        });
    }

    void run_input_one_hot_separated() {
        layer("input-one-hot-separated", true, [&](Verdict& v) {
            over_inputs(v, [&](Verdict& vv, const AdmissibleInput& u) {
                ++vv.cases;
                Signal s = u.to_signal();
                BitVec prev(4);
                for (const SignalEvent& e : s.events()) {
                    if (e.value.count() > 1) {
                        falsify(vv, {{"input", input_json(u)},
                                     {"at", e.at.str()},
                                     {"value", e.value.str()}});
                        return false;
                    }
                    bool rises = false, falls = false;
                    for (int i = 0; i < 4; ++i) {
                        rises = rises || (e.value[i] && !prev[i]);
                        falls = falls || (!e.value[i] && prev[i]);
                    }
                    if (rises && falls) {
                        falsify(vv, {{"input", input_json(u)},
                                     {"at", e.at.str()},
                                     {"note", "simultaneous rise and fall"}});
                        return false;
                    }
                    prev = e.value;
                }
                const auto& ps = u.pulses();
                for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
                    if (!ps[i].end || !(*ps[i].end < ps[i + 1].start)) {
                        falsify(vv, {{"input", input_json(u)},
                                     {"at", ps[i + 1].start.str()},
                                     {"note", "pulses without a separating gap"}});
                        return false;
                    }
                }
                return true;
            });
        });
    }

    bool shift_case_ok(Verdict& v, const AdmissibleInput& u, const Time& d) {
        ++v.cases;
        AdmissibleInput su = shift_input(u, d);
        auto m = validate_membership(su.to_signal());
        if (std::holds_alternative<Rejection>(m)) {
            falsify(v, {{"input", input_json(u)}, {"shift", d.str()},
                        {"note", "shifted input left the admissible set"}});
            return false;
        }
        if (su.to_signal() != u.to_signal().shifted(d)) {
            falsify(v, {{"input", input_json(u)}, {"shift", d.str()},
                        {"note", "pulse shift and signal shift disagree"}});
            return false;
        }
        return true;
    }

    void run_input_shift_closure() {
        layer("input-shift-closure", true, [&](Verdict& v) {
            for (const AdmissibleInput& u : family)
                for (const Time& d : fixed_shifts)
                    if (!shift_case_ok(v, u, d)) return;
            for (int i = 0; i < config.samples; ++i)
                if (!shift_case_ok(v, pool[i], shift_pool_closure[i])) return;
        });
    }

    void run_closed_form_matches_equations() {
        layer("closed-form-matches-equations", true, [&](Verdict& v) {
            over_inputs(v, [&](Verdict& vv, const AdmissibleInput& u) {
                for (Bar bar : {Bar::horizontal, Bar::vertical}) {
                    ++vv.cases;
                    Signal closed = f_mu_closed(bar, u, model).state;
                    Signal stepped = eval_equations(bar, u).state;
                    if (closed != stepped) {
                        falsify(vv, {{"initial_state", bar_name(bar)},
                                     {"input", input_json(u)},
                                     {"closed_form", io::signal_to_json(closed)},
                                     {"equations", io::signal_to_json(stepped)}});
                        return false;
                    }
                }
                return true;
            });
        });
    }

    void run_outputs_admissible() {
        layer("outputs-admissible", true, [&](Verdict& v) {
            over_inputs(v, [&](Verdict& vv, const AdmissibleInput& u) {
                for (Bar bar : {Bar::horizontal, Bar::vertical}) {
                    ++vv.cases;
                    Signal outputs = f_mu_closed(bar, u, model).state.slice(1, 4);
                    auto m = validate_membership(outputs);
                    if (const auto* rej = std::get_if<Rejection>(&m)) {
                        falsify(vv, {{"initial_state", bar_name(bar)},
                                     {"input", input_json(u)},
                                     {"outputs", io::signal_to_json(outputs)},
                                     {"rejected", condition_name(rej->condition)},
                                     {"at", rej->witness ? json(rej->witness->str()) : json()}});
                        return false;
                    }
                }
                return true;
            });
        });
    }

    void run_state_injectivity() {
        layer("state-injectivity", true, [&](Verdict& v) {
            over_inputs(v, [&](Verdict& vv, const AdmissibleInput& u) {
                ++vv.cases;
                if (f_mu_closed(Bar::horizontal, u, model).state ==
                    f_mu_closed(Bar::vertical, u, model).state) {
                    falsify(vv, {{"input", input_json(u)},
                                 {"note", "both initial bars produce one trace"}});
                    return false;
                }
                return true;
            });
        });
    }

    void compute_family_states() {
        fam_h.reserve(family.size());
        fam_v.reserve(family.size());
        for (const AdmissibleInput& u : family) {
            fam_h.push_back(f_mu_closed(Bar::horizontal, u, model).state);
            fam_v.push_back(f_mu_closed(Bar::vertical, u, model).state);
        }
    }

    void run_input_injectivity() {
        layer("input-injectivity", false, [&](Verdict& v) {
            for (std::size_t i = 0; i < family.size(); ++i) {
                for (std::size_t j = i + 1; j < family.size(); ++j) {
                    v.cases += 2;
                    if (fam_h[i] == fam_h[j] || fam_v[i] == fam_v[j]) {
                        falsify(v, {{"first", input_json(family[i])},
                                    {"second", input_json(family[j])},
                                    {"initial_state",
                                     bar_name(fam_h[i] == fam_h[j] ? Bar::horizontal
                                                                   : Bar::vertical)}});
                        return;
                    }
                }
            }
        });
    }

    void run_image_disjointness() {
        layer("image-disjointness", false, [&](Verdict& v) {
            for (std::size_t i = 0; i < family.size(); ++i) {
                for (std::size_t j = i + 1; j < family.size(); ++j) {
                    v.cases += 4;
                    bool clash = fam_h[i] == fam_h[j] || fam_h[i] == fam_v[j] ||
                                 fam_v[i] == fam_h[j] || fam_v[i] == fam_v[j];
                    if (clash) {
                        falsify(v, {{"first", input_json(family[i])},
                                    {"second", input_json(family[j])}});
                        return;
                    }
                }
            }
        });
    }

    void run_idle_identities() {
        layer("idle-identities", false, [&](Verdict& v) {
            std::vector<Letter> alphabet{Letter::blank(), Letter::channel(1), Letter::channel(2),
                                         Letter::channel(3), Letter::channel(4)};
            for (Bar bar : {Bar::horizontal, Bar::vertical}) {
                BitVec init = initial_state(bar);
                ++v.cases;
                if (model.forward(init, Letter::blank().bits()) != init) {
                    falsify(v, {{"initial_state", bar_name(bar)},
                                {"note", "blank letter moved the rest state"}});
                    return;
                }
                for (const Letter& a : alphabet) {
                    for (const Letter& b : alphabet) {
                        ++v.cases;
                        if (phi_iter(init, {a, Letter::blank(), b}, model) !=
                            phi_iter(init, {a, b}, model)) {
                            falsify(v, {{"initial_state", bar_name(bar)},
                                        {"letters", {a.channel_index(), b.channel_index()}},
                                        {"note", "interleaved blank changed the iterate"}});
                            return;
                        }
                    }
                }
            }
        });
    }

    void run_compose_mismatch() {
        layer("inverse-compose-mismatch", false, [&](Verdict& v) {
            long long examined = 0;
            auto w = search_compose_mismatch(2, model, &examined);
            v.cases = examined;
            if (!w) {
                falsify(v, {{"note", "search exhausted with no mismatch"},
                            {"max_word_length", 2}});
                return;
            }
            v.status = VerdictStatus::witness_found;
            v.witness = json{{"input", input_json(w->input)},
                             {"forward_initial", bar_name(w->forward_initial)},
                             {"backward_initial", bar_name(w->backward_initial)},
                             {"combined", io::signal_to_json(w->combined)}}
                            .dump();
        });
    }

    void run_non_surjectivity() {
        layer("non-surjectivity", false, [&](Verdict& v) {
            long long examined = 0;
            auto w = search_non_surjective(2, model, &examined);
            v.cases = examined;
            if (!w) {
                falsify(v, {{"note", "search exhausted with no witness"}, {"max_events", 2}});
                return;
            }
            v.status = VerdictStatus::witness_found;
            json rejected = json::array();
            for (const RejectedPreimage& r : w->rejected) {
                rejected.push_back(
                    {{"initial_state", bar_name(r.mu)},
                     {"input", r.candidate ? input_json(*r.candidate) : json()},
                     {"reason", r.reason}});
            }
            v.witness = json{{"bar", io::signal_to_json(w->bar)},
                             {"outputs", input_json(w->outputs)},
                             {"rejected_preimages", std::move(rejected)}}
                            .dump();
        });
    }

    bool invariance_case_ok(Verdict& v, const AdmissibleInput& u, const Time& d) {
        for (Bar bar : {Bar::horizontal, Bar::vertical}) {
            ++v.cases;
            Signal moved = f_mu_closed(bar, shift_input(u, d), model).state;
            Signal reference = f_mu_closed(bar, u, model).state.shifted(d);
            if (moved != reference) {
                falsify(v, {{"initial_state", bar_name(bar)},
                            {"input", input_json(u)},
                            {"shift", d.str()},
                            {"shifted_run", io::signal_to_json(moved)},
                            {"run_shifted", io::signal_to_json(reference)}});
                return false;
            }
        }
        return true;
    }

    void run_time_invariance() {
        layer("time-invariance", true, [&](Verdict& v) {
            for (const AdmissibleInput& u : family)
                for (const Time& d : fixed_shifts)
                    if (!invariance_case_ok(v, u, d)) return;
            for (int i = 0; i < config.samples; ++i)
                if (!invariance_case_ok(v, pool[i], shift_pool_invariance[i])) return;
        });
    }

    void run_non_anticipation() {
        layer("non-anticipation", true, [&](Verdict& v) {
            over_inputs(v, [&](Verdict& vv, const AdmissibleInput& u) {
                if (u.empty()) return true;
                const auto& ps = u.pulses();
                // cut points: one before the first pulse, one inside each gap
                std::vector<std::pair<Time, std::size_t>> cuts;
                cuts.push_back({ps.front().start - Time(1), 0});
                for (std::size_t k = 0; k + 1 < ps.size(); ++k)
                    cuts.push_back({Time::midpoint(*ps[k].end, ps[k + 1].start), k + 1});
                for (const auto& [cut, keep] : cuts) {
                    AdmissibleInput prefix = build_input(
                        std::vector<Pulse>(ps.begin(), ps.begin() + keep));
                    for (Bar bar : {Bar::horizontal, Bar::vertical}) {
                        ++vv.cases;
                        Signal full = f_mu_closed(bar, u, model).state;
                        Signal cutoff = f_mu_closed(bar, prefix, model).state;
                        if (!equal_on_past(full, cutoff, cut) ||
                            full.eval(cut) != cutoff.eval(cut)) {
                            falsify(vv, {{"initial_state", bar_name(bar)},
                                         {"input", input_json(u)},
                                         {"truncated", input_json(prefix)},
                                         {"cut", cut.str()}});
                            return false;
                        }
                    }
                }
                return true;
            });
        });
    }
};

} // namespace

std::vector<Verdict> run_suite(const VerifyConfig& config) {
    if (config.depth < 1) throw std::invalid_argument("depth must be at least 1");
    if (config.samples < 0) throw std::invalid_argument("sample count must not be negative");
    SuiteRunner runner(config);
    runner.run_input_initial_zero();
    runner.run_input_one_hot_separated();
    runner.run_input_shift_closure();
    runner.run_closed_form_matches_equations();
    runner.run_outputs_admissible();
    runner.run_state_injectivity();
    runner.compute_family_states();
    runner.run_input_injectivity();
    runner.run_image_disjointness();
    runner.run_idle_identities();
    runner.run_compose_mismatch();
    runner.run_non_surjectivity();
    runner.run_time_invariance();
    runner.run_non_anticipation();
    return std::move(runner.verdicts);
}

std::optional<ComposeMismatchWitness> search_compose_mismatch(int max_word_len,
                                                              const TransitionModel& model,
                                                              long long* examined) {
    if (max_word_len < 1) throw std::invalid_argument("word length bound must be at least 1");
    long long count = 0;
    std::optional<ComposeMismatchWitness> found;
    for (int len = 1; len <= max_word_len && !found; ++len) {
        std::vector<int> word(len, 1);
        while (!found) {
            std::vector<Pulse> pulses;
            pulses.reserve(len);
            for (int k = 0; k < len; ++k)
                pulses.push_back({Letter::channel(word[k]), Time(2 * k), Time(2 * k + 1)});
            AdmissibleInput u = build_input(std::move(pulses));
            Signal echo = u.to_signal();
            bool composable = true;
            std::vector<CombinedTrace> traces;
            try {
                traces = compose_inv_f(u, model);
            } catch (const AdmissibilityError&) {
                composable = false;  // outputs left the admissible set; skip the word
            }
            if (composable) {
                for (const CombinedTrace& ct : traces) {
                    ++count;
                    if (ct.trace.slice(2, 4) != echo) {
                        found = ComposeMismatchWitness{u, ct.forward_initial,
                                                       ct.backward_initial, ct.trace};
                        break;
                    }
                }
            }
            int i = len - 1;
            while (i >= 0 && word[i] == 4) word[i--] = 1;
            if (i < 0) break;
            ++word[i];
        }
    }
    if (examined) *examined = count;
    return found;
}

namespace {

// Checks one backward-reachability candidate: a width-1 bar signal plus an
// admissible output part. Returns the witness if no initial state and input
// reproduce it.
std::optional<NonSurjectiveWitness> check_candidate(const Signal& bar, const AdmissibleInput& w,
                                                    const TransitionModel& model) {
    Signal target = zip(bar, w.to_signal());
    std::vector<RejectedPreimage> rejected;
    for (Bar mu : {Bar::horizontal, Bar::vertical}) {
        if (initial_state(mu)[0] != bar.initial_value()[0]) {
            rejected.push_back({mu, std::nullopt, "initial bar differs from the target"});
            continue;
        }
        // the output pulses pin down the only possible input: intervals must
        // match, and the backward map forces each letter
        bool dead = false;
        std::string reason;
        bool bar_prev = bar.initial_value()[0];
        std::vector<Pulse> pulses;
        for (const Pulse& p : w.pulses()) {
            bool bar_during = bar.eval(p.start)[0];
            BitVec rec = phi_inv(BitVec(5).with(0, bar_during), p.letter.bits());
            auto letter = Letter::from_bits(
                BitVec::of({rec[1], rec[2], rec[3], rec[4]}));
            if (!letter || letter->is_blank()) {
                dead = true;
                reason = "no input letter yields the output pulse at t=" + p.start.str();
                break;
            }
            if (rec[0] != bar_prev) {
                dead = true;
                reason = "required bar before t=" + p.start.str() + " contradicts the trace";
                break;
            }
            pulses.push_back({*letter, p.start, p.end});
            bar_prev = bar_during;
        }
        if (dead) {
            rejected.push_back({mu, std::nullopt, std::move(reason)});
            continue;
        }
        AdmissibleInput candidate = build_input(std::move(pulses));
        if (f_mu_closed(mu, candidate, model).state == target) return std::nullopt;
        rejected.push_back({mu, candidate,
                            "forward run of the reconstructed input differs from the target"});
    }
    return NonSurjectiveWitness{bar, w, std::move(rejected)};
}

} // namespace

std::optional<NonSurjectiveWitness> search_non_surjective(int max_events,
                                                          const TransitionModel& model,
                                                          long long* examined) {
    if (max_events < 1) throw std::invalid_argument("event bound must be at least 1");
    long long count = 0;
    const std::vector<Time> grid{Time(0), Time(1)};
    for (int n = 0; n <= max_events; ++n) {
        for (int nb = n; nb >= 0; --nb) {  // prefer bar switches over pulses
            int pulse_budget = n - nb;
            // bar signals with nb switches on the grid
            std::vector<Signal> bars;
            for (int init : {0, 1}) {
                if (nb == 0) {
                    bars.push_back(Signal(BitVec::of({init})));
                } else if (nb == 1) {
                    for (const Time& t : grid) {
                        bars.push_back(Signal::normalize(
                            BitVec::of({init}), {{t, BitVec::of({!init})}}));
                    }
                } else if (nb == 2) {
                    bars.push_back(Signal::normalize(
                        BitVec::of({init}),
                        {{grid[0], BitVec::of({!init})}, {grid[1], BitVec::of({init})}}));
                }
            }
            // output parts costing the remaining events: none, one pulse
            // running to infinity, or one bounded pulse
            std::vector<AdmissibleInput> outputs;
            if (pulse_budget == 0) {
                outputs.push_back(AdmissibleInput());
            } else if (pulse_budget <= 2) {
                for (const Time& s : grid) {
                    for (int c = 1; c <= 4; ++c) {
                        TimeBound end;
                        if (pulse_budget == 2) end = s + Time(1);
                        outputs.push_back(build_input({{Letter::channel(c), s, end}}));
                    }
                }
            }
            for (const Signal& bar : bars) {
                for (const AdmissibleInput& w : outputs) {
                    ++count;
                    if (auto witness = check_candidate(bar, w, model)) {
                        if (examined) *examined = count;
                        return witness;
                    }
                }
            }
        }
    }
    if (examined) *examined = count;
    return std::nullopt;
}

} // namespace rotasim
