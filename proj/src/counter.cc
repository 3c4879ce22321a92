// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "omega/counter.hh"

#include <deque>
#include <map>
#include <set>

namespace omega {

State OneCounterBA::add_state(std::string name, bool is_final) {
    const State s = states.add_state(std::move(name));
    final.push_back(is_final);
    return s;
}

void OneCounterBA::add_transition(State from, const Letter& letter, int zero_flag, State to, int delta) {
    transitions.push_back(CounterTransition{from, alphabet.symbol(letter), zero_flag, to, delta});
}

std::vector<std::vector<std::size_t>> OneCounterBA::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(num_states());
    for (std::size_t t = 0; t < transitions.size(); ++t) {
        adj.at(transitions[t].from).push_back(t);
    }
    return adj;
}

std::vector<std::string> validation_errors(const OneCounterBA& m) {
    std::vector<std::string> errors;
    if (m.num_states() == 0 || m.initial >= m.num_states()) {
        errors.emplace_back("initial state is not a state");
    }
    if (m.final.size() != m.num_states()) {
        errors.emplace_back("final marking does not cover the states");
    }
    for (std::size_t k = 0; k < m.transitions.size(); ++k) {
        const auto& t = m.transitions[k];
        const std::string where = "transition " + std::to_string(k) + ": ";
        if (t.from >= m.num_states() || t.to >= m.num_states()) {
            errors.push_back(where + "endpoint is not a state");
            continue;
        }
        if (t.letter >= m.alphabet.size()) {
            errors.push_back(where + "letter is not in the alphabet");
        }
        if (t.zero_flag != 0 && t.zero_flag != 1) {
            errors.push_back(where + "zero flag must be 0 or 1");
        }
        if (t.delta < -1 || t.delta > 1) {
            errors.push_back(where + "counter delta must be -1, 0 or +1");
        }
        if (t.zero_flag == 0 && t.delta == -1) {
            errors.push_back(where + "(" + m.states.name(t.from) + ", " +
                             m.alphabet.letter(t.letter) + ", 0, " + m.states.name(t.to) +
                             ", -1) decrements a zero counter");
        }
    }
    return errors;
}

bool validate(const OneCounterBA& m) { return validation_errors(m).empty(); }

namespace {

void require_valid(const OneCounterBA& m) {
    const auto errors = validation_errors(m);
    if (!errors.empty()) {
        throw InvalidArgument("invalid one-counter automaton: " + errors.front());
    }
}

bool enabled(const CounterTransition& t, std::uint64_t counter) {
    return t.zero_flag == (counter == 0 ? 0 : 1);
}

std::uint64_t apply(const CounterTransition& t, std::uint64_t counter) {
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(counter) + t.delta);
}

}  // namespace

std::vector<Configuration> step(const OneCounterBA& m, const Configuration& c, Symbol letter) {
    std::vector<Configuration> out;
    for (const auto& t : m.transitions) {
        if (t.from == c.state && t.letter == letter && enabled(t, c.counter)) {
            out.push_back(Configuration{t.to, apply(t, c.counter)});
        }
    }
    return out;
}

std::vector<Configuration> step(const OneCounterBA& m, const Configuration& c, const Letter& letter) {
    auto s = m.alphabet.index_of(letter);
    if (!s) {
        return {};
    }
    return step(m, c, *s);
}

Configuration CounterRun::configuration_at(std::size_t n) const {
    if (n < prefix.size()) {
        return prefix[n].from;
    }
    if (cycle.empty()) {
        throw InvalidArgument("run has no cycle");
    }
    const std::size_t k = n - prefix.size();
    Configuration c = cycle[k % cycle.size()].from;
    c.counter += static_cast<std::uint64_t>(cycle_delta) * (k / cycle.size());
    return c;
}

std::size_t CounterRun::transition_at(std::size_t n) const {
    if (n < prefix.size()) {
        return prefix[n].transition;
    }
    if (cycle.empty()) {
        throw InvalidArgument("run has no cycle");
    }
    return cycle[(n - prefix.size()) % cycle.size()].transition;
}

LassoWord CounterRun::word(const OneCounterBA& m) const {
    Word stem, loop;
    for (const auto& s : prefix) stem.push_back(m.alphabet.letter(m.transitions.at(s.transition).letter));
    for (const auto& s : cycle) loop.push_back(m.alphabet.letter(m.transitions.at(s.transition).letter));
    return lasso_normalize(LassoWord(std::move(stem), std::move(loop)));
}

std::uint64_t default_counter_cap(std::size_t control_states) {
    const auto k = static_cast<std::uint64_t>(control_states);
    return k * k + k + 2;
}

namespace {

// Flat case: an accepting cycle of the configuration graph capped at `cap`.
std::optional<CounterRun> flat_run(const OneCounterBA& m, std::uint64_t cap, std::size_t budget) {
    const auto adj = m.adjacency();
    const std::uint64_t width = cap + 1;
    auto succ = [&](search::Key key, auto&& emit) {
        const State q = key / width;
        const std::uint64_t c = key % width;
        for (std::size_t t : adj[q]) {
            const auto& tr = m.transitions[t];
            if (!enabled(tr, c)) continue;
            const std::uint64_t next = apply(tr, c);
            if (next > cap) continue;
            emit(tr.to * width + next, m.is_final(tr.to) ? 1u : 0u, static_cast<search::Label>(t));
        }
    };
    const std::size_t dense = m.num_states() * width;
    auto w = search::find_accepting_cycle(m.initial * width, succ, 1u, budget, dense);
    if (!w) {
        return std::nullopt;
    }
    auto config = [&](search::Key key) { return Configuration{key / width, key % width}; };
    CounterRun run;
    for (std::size_t k = 0; k < w->stem_labels.size(); ++k) {
        run.prefix.push_back(RunStep{config(w->stem_nodes[k]), w->stem_labels[k]});
    }
    for (std::size_t k = 0; k < w->cycle_labels.size(); ++k) {
        run.cycle.push_back(RunStep{config(w->cycle_nodes[k]), w->cycle_labels[k]});
    }
    return run;
}

// Pumping case: a reachable (q, s), s >= 1, and a path (q, s) -> (q, s') with
// s' >= s that enters a final state and keeps the counter >= 1. Only non-zero
// transitions are usable there, so the path repeats forever.
std::optional<CounterRun> pumping_run(const OneCounterBA& m, std::uint64_t cap, std::size_t budget) {
    const auto adj = m.adjacency();
    struct Back {
        Configuration prev;
        std::size_t transition;
    };
    std::map<Configuration, std::optional<Back>> reached;
    std::deque<Configuration> queue;
    const Configuration start{m.initial, 0};
    reached.emplace(start, std::nullopt);
    queue.push_back(start);
    while (!queue.empty()) {
        const Configuration c = queue.front();
        queue.pop_front();
        for (std::size_t t : adj[c.state]) {
            const auto& tr = m.transitions[t];
            if (!enabled(tr, c.counter)) continue;
            const Configuration next{tr.to, apply(tr, c.counter)};
            if (next.counter > cap) continue;
            if (reached.emplace(next, Back{c, t}).second) {
                if (reached.size() > budget) throw BudgetExceeded(budget);
                queue.push_back(next);
            }
        }
    }
    std::vector<std::uint64_t> best(m.num_states(), 0);
    for (const auto& [c, back] : reached) {
        best[c.state] = std::max(best[c.state], c.counter);
    }

    for (State q = 0; q < m.num_states(); ++q) {
        const std::uint64_t s = best[q];
        if (s == 0) continue;
        const std::uint64_t top = s + cap;
        const std::uint64_t width = (top + 1) * 2;
        auto key = [&](State p, std::uint64_t c, bool f) { return p * width + c * 2 + (f ? 1 : 0); };
        std::map<search::Key, std::pair<search::Key, std::size_t>> parent;
        std::deque<search::Key> bfs{key(q, s, false)};
        parent.emplace(bfs.front(), std::make_pair(bfs.front(), m.transitions.size()));
        std::optional<search::Key> hit;
        while (!bfs.empty() && !hit) {
            const search::Key k = bfs.front();
            bfs.pop_front();
            const State p = k / width;
            const std::uint64_t c = (k % width) / 2;
            const bool f = k % 2 == 1;
            for (std::size_t t : adj[p]) {
                const auto& tr = m.transitions[t];
                if (tr.zero_flag != 1) continue;
                const std::uint64_t next = apply(tr, c);
                if (next < 1 || next > top) continue;
                const bool nf = f || m.is_final(tr.to);
                const search::Key nk = key(tr.to, next, nf);
                if (!parent.emplace(nk, std::make_pair(k, t)).second) continue;
                if (parent.size() > budget) throw BudgetExceeded(budget);
                if (tr.to == q && nf && next >= s) {
                    hit = nk;
                    break;
                }
                bfs.push_back(nk);
            }
        }
        if (!hit) continue;

        CounterRun run;
        std::vector<RunStep> cycle;
        for (search::Key k = *hit; k != key(q, s, false);) {
            const auto& [prev, t] = parent.at(k);
            cycle.push_back(RunStep{Configuration{prev / width, (prev % width) / 2}, t});
            k = prev;
        }
        run.cycle.assign(cycle.rbegin(), cycle.rend());
        run.cycle_delta = static_cast<std::int64_t>((*hit % width) / 2) - static_cast<std::int64_t>(s);
        std::vector<RunStep> prefix;
        for (Configuration c{q, s}; reached.at(c).has_value();) {
            const Back& b = *reached.at(c);
            prefix.push_back(RunStep{b.prev, b.transition});
            c = b.prev;
        }
        run.prefix.assign(prefix.rbegin(), prefix.rend());
        return run;
    }
    return std::nullopt;
}

std::optional<CounterRun> accepting_run(const OneCounterBA& m, std::size_t control, const CounterOptions& opts) {
    const std::uint64_t cap = opts.counter_cap.value_or(default_counter_cap(control));
    if (auto run = flat_run(m, cap, opts.node_budget)) {
        return run;
    }
    return pumping_run(m, cap, opts.node_budget);
}

}  // namespace

std::optional<CounterRun> find_accepting_run(const OneCounterBA& m, const CounterOptions& opts) {
    require_valid(m);
    return accepting_run(m, m.num_states(), opts);
}

bool is_empty(const OneCounterBA& m, const CounterOptions& opts) {
    return !find_accepting_run(m, opts).has_value();
}

std::optional<CounterRun> find_accepting_run(const OneCounterBA& m, const LassoWord& w,
                                             const CounterOptions& opts) {
    require_valid(m);
    for (const auto* part : {&w.stem(), &w.loop()}) {
        if (!m.alphabet.contains_all(*part)) {
            throw AlphabetMismatch("lasso " + to_string(w) + " is not over the automaton alphabet");
        }
    }
    // Product of the control with the lasso position automaton.
    const std::size_t n = w.size();
    std::vector<Symbol> letter(n);
    for (std::size_t i = 0; i < n; ++i) letter[i] = m.alphabet.symbol(w.letter_at(i + 1));
    auto next = [&](std::size_t i) { return i + 1 < n ? i + 1 : w.stem().size(); };

    OneCounterBA p(m.alphabet);
    for (State q = 0; q < m.num_states(); ++q) {
        for (std::size_t i = 0; i < n; ++i) {
            p.add_state(m.states.name(q) + "@" + std::to_string(i), m.is_final(q));
        }
    }
    p.initial = m.initial * n;
    std::vector<std::size_t> origin;
    for (std::size_t t = 0; t < m.transitions.size(); ++t) {
        const auto& tr = m.transitions[t];
        for (std::size_t i = 0; i < n; ++i) {
            if (tr.letter != letter[i]) continue;
            p.transitions.push_back(CounterTransition{tr.from * n + i, tr.letter, tr.zero_flag,
                                                      tr.to * n + next(i), tr.delta});
            origin.push_back(t);
        }
    }
    auto run = accepting_run(p, p.num_states(), opts);
    if (!run) {
        return std::nullopt;
    }
    auto project = [&](std::vector<RunStep>& steps) {
        for (auto& s : steps) {
            s.from.state /= n;
            s.transition = origin[s.transition];
        }
    };
    project(run->prefix);
    project(run->cycle);
    return run;
}

bool accepts_lasso(const OneCounterBA& m, const LassoWord& w, const CounterOptions& opts) {
    return find_accepting_run(m, w, opts).has_value();
}

OracleVerdict oracle_bounded_accept(const OneCounterBA& m, const LassoWord& w,
                                    std::uint64_t counter_cap, std::size_t cycle_bound) {
    require_valid(m);
    if (cycle_bound == 0) {
        throw InvalidArgument("cycle bound must be positive");
    }
    const std::size_t stem = w.stem().size();
    const std::size_t positions = stem + cycle_bound * w.loop().size();
    // (state, unrolled position, counter)
    using Node = std::tuple<State, std::size_t, std::uint64_t>;
    bool overflow = false;
    auto successors = [&](const Node& node) {
        const auto& [q, k, c] = node;
        const Letter& a = w.letter_at(k + 1);
        const std::size_t nk = k + 1 < positions ? k + 1 : stem;
        std::vector<Node> out;
        for (const auto& t : m.transitions) {
            if (t.from != q || m.alphabet.letter(t.letter) != a) continue;
            if ((c == 0) != (t.zero_flag == 0)) continue;
            const std::int64_t nc = static_cast<std::int64_t>(c) + t.delta;
            if (nc < 0) continue;
            if (static_cast<std::uint64_t>(nc) > counter_cap) {
                overflow = true;
                continue;
            }
            out.emplace_back(t.to, nk, static_cast<std::uint64_t>(nc));
        }
        return out;
    };

    std::set<Node> reached{{m.initial, 0, 0}};
    std::deque<Node> queue{{m.initial, 0, 0}};
    while (!queue.empty()) {
        const Node node = queue.front();
        queue.pop_front();
        for (const Node& next : successors(node)) {
            if (reached.insert(next).second) queue.push_back(next);
        }
    }
    for (const Node& x : reached) {
        if (!m.final.at(std::get<0>(x))) continue;
        std::set<Node> seen;
        std::deque<Node> q2;
        for (const Node& s : successors(x)) {
            if (seen.insert(s).second) q2.push_back(s);
        }
        while (!q2.empty()) {
            const Node node = q2.front();
            q2.pop_front();
            if (node == x) {
                return OracleVerdict{true, true};
            }
            for (const Node& next : successors(node)) {
                if (seen.insert(next).second) q2.push_back(next);
            }
        }
    }
    return OracleVerdict{false, !overflow};
}

BuchiAutomaton erase_counter(const OneCounterBA& m) {
    BuchiAutomaton a(m.alphabet);
    for (State q = 0; q < m.num_states(); ++q) {
        a.add_state(m.states.name(q), m.is_final(q));
    }
    a.initial = m.initial;
    std::set<std::tuple<State, Symbol, State>> seen;
    for (const auto& t : m.transitions) {
        if (seen.emplace(t.from, t.letter, t.to).second) {
            a.add_transition(t.from, t.letter, t.to);
        }
    }
    return a;
}

}  // namespace omega
