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

#include "omega/buchi.hh"

#include <algorithm>
#include <deque>
#include <map>

namespace omega {

State StateSet::add_state(std::string name) {
    if (!index_.emplace(name, names_.size()).second) {
        throw InvalidArgument("duplicate state '" + name + "'");
    }
    names_.push_back(std::move(name));
    return names_.size() - 1;
}

std::optional<State> StateSet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

State StateSet::state(const std::string& name) const {
    if (auto s = find(name)) {
        return *s;
    }
    throw InvalidArgument("unknown state '" + name + "'");
}

State BuchiAutomaton::add_state(std::string name, bool is_final) {
    const State s = states.add_state(std::move(name));
    final.push_back(is_final);
    return s;
}

void BuchiAutomaton::add_transition(State from, Symbol letter, State to) {
    transitions.push_back(Transition{from, letter, to});
}

void BuchiAutomaton::add_transition(State from, const Letter& letter, State to) {
    add_transition(from, alphabet.symbol(letter), to);
}

std::vector<std::vector<std::size_t>> BuchiAutomaton::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(num_states());
    for (std::size_t t = 0; t < transitions.size(); ++t) {
        adj[transitions[t].from].push_back(t);
    }
    return adj;
}

void BuchiAutomaton::check() const {
    if (num_states() == 0 || initial >= num_states()) {
        throw InvalidArgument("initial state is not a state");
    }
    if (final.size() != num_states()) {
        throw InvalidArgument("final marking does not cover the states");
    }
    for (const auto& t : transitions) {
        if (t.from >= num_states() || t.to >= num_states()) {
            throw InvalidArgument("transition endpoint is not a state");
        }
        if (t.letter >= alphabet.size()) {
            throw InvalidArgument("transition letter is not in the alphabet");
        }
    }
}

std::size_t GeneralizedBuchi::add_transition(State from, Symbol letter, State to) {
    transitions.push_back(Transition{from, letter, to});
    return transitions.size() - 1;
}

std::vector<std::vector<std::size_t>> GeneralizedBuchi::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(num_states());
    for (std::size_t t = 0; t < transitions.size(); ++t) {
        adj[transitions[t].from].push_back(t);
    }
    return adj;
}

std::vector<search::Mask> GeneralizedBuchi::transition_masks() const {
    if (acceptance.size() > 30) {
        throw InvalidArgument("at most 30 acceptance sets are supported");
    }
    std::vector<search::Mask> masks(transitions.size(), 0);
    for (std::size_t k = 0; k < acceptance.size(); ++k) {
        for (std::size_t t : acceptance[k]) {
            masks.at(t) |= search::Mask{1} << k;
        }
    }
    return masks;
}

void GeneralizedBuchi::check() const {
    if (num_states() == 0 || initial >= num_states()) {
        throw InvalidArgument("initial state is not a state");
    }
    for (const auto& t : transitions) {
        if (t.from >= num_states() || t.to >= num_states() || t.letter >= alphabet.size()) {
            throw InvalidArgument("malformed transition");
        }
    }
    for (const auto& set : acceptance) {
        for (std::size_t t : set) {
            if (t >= transitions.size()) {
                throw InvalidArgument("acceptance set refers to a missing transition");
            }
        }
    }
}

BuchiAutomaton lasso_automaton(const LassoWord& w) {
    std::vector<Letter> letters;
    for (const auto* part : {&w.stem(), &w.loop()}) {
        for (const auto& l : *part) {
            if (std::find(letters.begin(), letters.end(), l) == letters.end()) {
                letters.push_back(l);
            }
        }
    }
    return lasso_automaton(w, Alphabet(std::move(letters)));
}

BuchiAutomaton lasso_automaton(const LassoWord& w, const Alphabet& alphabet) {
    BuchiAutomaton a(alphabet);
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        a.add_state("p" + std::to_string(i), true);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const State next = i + 1 < n ? i + 1 : w.stem().size();
        a.add_transition(i, alphabet.symbol(w.letter_at(i + 1)), next);
    }
    return a;
}

GeneralizedBuchi product(const BuchiAutomaton& a, const BuchiAutomaton& b) {
    if (!a.alphabet.same_letters(b.alphabet)) {
        throw AlphabetMismatch("product: automata have different alphabets");
    }
    a.check();
    b.check();
    std::vector<Symbol> b_to_a(b.alphabet.size());
    for (Symbol s = 0; s < b.alphabet.size(); ++s) {
        b_to_a[s] = a.alphabet.symbol(b.alphabet.letter(s));
    }
    const auto adj_a = a.adjacency();
    const auto adj_b = b.adjacency();

    GeneralizedBuchi g(a.alphabet);
    g.acceptance.assign(2, {});
    std::map<std::pair<State, State>, State> index;
    std::deque<std::pair<State, State>> queue;
    auto intern = [&](State p, State q) {
        auto [it, inserted] = index.emplace(std::make_pair(p, q), g.num_states());
        if (inserted) {
            g.add_state("(" + a.states.name(p) + "," + b.states.name(q) + ")");
            queue.emplace_back(p, q);
        }
        return it->second;
    };
    g.initial = intern(a.initial, b.initial);
    while (!queue.empty()) {
        const auto [p, q] = queue.front();
        queue.pop_front();
        const State src = index.at({p, q});
        for (std::size_t ta : adj_a[p]) {
            for (std::size_t tb : adj_b[q]) {
                const Transition& x = a.transitions[ta];
                const Transition& y = b.transitions[tb];
                if (x.letter != b_to_a[y.letter]) {
                    continue;
                }
                const State dst = intern(x.to, y.to);
                const std::size_t t = g.add_transition(src, x.letter, dst);
                if (a.is_final(x.to)) g.acceptance[0].push_back(t);
                if (b.is_final(y.to)) g.acceptance[1].push_back(t);
            }
        }
    }
    return g;
}

BuchiAutomaton degeneralize(const GeneralizedBuchi& g) {
    g.check();
    const std::size_t m = g.num_sets();
    const auto masks = g.transition_masks();
    const auto adj = g.adjacency();

    BuchiAutomaton out(g.alphabet);
    std::map<std::pair<State, std::size_t>, State> index;
    std::deque<std::pair<State, std::size_t>> queue;
    auto intern = [&](State q, std::size_t level) {
        auto [it, inserted] = index.emplace(std::make_pair(q, level), out.num_states());
        if (inserted) {
            out.add_state(g.states.name(q) + "#" + std::to_string(level), level == m);
            queue.emplace_back(q, level);
        }
        return it->second;
    };
    out.initial = intern(g.initial, 0);
    while (!queue.empty()) {
        const auto [q, level] = queue.front();
        queue.pop_front();
        const State src = index.at({q, level});
        for (std::size_t t : adj[q]) {
            std::size_t next = level == m ? 0 : level;
            while (next < m && (masks[t] >> next & 1u)) {
                ++next;
            }
            out.add_transition(src, g.transitions[t].letter, intern(g.transitions[t].to, next));
        }
    }
    return out;
}

namespace {

template <class Automaton>
LassoWord witness_word(const Automaton& a, const search::Witness& w) {
    Word stem, loop;
    for (auto label : w.stem_labels) stem.push_back(a.alphabet.letter(a.transitions[label].letter));
    for (auto label : w.cycle_labels) loop.push_back(a.alphabet.letter(a.transitions[label].letter));
    return lasso_normalize(LassoWord(std::move(stem), std::move(loop)));
}

}  // namespace

std::optional<LassoWord> find_accepted_lasso(const BuchiAutomaton& a, std::size_t budget) {
    a.check();
    const auto adj = a.adjacency();
    auto succ = [&](search::Key q, auto&& emit) {
        for (std::size_t t : adj[q]) {
            const State to = a.transitions[t].to;
            emit(to, a.is_final(to) ? 1u : 0u, static_cast<search::Label>(t));
        }
    };
    auto w = search::find_accepting_cycle(a.initial, succ, 1u, budget, a.num_states());
    if (!w) {
        return std::nullopt;
    }
    return witness_word(a, *w);
}

std::optional<LassoWord> find_accepted_lasso(const GeneralizedBuchi& g, std::size_t budget) {
    g.check();
    const auto adj = g.adjacency();
    const auto masks = g.transition_masks();
    const search::Mask required = g.num_sets() == 0 ? 0 : (search::Mask{1} << g.num_sets()) - 1;
    auto succ = [&](search::Key q, auto&& emit) {
        for (std::size_t t : adj[q]) {
            emit(g.transitions[t].to, masks[t], static_cast<search::Label>(t));
        }
    };
    auto w = search::find_accepting_cycle(g.initial, succ, required, budget, g.num_states());
    if (!w) {
        return std::nullopt;
    }
    return witness_word(g, *w);
}

bool is_empty(const BuchiAutomaton& a, std::size_t budget) {
    return !find_accepted_lasso(a, budget).has_value();
}

bool is_empty(const GeneralizedBuchi& g, std::size_t budget) {
    return !find_accepted_lasso(g, budget).has_value();
}

bool accepts_lasso(const BuchiAutomaton& a, const LassoWord& w) {
    for (const auto* part : {&w.stem(), &w.loop()}) {
        if (!a.alphabet.contains_all(*part)) {
            throw AlphabetMismatch("lasso " + to_string(w) + " is not over the automaton alphabet");
        }
    }
    return !is_empty(degeneralize(product(a, lasso_automaton(w, a.alphabet))));
}

BuchiAutomaton trim(const BuchiAutomaton& a) {
    a.check();
    const auto adj = a.adjacency();
    std::vector<State> remap(a.num_states(), a.num_states());
    std::vector<State> order;
    std::deque<State> queue{a.initial};
    remap[a.initial] = 0;
    order.push_back(a.initial);
    while (!queue.empty()) {
        const State q = queue.front();
        queue.pop_front();
        for (std::size_t t : adj[q]) {
            const State to = a.transitions[t].to;
            if (remap[to] == a.num_states()) {
                remap[to] = order.size();
                order.push_back(to);
                queue.push_back(to);
            }
        }
    }
    BuchiAutomaton out(a.alphabet);
    for (State q : order) {
        out.add_state(a.states.name(q), a.is_final(q));
    }
    out.initial = 0;
    for (const auto& t : a.transitions) {
        if (remap[t.from] != a.num_states()) {
            out.add_transition(remap[t.from], t.letter, remap[t.to]);
        }
    }
    return out;
}

}  // namespace omega
