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

#include "omega/rational.hh"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <tuple>
#include <unordered_map>

namespace omega {

namespace {

constexpr search::Mask kFinalBit = 1u;
constexpr search::Mask kTape1Bit = 2u;
constexpr search::Mask kTape2Bit = 4u;
constexpr search::Mask kAllBits = kFinalBit | kTape1Bit | kTape2Bit;

void require_over(const Alphabet& alphabet, const Word& w, const char* what) {
    if (!alphabet.contains_all(w)) {
        throw AlphabetMismatch(std::string(what) + " '" + to_string(w) +
                               "' is not over the tape alphabet");
    }
}

/// A lasso as a successor table over positions 0..n-1.
struct LassoTrack {
    std::vector<Symbol> letter;
    std::vector<std::size_t> next;

    LassoTrack(const LassoWord& w, const Alphabet& alphabet) {
        require_over(alphabet, w.stem(), "lasso stem");
        require_over(alphabet, w.loop(), "lasso loop");
        const std::size_t n = w.size();
        for (std::size_t i = 0; i < n; ++i) {
            letter.push_back(alphabet.symbol(w.letter_at(i + 1)));
            next.push_back(i + 1 < n ? i + 1 : w.stem().size());
        }
    }
    std::size_t size() const { return letter.size(); }

    /// Position after reading `word` from `pos`, or nothing on a mismatch.
    std::optional<std::size_t> advance(std::size_t pos, const std::vector<Symbol>& word) const {
        for (Symbol s : word) {
            if (letter[pos] != s) {
                return std::nullopt;
            }
            pos = next[pos];
        }
        return pos;
    }
};

std::vector<Symbol> symbols(const Alphabet& alphabet, const Word& w) {
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (const auto& l : w) {
        out.push_back(alphabet.symbol(l));
    }
    return out;
}

}  // namespace

State TwoTapeBA::add_state(std::string name, bool is_final) {
    const State s = states.add_state(std::move(name));
    final.push_back(is_final);
    return s;
}

void TwoTapeBA::add_transition(State from, Word input, Word output, State to) {
    require_over(input_alphabet, input, "input word");
    require_over(output_alphabet, output, "output word");
    transitions.push_back(TwoTapeTransition{from, std::move(input), std::move(output), to});
}

std::vector<std::vector<std::size_t>> TwoTapeBA::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(num_states());
    for (std::size_t t = 0; t < transitions.size(); ++t) {
        adj[transitions[t].from].push_back(t);
    }
    return adj;
}

void TwoTapeBA::check() const {
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
        require_over(input_alphabet, t.input, "input word");
        require_over(output_alphabet, t.output, "output word");
    }
}

TwoTapeBA NormalizedTwoTapeBA::to_two_tape() const {
    TwoTapeBA t(input_alphabet, output_alphabet);
    for (State q = 0; q < num_states(); ++q) {
        t.add_state(states.name(q), final[q]);
    }
    t.initial = initial;
    for (const auto& m : transitions) {
        Word in, out;
        if (m.tape == Tape::First) in.push_back(input_alphabet.letter(m.letter));
        if (m.tape == Tape::Second) out.push_back(output_alphabet.letter(m.letter));
        t.add_transition(m.from, std::move(in), std::move(out), m.to);
    }
    return t;
}

LassoPair canonical(const LassoPair& p) {
    return LassoPair{lasso_normalize(p.first), lasso_normalize(p.second)};
}

std::string to_string(const LassoPair& p) {
    return "(" + to_string(p.first) + ", " + to_string(p.second) + ")";
}

NormalizedTwoTapeBA normalize(const TwoTapeBA& t) {
    t.check();
    NormalizedTwoTapeBA n;
    n.input_alphabet = t.input_alphabet;
    n.output_alphabet = t.output_alphabet;
    for (State q = 0; q < t.num_states(); ++q) {
        n.states.add_state(t.states.name(q));
        n.final.push_back(t.is_final(q));
        n.auxiliary.push_back(false);
    }
    n.initial = t.initial;

    auto add_micro = [&](State from, Tape tape, Symbol letter, State to, std::size_t origin) {
        n.transitions.push_back(MicroTransition{from, tape, letter, to, origin});
        return n.transitions.size() - 1;
    };

    for (std::size_t k = 0; k < t.transitions.size(); ++k) {
        const auto& tr = t.transitions[k];
        std::vector<std::pair<Tape, Symbol>> steps;
        for (const auto& l : tr.input) steps.emplace_back(Tape::First, t.input_alphabet.symbol(l));
        for (const auto& l : tr.output) steps.emplace_back(Tape::Second, t.output_alphabet.symbol(l));

        std::vector<std::size_t> chain;
        if (steps.empty()) {
            chain.push_back(add_micro(tr.from, Tape::None, 0, tr.to, k));
        } else {
            State cur = tr.from;
            for (std::size_t s = 0; s < steps.size(); ++s) {
                State next = tr.to;
                if (s + 1 < steps.size()) {
                    next = n.states.add_state(t.states.name(tr.from) + "~" + std::to_string(k) +
                                              "." + std::to_string(s + 1));
                    n.final.push_back(false);
                    n.auxiliary.push_back(true);
                }
                chain.push_back(add_micro(cur, steps[s].first, steps[s].second, next, k));
                cur = next;
            }
        }
        n.chains.push_back(std::move(chain));
    }

    n.out.assign(n.num_states(), {});
    for (std::size_t m = 0; m < n.transitions.size(); ++m) {
        n.out[n.transitions[m].from].push_back(m);
    }
    return n;
}

TwoTapeBA trim(const TwoTapeBA& t) {
    t.check();
    const auto adj = t.adjacency();
    const State absent = t.num_states();
    std::vector<State> remap(t.num_states(), absent);
    std::vector<State> order{t.initial};
    remap[t.initial] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (std::size_t k : adj[order[head]]) {
            const State to = t.transitions[k].to;
            if (remap[to] == absent) {
                remap[to] = order.size();
                order.push_back(to);
            }
        }
    }
    TwoTapeBA out(t.input_alphabet, t.output_alphabet);
    for (State q : order) {
        out.add_state(t.states.name(q), t.is_final(q));
    }
    out.initial = 0;
    for (const auto& tr : t.transitions) {
        if (remap[tr.from] != absent) {
            out.add_transition(remap[tr.from], tr.input, tr.output, remap[tr.to]);
        }
    }
    return out;
}

TwoTapeBA union_of(std::span<const TwoTapeBA> parts) {
    if (parts.empty()) {
        throw InvalidArgument("union of no automata");
    }
    for (const auto& p : parts) {
        p.check();
        if (!p.input_alphabet.same_letters(parts[0].input_alphabet) ||
            !p.output_alphabet.same_letters(parts[0].output_alphabet)) {
            throw AlphabetMismatch("union: automata have different alphabet pairs");
        }
    }
    TwoTapeBA u(parts[0].input_alphabet, parts[0].output_alphabet);
    u.initial = u.add_state("init", false);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& p = parts[k];
        const std::string prefix = std::to_string(k + 1) + ".";
        const State offset = u.num_states();
        for (State q = 0; q < p.num_states(); ++q) {
            u.add_state(prefix + p.states.name(q), p.is_final(q));
        }
        for (const auto& tr : p.transitions) {
            u.add_transition(offset + tr.from, tr.input, tr.output, offset + tr.to);
        }
        for (const auto& tr : p.transitions) {
            if (tr.from == p.initial) {
                u.add_transition(u.initial, tr.input, tr.output, offset + tr.to);
            }
        }
    }
    return trim(u);
}

TwoTapeBA union_of(const TwoTapeBA& a, const TwoTapeBA& b) {
    const TwoTapeBA parts[] = {a, b};
    return union_of(std::span<const TwoTapeBA>(parts));
}

std::optional<PairRun> find_lasso_pair_run(const NormalizedTwoTapeBA& t, const LassoPair& p,
                                           std::size_t budget) {
    const LassoTrack l1(p.first, t.input_alphabet);
    const LassoTrack l2(p.second, t.output_alphabet);
    const std::size_t n1 = l1.size();
    const std::size_t n2 = l2.size();
    auto key = [&](State q, std::size_t i, std::size_t j) -> search::Key {
        return (static_cast<search::Key>(q) * n1 + i) * n2 + j;
    };
    auto succ = [&](search::Key k, auto&& emit) {
        const std::size_t j = k % n2;
        const std::size_t i = (k / n2) % n1;
        const State q = k / n2 / n1;
        for (std::size_t m : t.out[q]) {
            const MicroTransition& mt = t.transitions[m];
            const search::Mask fin = t.final[mt.to] ? kFinalBit : 0u;
            const auto label = static_cast<search::Label>(m);
            switch (mt.tape) {
            case Tape::None:
                emit(key(mt.to, i, j), fin, label);
                break;
            case Tape::First:
                if (l1.letter[i] == mt.letter) emit(key(mt.to, l1.next[i], j), fin | kTape1Bit, label);
                break;
            case Tape::Second:
                if (l2.letter[j] == mt.letter) emit(key(mt.to, i, l2.next[j]), fin | kTape2Bit, label);
                break;
            }
        }
    };
    auto w = search::find_accepting_cycle(key(t.initial, 0, 0), succ, kAllBits, budget,
                                          t.num_states() * n1 * n2);
    if (!w) {
        return std::nullopt;
    }
    PairRun run;
    run.stem.assign(w->stem_labels.begin(), w->stem_labels.end());
    run.cycle.assign(w->cycle_labels.begin(), w->cycle_labels.end());
    return run;
}

bool accepts_lasso_pair(const NormalizedTwoTapeBA& t, const LassoPair& p, std::size_t budget) {
    return find_lasso_pair_run(t, p, budget).has_value();
}

bool accepts_lasso_pair(const TwoTapeBA& t, const LassoPair& p, std::size_t budget) {
    return accepts_lasso_pair(normalize(t), p, budget);
}

bool accepts_lasso_pair_macro(const TwoTapeBA& t, const LassoPair& p, std::size_t budget) {
    t.check();
    const LassoTrack l1(p.first, t.input_alphabet);
    const LassoTrack l2(p.second, t.output_alphabet);
    std::vector<std::vector<Symbol>> ins, outs;
    for (const auto& tr : t.transitions) {
        ins.push_back(symbols(t.input_alphabet, tr.input));
        outs.push_back(symbols(t.output_alphabet, tr.output));
    }
    const auto adj = t.adjacency();
    const std::size_t n1 = l1.size();
    const std::size_t n2 = l2.size();
    auto key = [&](State q, std::size_t i, std::size_t j) -> search::Key {
        return (static_cast<search::Key>(q) * n1 + i) * n2 + j;
    };
    auto succ = [&](search::Key k, auto&& emit) {
        const std::size_t j = k % n2;
        const std::size_t i = (k / n2) % n1;
        const State q = k / n2 / n1;
        for (std::size_t m : adj[q]) {
            const auto i2 = l1.advance(i, ins[m]);
            if (!i2) continue;
            const auto j2 = l2.advance(j, outs[m]);
            if (!j2) continue;
            search::Mask mask = t.is_final(t.transitions[m].to) ? kFinalBit : 0u;
            if (!ins[m].empty()) mask |= kTape1Bit;
            if (!outs[m].empty()) mask |= kTape2Bit;
            emit(key(t.transitions[m].to, *i2, *j2), mask, static_cast<search::Label>(m));
        }
    };
    return search::find_accepting_cycle(key(t.initial, 0, 0), succ, kAllBits, budget,
                                        t.num_states() * n1 * n2)
        .has_value();
}

bool accepts_lasso_pair_degeneralized(const TwoTapeBA& t, const LassoPair& p) {
    const NormalizedTwoTapeBA n = normalize(t);
    const LassoTrack l1(p.first, n.input_alphabet);
    const LassoTrack l2(p.second, n.output_alphabet);

    GeneralizedBuchi g(Alphabet{"t"});
    g.acceptance.assign(3, {});
    using Node = std::tuple<State, std::size_t, std::size_t>;
    std::map<Node, State> index;
    std::deque<Node> queue;
    auto intern = [&](const Node& node) {
        auto [it, inserted] = index.emplace(node, g.num_states());
        if (inserted) {
            const auto& [q, i, j] = node;
            g.add_state(n.states.name(q) + "@" + std::to_string(i) + "," + std::to_string(j));
            queue.push_back(node);
        }
        return it->second;
    };
    g.initial = intern({n.initial, 0, 0});
    while (!queue.empty()) {
        const auto [q, i, j] = queue.front();
        queue.pop_front();
        const State src = index.at({q, i, j});
        for (std::size_t m : n.out[q]) {
            const MicroTransition& mt = n.transitions[m];
            Node dst{mt.to, i, j};
            if (mt.tape == Tape::First) {
                if (l1.letter[i] != mt.letter) continue;
                std::get<1>(dst) = l1.next[i];
            } else if (mt.tape == Tape::Second) {
                if (l2.letter[j] != mt.letter) continue;
                std::get<2>(dst) = l2.next[j];
            }
            const std::size_t e = g.add_transition(src, 0, intern(dst));
            if (n.final[mt.to]) g.acceptance[0].push_back(e);
            if (mt.tape == Tape::First) g.acceptance[1].push_back(e);
            if (mt.tape == Tape::Second) g.acceptance[2].push_back(e);
        }
    }
    return !is_empty(degeneralize(g), std::numeric_limits<std::size_t>::max());
}

std::optional<LassoPair> find_infinite_pair(const TwoTapeBA& t, std::size_t budget) {
    const NormalizedTwoTapeBA n = normalize(t);
    auto succ = [&](search::Key q, auto&& emit) {
        for (std::size_t m : n.out[q]) {
            const MicroTransition& mt = n.transitions[m];
            search::Mask mask = n.final[mt.to] ? kFinalBit : 0u;
            if (mt.tape == Tape::First) mask |= kTape1Bit;
            if (mt.tape == Tape::Second) mask |= kTape2Bit;
            emit(mt.to, mask, static_cast<search::Label>(m));
        }
    };
    auto w = search::find_accepting_cycle(n.initial, succ, kAllBits, budget, n.num_states());
    if (!w) {
        return std::nullopt;
    }
    auto project = [&](const std::vector<search::Label>& labels, Tape tape) {
        Word out;
        for (auto m : labels) {
            const MicroTransition& mt = n.transitions[m];
            if (mt.tape == tape) {
                out.push_back(tape == Tape::First ? n.input_alphabet.letter(mt.letter)
                                                  : n.output_alphabet.letter(mt.letter));
            }
        }
        return out;
    };
    return canonical(LassoPair{
        LassoWord(project(w->stem_labels, Tape::First), project(w->cycle_labels, Tape::First)),
        LassoWord(project(w->stem_labels, Tape::Second), project(w->cycle_labels, Tape::Second))});
}

bool is_empty_infinite(const TwoTapeBA& t, std::size_t budget) {
    return !find_infinite_pair(t, budget).has_value();
}

std::optional<std::size_t> RunDag::edge_by_micro(std::size_t node, std::size_t micro) const {
    for (std::size_t e : out.at(node)) {
        if (edges[e].micro == micro) {
            return e;
        }
    }
    return std::nullopt;
}

void RunDag::for_each_maximal_path(
    const std::function<void(const std::vector<std::size_t>&)>& fn, std::size_t budget) const {
    if (nodes.empty()) {
        return;
    }
    std::vector<std::size_t> path;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    std::size_t spent = 0;
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (out[node].empty()) {
            fn(path);
        }
        if (next >= out[node].size()) {
            stack.pop_back();
            if (!path.empty()) path.pop_back();
            continue;
        }
        const std::size_t e = out[node][next++];
        if (++spent > budget) {
            throw BudgetExceeded(budget);
        }
        path.push_back(e);
        stack.emplace_back(edges[e].to, 0);
    }
}

RunDag run_dag(const NormalizedTwoTapeBA& t, const Word& tape1, const Word& tape2,
               std::size_t budget) {
    const auto s1 = symbols(t.input_alphabet, tape1);
    const auto s2 = symbols(t.output_alphabet, tape2);
    RunDag dag;
    dag.tape1 = tape1;
    dag.tape2 = tape2;

    std::unordered_map<std::uint64_t, std::size_t> index;
    const std::uint64_t w1 = s1.size() + 1;
    const std::uint64_t w2 = s2.size() + 1;
    auto intern = [&](State q, std::size_t p1, std::size_t p2) {
        const std::uint64_t k = (static_cast<std::uint64_t>(q) * w1 + p1) * w2 + p2;
        auto [it, inserted] = index.emplace(k, dag.nodes.size());
        if (inserted) {
            if (dag.nodes.size() >= budget) {
                throw BudgetExceeded(budget);
            }
            dag.nodes.push_back(DagNode{q, p1, p2, 0, 0});
            dag.out.emplace_back();
        }
        return it->second;
    };
    intern(t.initial, 0, 0);
    for (std::size_t head = 0; head < dag.nodes.size(); ++head) {
        const DagNode node = dag.nodes[head];
        for (std::size_t m : t.out[node.state]) {
            const MicroTransition& mt = t.transitions[m];
            std::size_t p1 = node.pos1, p2 = node.pos2;
            if (mt.tape == Tape::First) {
                if (p1 >= s1.size() || s1[p1] != mt.letter) continue;
                ++p1;
            } else if (mt.tape == Tape::Second) {
                if (p2 >= s2.size() || s2[p2] != mt.letter) continue;
                ++p2;
            }
            const std::size_t to = intern(mt.to, p1, p2);
            dag.edges.push_back(DagEdge{head, to, m});
            dag.out[head].push_back(dag.edges.size() - 1);
        }
    }

    std::vector<std::size_t> indegree(dag.nodes.size(), 0);
    for (const auto& e : dag.edges) ++indegree[e.to];
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < dag.nodes.size(); ++v) {
        if (indegree[v] == 0) order.push_back(v);
    }
    std::vector<bool> seen(dag.nodes.size(), false);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::size_t v = order[head];
        for (std::size_t e : dag.out[v]) {
            const std::size_t to = dag.edges[e].to;
            const std::size_t gain = t.final[dag.nodes[to].state] ? 1 : 0;
            auto& dst = dag.nodes[to];
            const auto& src = dag.nodes[v];
            if (!seen[to]) {
                dst.max_final_visits = src.max_final_visits + gain;
                dst.min_final_visits = src.min_final_visits + gain;
                seen[to] = true;
            } else {
                dst.max_final_visits = std::max(dst.max_final_visits, src.max_final_visits + gain);
                dst.min_final_visits = std::min(dst.min_final_visits, src.min_final_visits + gain);
            }
            if (--indegree[to] == 0) order.push_back(to);
        }
    }
    if (order.size() != dag.nodes.size()) {
        throw InvalidArgument("run graph contains a silent cycle");
    }
    return dag;
}

RunDag prefix_run_dag(const NormalizedTwoTapeBA& t, const BlockWord& g1, const BlockWord& g2,
                      std::size_t depth, std::size_t budget) {
    return run_dag(t, block_prefix(g1, depth), block_prefix(g2, depth), budget);
}

}  // namespace omega
