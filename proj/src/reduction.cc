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

#include "omega/reduction.hh"

#include <algorithm>
#include <map>
#include <string_view>

namespace omega {

namespace {

Word one(const Letter& l) { return Word{l}; }

void require_source(const OneCounterBA& a) {
    require_block_alphabet(a.alphabet);
    const auto errors = validation_errors(a);
    if (!errors.empty()) {
        throw InvalidArgument("source automaton is invalid: " + errors.front());
    }
}

/// Letters of gamma that are not A.
std::vector<Letter> base_letters(const Alphabet& gamma) {
    std::vector<Letter> out;
    for (const auto& l : gamma.letters()) {
        if (l != kMarker) out.push_back(l);
    }
    return out;
}

/// Adds the pair scanner to t and returns its entry state.
State add_scanner(TwoTapeBA& t, const std::string& prefix = "scan") {
    const State s1 = t.add_state(prefix + "1", true);
    const State s2 = t.add_state(prefix + "2", false);
    for (const auto& l : t.input_alphabet.letters()) t.add_transition(s1, one(l), {}, s2);
    for (const auto& l : t.output_alphabet.letters()) t.add_transition(s2, {}, one(l), s1);
    return s1;
}

enum class Slot { Marker, Base };

/// Accepts when the given tape does not start with the slot pattern.
TwoTapeBA prefix_mismatch(const Alphabet& gamma, const std::vector<Slot>& pattern, bool first_tape) {
    TwoTapeBA t(gamma, gamma);
    std::vector<State> d;
    for (std::size_t k = 0; k < pattern.size(); ++k) {
        d.push_back(t.add_state("d" + std::to_string(k)));
    }
    t.initial = d[0];
    const State scan = add_scanner(t);
    auto read = [&](State from, const Letter& l, State to) {
        if (first_tape) {
            t.add_transition(from, one(l), {}, to);
        } else {
            t.add_transition(from, {}, one(l), to);
        }
    };
    for (std::size_t k = 0; k < pattern.size(); ++k) {
        for (const auto& l : gamma.letters()) {
            const bool fits = (l == kMarker) == (pattern[k] == Slot::Marker);
            if (!fits) {
                read(d[k], l, scan);
            } else if (k + 1 < pattern.size()) {
                read(d[k], l, d[k + 1]);
            }
        }
    }
    return t;
}

/// sigma_2 not in (A.0^+)^w.
TwoTapeBA marked_zero_blocks_violation(const Alphabet& gamma) {
    TwoTapeBA t(gamma, gamma);
    const State s0 = t.add_state("s0");
    const State tt = t.add_state("t");
    const State u = t.add_state("u");
    const State scan = add_scanner(t);
    const State tail = t.add_state("tail1", true);
    const State tail2 = t.add_state("tail2");
    t.initial = s0;
    for (const auto& l : gamma.letters()) {
        t.add_transition(s0, {}, one(l), l == kMarker ? tt : scan);
        t.add_transition(tt, {}, one(l), l == kZero ? u : scan);
        t.add_transition(u, {}, one(l), l == kZero ? u : l == kMarker ? tt : scan);
        t.add_transition(tail, one(l), {}, tail2);
    }
    t.add_transition(tail2, {}, one(kZero), tail);
    for (State s : {s0, tt, u}) t.add_transition(s, {}, {}, tail);
    return t;
}

/// sigma_1 not in (A.0^+.Sigma)^w.
TwoTapeBA coded_blocks_violation(const Alphabet& gamma) {
    TwoTapeBA t(gamma, gamma);
    const State s = t.add_state("s");
    const State tt = t.add_state("t");
    const State u1 = t.add_state("u1");
    const State u2 = t.add_state("u2");
    const State done = t.add_state("x");
    const State scan = add_scanner(t);
    const State tail = t.add_state("tail1", true);
    const State tail2 = t.add_state("tail2");
    t.initial = s;
    for (const auto& l : gamma.letters()) {
        const bool marker = l == kMarker;
        const bool zero = l == kZero;
        t.add_transition(s, one(l), {}, marker ? tt : scan);
        t.add_transition(tt, one(l), {}, zero ? u1 : scan);
        t.add_transition(u1, one(l), {}, zero ? u2 : marker ? scan : done);
        t.add_transition(u2, one(l), {}, zero ? u2 : marker ? tt : done);
        t.add_transition(done, one(l), {}, marker ? tt : scan);
        t.add_transition(tail2, {}, one(l), tail);
    }
    t.add_transition(tail, one(kZero), {}, tail2);
    for (State q : {s, tt, u1, u2, done}) t.add_transition(q, {}, {}, tail);
    return t;
}

/// c0 -(A,A)-> c1, c1 skips base letters on either tape and pairs markers;
/// returns the state reached by a final (A,A) out of c1.
State aligned_blocks(TwoTapeBA& t, const std::string& target) {
    const State c0 = t.add_state("c0");
    const State c1 = t.add_state("c1");
    const State k = t.add_state(target);
    t.initial = c0;
    t.add_transition(c0, one(kMarker), one(kMarker), c1);
    for (const auto& l : base_letters(t.input_alphabet)) {
        t.add_transition(c1, one(l), {}, c1);
        t.add_transition(c1, {}, one(l), c1);
    }
    t.add_transition(c1, one(kMarker), one(kMarker), c1);
    t.add_transition(c1, one(kMarker), one(kMarker), k);
    return k;
}

/// From k, compares a tape-1 block of length m against a tape-2 block of
/// length n, both ending at a marker, and reaches `scan` exactly when
/// m - n is not `forbidden` (which must be 1 or 2).
void length_disequality(TwoTapeBA& t, State k, State scan, int forbidden) {
    const auto sigma = base_letters(t.input_alphabet);
    const State kp = t.add_state("k'");
    const State kv = t.add_state("kv");
    const State kv2 = t.add_state("kv'");
    std::vector<State> e{t.add_state("e1")};
    for (int d = 1; d <= forbidden; ++d) e.push_back(t.add_state("e" + std::to_string(d + 1)));
    // Paired letters; equal lengths.
    for (const auto& l : sigma) {
        t.add_transition(k, one(l), {}, kp);
        t.add_transition(kp, {}, one(l), k);
    }
    t.add_transition(k, one(kMarker), one(kMarker), scan);
    // Tape 1 ends first: m < n.
    t.add_transition(k, one(kMarker), {}, kv);
    for (const auto& l : sigma) {
        t.add_transition(kv, {}, one(l), kv2);
        t.add_transition(kv2, {}, one(l), kv2);
    }
    t.add_transition(kv2, {}, one(kMarker), scan);
    // Tape 2 ends first: e[d-1] is reached with m - n >= d.
    t.add_transition(kp, {}, one(kMarker), e[0]);
    for (std::size_t d = 1; d < e.size(); ++d) {
        for (const auto& l : sigma) t.add_transition(e[d - 1], one(l), {}, e[d]);
        if (static_cast<int>(d) != forbidden) t.add_transition(e[d - 1], one(kMarker), {}, scan);
    }
    for (const auto& l : sigma) t.add_transition(e.back(), one(l), {}, e.back());
    t.add_transition(e.back(), one(kMarker), {}, scan);
}

std::pair<std::string_view, std::string_view> role_of(const std::string& name) {
    const auto c = name.find(':');
    if (c == std::string::npos) {
        return {name, {}};
    }
    return {std::string_view(name).substr(0, c), std::string_view(name).substr(c + 1)};
}

std::size_t find_macro(const TwoTapeBA& t, const std::vector<std::vector<std::size_t>>& adj,
                       State from, const Word& in, const Word& out, State to) {
    for (std::size_t k : adj[from]) {
        const auto& tr = t.transitions[k];
        if (tr.to == to && tr.input == in && tr.output == out) {
            return k;
        }
    }
    throw InternalError("R1 has no transition " + t.states.name(from) + " -> " + t.states.name(to) +
                        " on (" + to_string(in) + ", " + to_string(out) + ")");
}

bool all_zero(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](const Letter& l) { return l == kZero; });
}

}  // namespace

TwoTapeBA pair_scanner(const Alphabet& gamma) {
    TwoTapeBA t(gamma, gamma);
    t.initial = add_scanner(t);
    return t;
}

TwoTapeBA build_r1(const OneCounterBA& a) {
    require_source(a);
    const Alphabet gamma = Alphabet::with_marker(a.alphabet);
    TwoTapeBA t(gamma, gamma);
    const State init = t.add_state("init");
    const State u1 = t.add_state("u1");
    t.initial = init;
    std::vector<State> p, y, z;
    for (State q = 0; q < a.num_states(); ++q) {
        const auto& name = a.states.name(q);
        p.push_back(t.add_state("p:" + name));
        y.push_back(t.add_state("y:" + name));
        z.push_back(t.add_state("z:" + name, a.is_final(q)));
    }

    t.add_transition(init, one(kMarker), one(kMarker), u1);
    t.add_transition(u1, one(kZero), {}, u1);
    for (std::size_t k = 0; k < a.transitions.size(); ++k) {
        const auto& tr = a.transitions[k];
        const Letter& x = a.alphabet.letter(tr.letter);
        if (tr.zero_flag == 0) {
            if (tr.from == a.initial) {
                t.add_transition(u1, one(x), zeros(static_cast<std::size_t>(tr.delta)), z[tr.to]);
            }
            t.add_transition(p[tr.from], one(x), zeros(static_cast<std::size_t>(tr.delta)), z[tr.to]);
        } else {
            const State v = t.add_state("v:" + std::to_string(k));
            t.add_transition(p[tr.from], one(kZero), zeros(static_cast<std::size_t>(1 + tr.delta)), v);
            t.add_transition(v, one(kZero), one(kZero), v);
            t.add_transition(v, one(x), {}, z[tr.to]);
        }
    }
    for (State q = 0; q < a.num_states(); ++q) {
        t.add_transition(z[q], Word{kMarker, kZero}, {}, y[q]);
        t.add_transition(y[q], one(kZero), one(kZero), y[q]);
        t.add_transition(y[q], {}, one(kMarker), p[q]);
    }
    return t;
}

TwoTapeBA build_c1(const Alphabet& sigma) {
    require_block_alphabet(sigma);
    const Alphabet gamma = Alphabet::with_marker(sigma);
    using S = Slot;
    const TwoTapeBA first = prefix_mismatch(
        gamma, {S::Marker, S::Base, S::Base, S::Marker, S::Base, S::Base, S::Base, S::Marker}, true);
    const TwoTapeBA second =
        prefix_mismatch(gamma, {S::Marker, S::Base, S::Marker, S::Base, S::Base, S::Marker}, false);
    return union_of(first, second);
}

TwoTapeBA build_c2(const Alphabet& sigma) {
    require_block_alphabet(sigma);
    const Alphabet gamma = Alphabet::with_marker(sigma);
    return union_of(marked_zero_blocks_violation(gamma), coded_blocks_violation(gamma));
}

TwoTapeBA build_c3(const Alphabet& sigma) {
    require_block_alphabet(sigma);
    const Alphabet gamma = Alphabet::with_marker(sigma);
    TwoTapeBA t(gamma, gamma);
    const State k = aligned_blocks(t, "k");
    length_disequality(t, k, add_scanner(t), 1);
    return t;
}

TwoTapeBA build_c4(const Alphabet& sigma) {
    require_block_alphabet(sigma);
    const Alphabet gamma = Alphabet::with_marker(sigma);
    TwoTapeBA t(gamma, gamma);
    const State d = aligned_blocks(t, "skip");
    const State k = t.add_state("k");
    for (const auto& l : base_letters(gamma)) t.add_transition(d, one(l), {}, d);
    t.add_transition(d, one(kMarker), {}, k);
    length_disequality(t, k, add_scanner(t), 2);
    return t;
}

TwoTapeBA build_r2(const Alphabet& sigma) {
    const TwoTapeBA clauses[] = {build_c1(sigma), build_c2(sigma), build_c3(sigma), build_c4(sigma)};
    return union_of(std::span<const TwoTapeBA>(clauses));
}

ReductionBundle build_r(const OneCounterBA& a) {
    ReductionBundle b;
    b.source = a;
    b.gamma = Alphabet::with_marker(a.alphabet);
    b.t_r1 = build_r1(a);
    b.t_r2 = build_r2(a.alphabet);
    b.t_r = union_of(b.t_r1, b.t_r2);
    return b;
}

std::pair<BlockWord, BlockWord> g_pair(const LassoWord& x, const Alphabet& sigma) {
    return {h_word(x, sigma), alpha_word(sigma)};
}

BlockRun witness_run(const OneCounterBA& a, const LassoWord& /*x*/, const CounterRun& run,
                     std::size_t depth) {
    BlockRun out;
    out.initial = a.initial;
    if (run.cycle.empty() && depth > run.prefix.size()) {
        throw InvalidArgument("counter run is shorter than the requested depth");
    }
    if (!run.cycle.empty()) {
        out.cycle = BlockRun::Cycle{run.prefix.size(), run.cycle.size(), run.cycle_delta};
    }
    for (std::size_t i = 1; i <= depth; ++i) {
        const Configuration before = run.configuration_at(i - 1);
        const Configuration after = run.configuration_at(i);
        if (before.counter > i || after.counter > i) {
            throw InternalError("counter value exceeds block " + std::to_string(i) +
                                " of alpha");
        }
        const std::size_t k = run.transition_at(i - 1);
        Block b;
        b.u = zeros(i - before.counter);
        b.v = zeros(before.counter);
        b.x = a.alphabet.letter(a.transitions.at(k).letter);
        b.w = zeros(after.counter);
        b.z = zeros(i - after.counter);
        b.q = after.state;
        b.transition = k;
        out.blocks.push_back(std::move(b));
    }
    return out;
}

std::vector<std::string> validate_block_run(const OneCounterBA& a, const LassoWord& x,
                                            const BlockRun& run) {
    std::vector<std::string> errors;
    auto fail = [&](std::size_t i, const std::string& what) {
        errors.push_back("block " + std::to_string(i) + ": " + what);
    };
    if (run.initial != a.initial) {
        errors.push_back("q_0 is not the initial state");
    }
    State prev = run.initial;
    for (std::size_t i = 1; i <= run.blocks.size(); ++i) {
        const Block& b = run.blocks[i - 1];
        if (!all_zero(b.u) || !all_zero(b.v) || !all_zero(b.w) || !all_zero(b.z)) {
            fail(i, "u, v, w, z must be words over 0");
        }
        if (b.u.size() + b.v.size() != i) fail(i, "|u v| differs from the h block");
        if (b.w.size() + b.z.size() != i) fail(i, "|w z| differs from the alpha block");
        if (i == 1 && !b.v.empty()) fail(i, "|v_1| != 0");
        if (i < run.blocks.size()) {
            const Block& next = run.blocks[i];
            if (next.u.size() != b.z.size() + 1) fail(i, "|u_{i+1}| != |z_i| + 1");
            if (next.v.size() != b.w.size()) fail(i, "|v_{i+1}| != |w_i|");
        }
        if (b.x != lasso_letter_at(x, i)) fail(i, "x(i) differs from the input");
        const auto succ = step(a, Configuration{prev, b.v.size()}, b.x);
        if (std::find(succ.begin(), succ.end(), Configuration{b.q, b.w.size()}) == succ.end()) {
            fail(i, "(q_{i-1}, |v_i|) -x(i)-> (q_i, |w_i|) is not a step");
        }
        if (b.transition >= a.transitions.size()) {
            fail(i, "unknown source transition");
        } else {
            const auto& tr = a.transitions[b.transition];
            const bool fits = tr.from == prev && tr.to == b.q &&
                              a.alphabet.letter(tr.letter) == b.x &&
                              tr.zero_flag == (b.v.empty() ? 0 : 1) &&
                              static_cast<std::int64_t>(b.w.size()) ==
                                  static_cast<std::int64_t>(b.v.size()) + tr.delta;
            if (!fits) fail(i, "recorded transition does not match the block");
        }
        prev = b.q;
    }
    return errors;
}

std::vector<std::size_t> r1_macro_run(const TwoTapeBA& r1, const OneCounterBA& a,
                                      const BlockRun& run) {
    std::vector<std::size_t> macros;
    if (run.blocks.empty()) {
        return macros;
    }
    const auto adj = r1.adjacency();
    auto state = [&](const std::string& name) { return r1.states.state(name); };
    auto named = [&](const char* role, State q) { return state(std::string(role) + ":" + a.states.name(q)); };
    auto push = [&](State from, const Word& in, const Word& out, State to) {
        macros.push_back(find_macro(r1, adj, from, in, out, to));
    };

    const State u1 = state("u1");
    push(state("init"), one(kMarker), one(kMarker), u1);
    const Block& first = run.blocks[0];
    for (std::size_t k = 0; k < first.u.size(); ++k) push(u1, one(kZero), {}, u1);
    push(u1, one(first.x), first.w, named("z", first.q));

    for (std::size_t i = 1; i < run.blocks.size(); ++i) {
        const Block& b = run.blocks[i - 1];
        const Block& next = run.blocks[i];
        const State yq = named("y", b.q);
        const State pq = named("p", b.q);
        push(named("z", b.q), Word{kMarker, kZero}, {}, yq);
        for (std::size_t k = 0; k < b.z.size(); ++k) push(yq, one(kZero), one(kZero), yq);
        push(yq, {}, one(kMarker), pq);
        if (next.v.empty()) {
            push(pq, one(next.x), next.w, named("z", next.q));
        } else {
            const State v = state("v:" + std::to_string(next.transition));
            const int delta = a.transitions.at(next.transition).delta;
            push(pq, one(kZero), zeros(static_cast<std::size_t>(1 + delta)), v);
            for (std::size_t k = 1; k < next.v.size(); ++k) push(v, one(kZero), one(kZero), v);
            push(v, one(next.x), {}, named("z", next.q));
        }
    }
    return macros;
}

std::optional<std::vector<std::size_t>> embed_macro_run(const NormalizedTwoTapeBA& n,
                                                        const RunDag& dag,
                                                        const std::vector<std::size_t>& macros) {
    std::vector<std::size_t> path;
    std::size_t node = 0;
    for (std::size_t k : macros) {
        for (std::size_t m : n.chains.at(k)) {
            const auto e = dag.edge_by_micro(node, m);
            if (!e) {
                return std::nullopt;
            }
            path.push_back(*e);
            node = dag.edges[*e].to;
        }
    }
    return path;
}

std::size_t final_visits(const NormalizedTwoTapeBA& n, const RunDag& dag,
                         const std::vector<std::size_t>& path) {
    std::size_t count = 0;
    for (std::size_t e : path) {
        if (n.final[dag.nodes[dag.edges[e].to].state]) ++count;
    }
    return count;
}

R1PathReport check_r1_path(const OneCounterBA& a, const LassoWord* x, const TwoTapeBA& r1,
                           const NormalizedTwoTapeBA& n, const RunDag& dag,
                           const std::vector<std::size_t>& path) {
    R1PathReport report;
    auto fail = [&](std::size_t i, const std::string& what) {
        report.violations.push_back("block " + std::to_string(i) + ": " + what);
    };
    // Per-block letter counts, indexed by block number; index 0 is unused.
    std::vector<std::size_t> u(1), v(1), w(1), z(1);
    auto grow = [](std::vector<std::size_t>& c, std::size_t i) {
        if (c.size() <= i) c.resize(i + 1, 0);
    };
    std::size_t k1 = 0, k2 = 0;
    std::vector<State> q{a.initial};

    for (std::size_t e : path) {
        const std::size_t m = dag.edges.at(e).micro;
        const std::size_t macro = n.transitions.at(m).origin;
        if (n.chains.at(macro).back() != m) {
            continue;  // only whole macro transitions are decomposed
        }
        const TwoTapeTransition& tr = r1.transitions.at(macro);
        const auto [from_role, from_rest] = role_of(r1.states.name(tr.from));
        const auto [to_role, to_rest] = role_of(r1.states.name(tr.to));

        std::optional<Letter> xi;
        for (std::size_t s = 0; s < tr.input.size(); ++s) {
            const Letter& l = tr.input[s];
            if (l == kMarker) {
                ++k1;
                continue;
            }
            grow(u, k1);
            grow(v, k1);
            if (to_role == "z" && s + 1 == tr.input.size()) {
                xi = l;
            } else if (l != kZero) {
                fail(k1, "letter " + l + " inside u or v");
            } else if (from_role == "u1" || from_role == "z" || from_role == "y") {
                ++u[k1];
            } else {
                ++v[k1];
            }
        }
        for (const Letter& l : tr.output) {
            if (l == kMarker) {
                ++k2;
                continue;
            }
            grow(w, k2);
            grow(z, k2);
            if (l != kZero) {
                fail(k2, "letter " + l + " inside w or z");
            } else if (from_role == "y") {
                ++z[k2];
            } else {
                ++w[k2];
            }
        }

        if (to_role == "z") {
            const std::size_t i = k1;
            grow(u, i);
            grow(v, i);
            grow(w, i);
            grow(z, i);
            if (!xi) {
                fail(i, "block closed without a letter");
                continue;
            }
            if (k2 != i) fail(i, "tapes are in different blocks");
            if (i == 1 && v[1] != 0) fail(i, "|v_1| != 0");
            if (x != nullptr) {
                if (i >= 2 && v[i] != w[i - 1]) fail(i, "|v_i| != |w_{i-1}|");
                if (*xi != lasso_letter_at(*x, i)) fail(i, "x(i) differs from the input");
            }
            const auto qi = a.states.find(std::string(to_rest));
            if (!qi) {
                fail(i, "unknown source state " + std::string(to_rest));
                continue;
            }
            if (q.size() != i) {
                fail(i, "block steps are out of order");
                continue;
            }
            const Configuration before{q.back(), v[i]};
            const auto succ = step(a, before, *xi);
            if (std::find(succ.begin(), succ.end(), Configuration{*qi, w[i]}) == succ.end()) {
                fail(i, "(q_{i-1}, |v_i|) -x(i)-> (q_i, |w_i|) is not a step");
            }
            report.configurations.push_back(before);
            q.push_back(*qi);
            report.complete_blocks = i;
        } else if (to_role == "p") {
            // Tape 2 just entered block k2: z_{k2-1} and u_{k2} are complete.
            const std::size_t i = k2 - 1;
            grow(u, k1);
            grow(z, i);
            if (k1 != k2) fail(k1, "tapes are in different blocks");
            if (i >= 1 && u[k1] != z[i] + 1) fail(i, "|u_{i+1}| != |z_i| + 1");
        }
    }
    return report;
}

Alphabet sample_sigma() { return Alphabet{kZero, "a", "b", "c"}; }

OneCounterBA sample_a0() {
    OneCounterBA m(sample_sigma());
    const State q0 = m.add_state("q0", true);
    m.initial = q0;
    m.add_transition(q0, "a", 0, q0, 0);
    return m;
}

OneCounterBA sample_m_ex() {
    OneCounterBA m(sample_sigma());
    const State q0 = m.add_state("q0");
    const State qf = m.add_state("qf", true);
    m.initial = q0;
    m.add_transition(q0, "a", 0, q0, +1);
    m.add_transition(q0, "a", 1, q0, +1);
    m.add_transition(q0, "b", 1, q0, -1);
    m.add_transition(q0, "c", 0, qf, 0);
    m.add_transition(qf, "c", 0, qf, 0);
    return m;
}

OneCounterBA sample_empty() {
    OneCounterBA m(sample_sigma());
    const State q0 = m.add_state("q0");
    const State q1 = m.add_state("q1", true);
    m.initial = q0;
    m.add_transition(q0, "a", 0, q0, +1);
    m.add_transition(q0, "a", 1, q0, +1);
    m.add_transition(q0, "b", 1, q1, -1);
    m.add_transition(q1, "b", 1, q1, -1);
    return m;
}

}  // namespace omega
