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

#include "omega/checks.hh"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <type_traits>

#include "omega/format.hh"

namespace omega::checks {

namespace {

const std::vector<Letter> kAB = {"a", "b"};
const std::vector<Letter> kABC = {"a", "b", "c"};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(g_() % n); }
    bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

private:
    std::mt19937_64 g_;
};

void expect(CheckResult& r, bool ok, const std::string& what) {
    ++r.cases;
    if (!ok) r.fail(what);
}

/// As expect, building the message only on failure.
template <class Describe>
    requires std::is_invocable_r_v<std::string, Describe>
void expect(CheckResult& r, bool ok, Describe&& describe) {
    ++r.cases;
    if (!ok) r.fail(describe());
}

template <class Fn>
void expect_throws(CheckResult& r, Fn&& fn, const std::string& what) {
    ++r.cases;
    try {
        fn();
        r.fail(what + ": no error raised");
    } catch (const Error&) {
    }
}

/// Every lasso, canonical or not, with |stem| <= max_stem and
/// 1 <= |loop| <= max_loop.
std::vector<LassoWord> raw_lassos(const std::vector<Letter>& letters, std::size_t max_stem,
                                  std::size_t max_loop) {
    std::vector<Word> words{{}};
    std::vector<std::vector<Word>> by_length{{Word{}}};
    for (std::size_t len = 1; len <= std::max(max_stem, max_loop); ++len) {
        std::vector<Word> next;
        for (const Word& w : by_length.back()) {
            for (const auto& l : letters) {
                Word x = w;
                x.push_back(l);
                next.push_back(std::move(x));
            }
        }
        by_length.push_back(std::move(next));
    }
    std::vector<LassoWord> out;
    for (std::size_t s = 0; s <= max_stem; ++s) {
        for (std::size_t l = 1; l <= max_loop; ++l) {
            for (const Word& stem : by_length[s]) {
                for (const Word& loop : by_length[l]) out.emplace_back(stem, loop);
            }
        }
    }
    return out;
}

LassoWord random_lasso(Rng& rng, const std::vector<Letter>& letters, std::size_t max_stem,
                       std::size_t max_loop) {
    Word stem, loop;
    const std::size_t s = rng.below(max_stem + 1);
    const std::size_t l = 1 + rng.below(max_loop);
    for (std::size_t i = 0; i < s; ++i) stem.push_back(letters[rng.below(letters.size())]);
    for (std::size_t i = 0; i < l; ++i) loop.push_back(letters[rng.below(letters.size())]);
    return lasso_normalize(LassoWord(std::move(stem), std::move(loop)));
}

/// Letters drawn with the marker and 0 each a third of the time, so that
/// block-shaped words come up often.
LassoWord random_gamma_lasso(Rng& rng, const Alphabet& alphabet) {
    std::vector<Letter> others;
    for (const auto& l : alphabet.letters()) {
        if (l != kMarker && l != kZero) others.push_back(l);
    }
    const bool blocky = alphabet.contains(kMarker) && alphabet.contains(kZero) && !others.empty();
    auto pick = [&]() -> Letter {
        if (!blocky) return alphabet.letter(rng.below(alphabet.size()));
        switch (rng.below(3)) {
        case 0: return kMarker;
        case 1: return kZero;
        default: return others[rng.below(others.size())];
        }
    };
    Word stem, loop;
    const std::size_t s = rng.below(6);
    const std::size_t l = 1 + rng.below(4);
    for (std::size_t i = 0; i < s; ++i) stem.push_back(pick());
    for (std::size_t i = 0; i < l; ++i) loop.push_back(pick());
    return lasso_normalize(LassoWord(std::move(stem), std::move(loop)));
}

LassoPair random_pair(Rng& rng, const TwoTapeBA& t) {
    return LassoPair{random_gamma_lasso(rng, t.input_alphabet),
                     random_gamma_lasso(rng, t.output_alphabet)};
}

BuchiAutomaton random_buchi(Rng& rng, std::size_t max_states) {
    BuchiAutomaton a{Alphabet(kAB)};
    const std::size_t n = 1 + rng.below(max_states);
    for (std::size_t q = 0; q < n; ++q) a.add_state("q" + std::to_string(q), rng.chance(2, 5));
    a.initial = 0;
    for (std::size_t p = 0; p < n; ++p) {
        for (Symbol s = 0; s < 2; ++s) {
            for (std::size_t q = 0; q < n; ++q) {
                if (rng.chance(3, 10)) a.add_transition(p, s, q);
            }
        }
    }
    return a;
}

OneCounterBA random_counter(Rng& rng) {
    OneCounterBA m{Alphabet(kAB)};
    const std::size_t n = 1 + rng.below(3);
    for (std::size_t q = 0; q < n; ++q) m.add_state("q" + std::to_string(q), rng.chance(1, 2));
    m.initial = 0;
    const std::size_t count = 1 + rng.below(7);
    for (std::size_t k = 0; k < count; ++k) {
        const int flag = static_cast<int>(rng.below(2));
        const int delta = flag == 0 ? static_cast<int>(rng.below(2))
                                    : static_cast<int>(rng.below(3)) - 1;
        m.add_transition(rng.below(n), kAB[rng.below(2)], flag, rng.below(n), delta);
    }
    return m;
}

/// Both zero-test outcomes for every control transition, deltas in {0, +1}.
OneCounterBA counter_blind(Rng& rng, const BuchiAutomaton& a) {
    OneCounterBA m(a.alphabet);
    for (State q = 0; q < a.num_states(); ++q) m.add_state(a.states.name(q), a.is_final(q));
    m.initial = a.initial;
    for (const auto& t : a.transitions) {
        const int delta = static_cast<int>(rng.below(2));
        m.add_transition(t.from, a.alphabet.letter(t.letter), 0, t.to, delta);
        m.add_transition(t.from, a.alphabet.letter(t.letter), 1, t.to, delta);
    }
    return m;
}

CounterOptions counter_options(const SuiteOptions& opts) {
    CounterOptions c;
    c.counter_cap = opts.counter_cap;
    c.node_budget = opts.node_budget;
    return c;
}

/// Lasso variants denoting the same word: loop doubled, first loop letter
/// moved into the stem.
std::vector<LassoWord> variants(const LassoWord& w) {
    Word stem = w.stem();
    stem.push_back(w.loop().front());
    Word rotated(w.loop().begin() + 1, w.loop().end());
    rotated.push_back(w.loop().front());
    return {LassoWord(w.stem(), concat(w.loop(), w.loop())), LassoWord(stem, rotated)};
}

std::string pair_text(const std::string& name, const LassoPair& p) {
    return name + " " + to_string(p);
}

OneCounterBA sigma_star_counter() {
    const Alphabet sigma = sample_sigma();
    OneCounterBA m(sigma);
    const State q = m.add_state("q", true);
    m.initial = q;
    for (const auto& l : sigma.letters()) {
        m.add_transition(q, l, 0, q, 0);
        m.add_transition(q, l, 1, q, 0);
    }
    return m;
}

TwoTapeBA identity_over(const Alphabet& alphabet) {
    TwoTapeBA t(alphabet, alphabet);
    const State q = t.add_state("q", true);
    t.initial = q;
    for (const auto& l : alphabet.letters()) t.add_transition(q, {l}, {l}, q);
    return t;
}

TwoTapeBA no_final(const Alphabet& alphabet) {
    TwoTapeBA t(alphabet, alphabet);
    const State q = t.add_state("q");
    t.initial = q;
    for (const auto& l : alphabet.letters()) t.add_transition(q, {l}, {l}, q);
    return t;
}

/// Final loop that only ever reads the given tape.
TwoTapeBA one_tape_loop(const Alphabet& alphabet, bool first) {
    TwoTapeBA t(alphabet, alphabet);
    const State q0 = t.add_state("q0");
    const State q1 = t.add_state("q1", true);
    t.initial = q0;
    t.add_transition(q0, {alphabet.letter(0)}, {alphabet.letter(0)}, q1);
    for (const auto& l : alphabet.letters()) {
        if (first) t.add_transition(q1, {l}, {}, q1);
        else t.add_transition(q1, {}, {l}, q1);
    }
    return t;
}

TwoTapeBA random_two_tape(Rng& rng) {
    const Alphabet ab(kAB);
    TwoTapeBA t(ab, ab);
    const std::size_t n = 1 + rng.below(3);
    for (std::size_t q = 0; q < n; ++q) t.add_state("q" + std::to_string(q), rng.chance(1, 2));
    t.initial = 0;
    const std::size_t count = 1 + rng.below(6);
    for (std::size_t k = 0; k < count; ++k) {
        Word in, out;
        for (std::size_t i = rng.below(3); i > 0; --i) in.push_back(kAB[rng.below(2)]);
        for (std::size_t i = rng.below(3); i > 0; --i) out.push_back(kAB[rng.below(2)]);
        t.add_transition(rng.below(n), std::move(in), std::move(out), rng.below(n));
    }
    return t;
}

bool same_two_tape(const TwoTapeBA& a, const TwoTapeBA& b) {
    return a.input_alphabet == b.input_alphabet && a.output_alphabet == b.output_alphabet &&
           a.states.names() == b.states.names() && a.initial == b.initial && a.final == b.final &&
           a.transitions == b.transitions;
}

/// Tapes read along a micro run, then the run's DAG path over them.
struct RunOnTapes {
    RunDag dag;
    std::vector<std::size_t> path;
};

std::optional<RunOnTapes> replay(const NormalizedTwoTapeBA& n, const std::vector<std::size_t>& micro) {
    Word t1, t2;
    for (std::size_t m : micro) {
        const auto& mt = n.transitions[m];
        if (mt.tape == Tape::First) t1.push_back(n.input_alphabet.letter(mt.letter));
        if (mt.tape == Tape::Second) t2.push_back(n.output_alphabet.letter(mt.letter));
    }
    RunOnTapes r{run_dag(n, t1, t2), {}};
    std::size_t node = 0;
    for (std::size_t m : micro) {
        const auto e = r.dag.edge_by_micro(node, m);
        if (!e) return std::nullopt;
        r.path.push_back(*e);
        node = r.dag.edges[*e].to;
    }
    return r;
}

}  // namespace

// Samples.

std::vector<std::pair<std::string, OneCounterBA>> shipped_counters() {
    return {{"counter.a0", sample_a0()}, {"counter.m_ex", sample_m_ex()}, {"counter.empty", sample_empty()}};
}

TwoTapeBA sample_identity() { return identity_over(Alphabet(kAB)); }

TwoTapeBA sample_silent() {
    const Alphabet ab(kAB);
    TwoTapeBA t(ab, ab);
    const State s0 = t.add_state("s0");
    const State s1 = t.add_state("s1", true);
    t.initial = s0;
    t.add_transition(s0, {"a"}, {"b"}, s1);
    t.add_transition(s1, {}, {}, s1);
    return t;
}

BuchiAutomaton sample_inf_a() {
    BuchiAutomaton a{Alphabet(kAB)};
    const State q0 = a.add_state("q0");
    const State q1 = a.add_state("q1", true);
    a.initial = q0;
    a.add_transition(q0, "a", q1);
    a.add_transition(q0, "b", q0);
    a.add_transition(q1, "a", q1);
    a.add_transition(q1, "b", q0);
    return a;
}

std::vector<std::pair<std::string, TwoTapeBA>> shipped_two_tape() {
    const Alphabet sigma = sample_sigma();
    return {{"2tape.identity", sample_identity()},
            {"2tape.silent", sample_silent()},
            {"r1.a0", build_r1(sample_a0())},
            {"r1.m_ex", build_r1(sample_m_ex())},
            {"r1.empty", build_r1(sample_empty())},
            {"c1", build_c1(sigma)},
            {"c2", build_c2(sigma)},
            {"c3", build_c3(sigma)},
            {"c4", build_c4(sigma)}};
}

// Oracles.

bool brute_buchi_accepts(const BuchiAutomaton& a, const LassoWord& w) {
    const std::size_t n = a.num_states();
    auto post = [&](const std::vector<bool>& s, const Letter& l) {
        std::vector<bool> out(n, false);
        const auto sym = a.alphabet.index_of(l);
        if (!sym) return out;
        for (const auto& t : a.transitions) {
            if (s[t.from] && t.letter == *sym) out[t.to] = true;
        }
        return out;
    };
    std::vector<bool> cur(n, false);
    cur[a.initial] = true;
    for (const auto& l : w.stem()) cur = post(cur, l);

    // rel[p][2q + f]: reading the loop once leads from p to q, f = a final
    // state was entered.
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(2 * n, false));
    for (State p = 0; p < n; ++p) {
        std::vector<bool> s(2 * n, false);
        s[2 * p] = true;
        for (const auto& l : w.loop()) {
            std::vector<bool> next(2 * n, false);
            const auto sym = a.alphabet.index_of(l);
            for (const auto& t : a.transitions) {
                if (!sym || t.letter != *sym) continue;
                for (int f = 0; f < 2; ++f) {
                    if (s[2 * t.from + f]) next[2 * t.to + ((f || a.is_final(t.to)) ? 1 : 0)] = true;
                }
            }
            s = std::move(next);
        }
        rel[p] = std::move(s);
    }
    // States at loop boundaries reachable after the stem.
    std::vector<bool> boundary = cur;
    std::deque<State> queue;
    for (State q = 0; q < n; ++q) {
        if (boundary[q]) queue.push_back(q);
    }
    while (!queue.empty()) {
        const State p = queue.front();
        queue.pop_front();
        for (State q = 0; q < n; ++q) {
            if ((rel[p][2 * q] || rel[p][2 * q + 1]) && !boundary[q]) {
                boundary[q] = true;
                queue.push_back(q);
            }
        }
    }
    for (State q = 0; q < n; ++q) {
        if (!boundary[q]) continue;
        std::vector<bool> seen(2 * n, false);
        std::deque<std::size_t> bfs{2 * q};
        seen[2 * q] = true;
        while (!bfs.empty()) {
            const std::size_t node = bfs.front();
            bfs.pop_front();
            const State p = node / 2;
            const std::size_t f = node % 2;
            for (State r = 0; r < n; ++r) {
                for (std::size_t g = 0; g < 2; ++g) {
                    if (!rel[p][2 * r + g]) continue;
                    const std::size_t next = 2 * r + ((f || g) ? 1 : 0);
                    if (next == 2 * q + 1) return true;
                    if (!seen[next]) {
                        seen[next] = true;
                        bfs.push_back(next);
                    }
                }
            }
        }
    }
    return false;
}

std::optional<std::size_t> first_difference(const LassoWord& x, const LassoWord& y) {
    const std::size_t bound = std::max(x.stem().size(), y.stem().size()) +
                              std::lcm(x.loop().size(), y.loop().size());
    for (std::size_t i = 1; i <= bound; ++i) {
        if (x.letter_at(i) != y.letter_at(i)) return i;
    }
    return std::nullopt;
}

namespace {

std::optional<std::size_t> block_shape_violation(const LassoWord& w, std::size_t limit, bool coded) {
    std::size_t pos = 1;
    for (std::size_t i = 1; i <= limit; ++i) {
        if (w.letter_at(pos++) != kMarker) return i;
        for (std::size_t k = 0; k < i; ++k) {
            if (w.letter_at(pos++) != kZero) return i;
        }
        if (coded && w.letter_at(pos++) == kMarker) return i;
    }
    if (w.letter_at(pos) != kMarker) return limit;
    return std::nullopt;
}

}  // namespace

std::optional<std::size_t> h_shape_violation(const LassoWord& w, std::size_t limit) {
    return block_shape_violation(w, limit, true);
}

std::optional<std::size_t> alpha_shape_violation(const LassoWord& w, std::size_t limit) {
    return block_shape_violation(w, limit, false);
}

const std::vector<LassoWord>& counter_corpus() {
    static const std::vector<LassoWord> corpus = enumerate_lassos(kABC, 6);
    return corpus;
}

const std::vector<LassoWord>& gamma_corpus() {
    static const std::vector<LassoWord> corpus =
        enumerate_lassos(Alphabet::with_marker(sample_sigma()).letters(), 4);
    return corpus;
}

// words

CheckResult words_examples() {
    CheckResult r;
    const Alphabet sigma = sample_sigma();
    expect(r, lasso_letter_at(parse_lasso("ab(c)"), 5) == "c", "letter_at ab(c), 5");
    expect(r, lasso_letter_at(parse_lasso("(ab)"), 2) == "b", "letter_at (ab), 2");
    expect(r, lasso_letter_at(parse_lasso("a(ba)"), 4) == "b", "letter_at a(ba), 4");
    expect(r, lasso_normalize(parse_lasso("a(bb)")) == parse_lasso("a(b)"), "normalize a(bb)");
    expect(r, lasso_normalize(parse_lasso("(ab)")) == parse_lasso("(ab)"), "normalize (ab)");
    expect(r, lasso_normalize(parse_lasso("a(ba)")) == parse_lasso("(ab)"), "normalize a(ba)");
    expect_throws(r, [] { LassoWord(Word{"a"}, Word{}); }, "empty loop");
    const BlockWord hx = h_word(parse_lasso("(ab)"), sigma);
    expect(r, to_string(hx.block(1)) == "0a" && to_string(hx.block(2)) == "00b" &&
                  to_string(hx.block(3)) == "000a",
           "h((ab)) blocks");
    expect(r, to_string(h_word(parse_lasso("(0)"), sigma).block(4)) == "00000", "h((0)) block 4");
    expect(r, to_string(block_prefix(hx, 2)) == "A0aA00b", "h((ab)) prefix 2");
    const BlockWord al = alpha_word(sigma);
    expect(r, to_string(al.block(1)) == "0" && to_string(al.block(3)) == "000", "alpha blocks");
    expect(r, to_string(block_prefix(al, 3)) == "A0A00A000", "alpha prefix 3");
    expect(r, block_prefix(alpha_word(Alphabet{"0"}), 0).empty(), "alpha prefix 0");
    expect_throws(r, [] { h_word(parse_lasso("(a)"), Alphabet{"a", "b"}); }, "h without 0");
    expect_throws(r, [] { alpha_word(Alphabet{"0", "A"}); }, "alpha with A in sigma");
    return r;
}

CheckResult words_lasso_normalize() {
    CheckResult r;
    const auto all = raw_lassos(kAB, 3, 3);
    std::vector<LassoWord> canon;
    for (const auto& w : all) {
        const LassoWord c = lasso_normalize(w);
        canon.push_back(c);
        expect(r, c.is_canonical() && lasso_normalize(c) == c, "not canonical: " + to_string(w));
        expect(r, !first_difference(w, c).has_value(), "changes the word: " + to_string(w));
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const bool same = !first_difference(all[i], all[j]).has_value();
            expect(r, same == (canon[i] == canon[j]), [&] {
                return "canonical equality disagrees: " + to_string(all[i]) + " vs " + to_string(all[j]);
            });
        }
    }
    return r;
}

CheckResult words_letter_at(std::uint64_t seed) {
    CheckResult r;
    Rng rng(seed);
    for (int k = 0; k < 200; ++k) {
        const LassoWord w = random_lasso(rng, kABC, 5, 5);
        Word naive = w.stem();
        while (naive.size() < 1000) naive = concat(naive, w.loop());
        bool ok = true;
        for (std::size_t i = 1; i <= 1000 && ok; ++i) ok = lasso_letter_at(w, i) == naive[i - 1];
        expect(r, ok, "letter_at disagrees on " + to_string(w));
    }
    return r;
}

namespace {

/// block_prefix(h(x), n) for n <= max_depth, stored as one rendering and
/// the length of each depth's prefix.
struct CodedPrefixes {
    std::string text;
    std::vector<std::size_t> end;
};

CodedPrefixes coded_prefixes(const LassoWord& x, std::size_t max_depth) {
    const BlockWord hx = h_word(x, sample_sigma());
    CodedPrefixes c;
    c.text = to_string(block_prefix(hx, max_depth));
    for (std::size_t n = 0; n <= max_depth; ++n) c.end.push_back(block_prefix(hx, n).size());
    return c;
}

std::string_view coded_prefix(const CodedPrefixes& c, std::size_t n) {
    return std::string_view(c.text).substr(0, c.end.at(n));
}

constexpr std::size_t kCodedDepth = 36;

const std::vector<CodedPrefixes>& corpus_prefixes() {
    static const std::vector<CodedPrefixes> all = [] {
        std::vector<CodedPrefixes> out;
        for (const auto& x : counter_corpus()) out.push_back(coded_prefixes(x, kCodedDepth));
        return out;
    }();
    return all;
}

}  // namespace

CheckResult words_h_injectivity() {
    CheckResult r;
    const auto& corpus = counter_corpus();
    const auto& pre = corpus_prefixes();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            const auto n = first_difference(corpus[i], corpus[j]);
            ++r.cases;
            if (!n || *n > kCodedDepth) {
                r.fail("distinct canonical lassos denote one word: " + to_string(corpus[i]) + ", " +
                       to_string(corpus[j]));
                continue;
            }
            if (coded_prefix(pre[i], *n) == coded_prefix(pre[j], *n)) {
                r.fail("h prefixes agree at depth " + std::to_string(*n) + ": " +
                       to_string(corpus[i]) + ", " + to_string(corpus[j]));
            }
        }
    }
    return r;
}

CheckResult words_h_continuity() {
    CheckResult r;
    const auto& corpus = counter_corpus();
    const auto& pre = corpus_prefixes();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        expect(r, pre[i].text.size() == pre[i].end.back(), "rendering is not letter per char");
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            const auto n = first_difference(corpus[i], corpus[j]);
            const std::size_t agree = std::min(n.value_or(kCodedDepth + 1) - 1, kCodedDepth);
            expect(r, coded_prefix(pre[i], agree) == coded_prefix(pre[j], agree), [&] {
                return "h prefixes differ within the common prefix: " + to_string(corpus[i]) + ", " +
                       to_string(corpus[j]);
            });
        }
    }
    return r;
}

CheckResult words_not_block_word() {
    CheckResult r;
    const auto corpus = enumerate_lassos(Alphabet::with_marker(sample_sigma()).letters(), 5);
    for (const auto& w : corpus) {
        const std::size_t limit = w.size() + 2;
        expect(r, h_shape_violation(w, limit).has_value(), "lasso has the shape of h(x): " + to_string(w));
        expect(r, alpha_shape_violation(w, limit).has_value(), "lasso has the shape of alpha: " + to_string(w));
    }
    // The shape test itself accepts genuine prefixes.
    const auto hx = block_prefix(h_word(parse_lasso("(ab)"), sample_sigma()), 12);
    const LassoWord fake(hx, Word{kMarker});
    expect(r, !h_shape_violation(fake, 11).has_value(), "h prefix rejected by the shape test");
    return r;
}

// buchi

CheckResult buchi_examples() {
    CheckResult r;
    const auto a1 = lasso_automaton(parse_lasso("(a)"));
    expect(r, a1.num_states() == 1 && a1.transitions.size() == 1, "lasso_automaton (a)");
    const auto a3 = lasso_automaton(parse_lasso("a(bc)"));
    expect(r, a3.num_states() == 3 && a3.transitions.size() == 3, "lasso_automaton a(bc)");
    for (const auto& w : enumerate_lassos(kAB, 4)) {
        expect(r, accepts_lasso(lasso_automaton(w, Alphabet(kAB)), w), "lasso automaton rejects " + to_string(w));
    }
    BuchiAutomaton all{Alphabet(kAB)};
    all.initial = all.add_state("q", true);
    all.add_transition(0, "a", 0);
    all.add_transition(0, "b", 0);
    const auto inf_a = sample_inf_a();
    expect(r, accepts_lasso(all, parse_lasso("ab(ba)")), "all-accepting rejects");
    expect(r, !accepts_lasso(inf_a, parse_lasso("a(b)")), "infinitely many a accepts a(b)");
    expect(r, accepts_lasso(inf_a, parse_lasso("(ab)")), "infinitely many a rejects (ab)");
    BuchiAutomaton inf_b = inf_a;
    std::swap(inf_b.transitions[0].letter, inf_b.transitions[1].letter);
    std::swap(inf_b.transitions[2].letter, inf_b.transitions[3].letter);
    const auto both = degeneralize(product(inf_a, inf_b));
    expect(r, accepts_lasso(both, parse_lasso("(ab)")), "product rejects (ab)");
    expect(r, !accepts_lasso(both, parse_lasso("a(b)")), "product accepts a(b)");
    BuchiAutomaton none{Alphabet(kAB)};
    none.initial = none.add_state("q");
    none.add_transition(0, "a", 0);
    expect(r, is_empty(degeneralize(product(all, none))), "product with empty language");
    GeneralizedBuchi g{Alphabet(kAB)};
    g.initial = g.add_state("p");
    g.add_state("q");
    g.add_transition(0, 0, 1);
    g.add_transition(1, 1, 0);
    const auto d = degeneralize(g);
    expect(r, d.num_states() == 2 && d.transitions.size() == 2 &&
                  std::all_of(d.final.begin(), d.final.end(), [](bool f) { return f; }),
           "degeneralize without sets");
    BuchiAutomaton unreachable{Alphabet(kAB)};
    unreachable.initial = unreachable.add_state("q0");
    unreachable.add_state("q1", true);
    unreachable.add_transition(0, "a", 0);
    unreachable.add_transition(1, "a", 1);
    expect(r, is_empty(unreachable), "unreachable final state");
    expect(r, !is_empty(all), "final self-loop");
    expect_throws(r, [&] { product(all, lasso_automaton(parse_lasso("(c)"))); }, "alphabet mismatch");
    return r;
}

CheckResult buchi_emptiness(std::uint64_t seed) {
    CheckResult r;
    Rng rng(seed);
    const auto lassos = raw_lassos(kAB, 5, 5);
    for (int k = 0; k < 200; ++k) {
        const BuchiAutomaton a = random_buchi(rng, 5);
        const bool brute = std::any_of(lassos.begin(), lassos.end(),
                                       [&](const LassoWord& w) { return brute_buchi_accepts(a, w); });
        const auto witness = find_accepted_lasso(a);
        expect(r, witness.has_value() == brute, "is_empty disagrees on automaton " + std::to_string(k) +
                                                    ":\n" + serialize(a));
        if (witness) {
            expect(r, brute_buchi_accepts(a, *witness) && accepts_lasso(a, *witness),
                   "witness " + to_string(*witness) + " is not accepted");
        }
    }
    return r;
}

CheckResult buchi_product(std::uint64_t seed) {
    CheckResult r;
    Rng rng(seed);
    std::vector<BuchiAutomaton> autos;
    for (int k = 0; k < 200; ++k) autos.push_back(random_buchi(rng, 5));
    const auto lassos = enumerate_lassos(kAB, 4);
    for (std::size_t k = 0; k < autos.size(); ++k) {
        const auto& a = autos[k];
        const auto& b = autos[(k + 1) % autos.size()];
        const GeneralizedBuchi g = product(a, b);
        const BuchiAutomaton d = degeneralize(g);
        expect(r, d.num_states() <= g.num_states() * (g.num_sets() + 1), "degeneralize state bound");
        expect(r, is_empty(g) == is_empty(d), "degeneralize changes emptiness");
        for (const auto& w : lassos) {
            const bool ba = brute_buchi_accepts(a, w);
            const bool bb = brute_buchi_accepts(b, w);
            expect(r, accepts_lasso(a, w) == ba, "accepts_lasso disagrees on " + to_string(w));
            expect(r, accepts_lasso(d, w) == (ba && bb),
                   "product is not the intersection on " + to_string(w));
        }
    }
    return r;
}

CheckResult buchi_canonical_invariance(std::uint64_t seed) {
    CheckResult r;
    Rng rng(seed);
    const auto lassos = enumerate_lassos(kAB, 4);
    for (int k = 0; k < 50; ++k) {
        const BuchiAutomaton a = random_buchi(rng, 4);
        for (const auto& w : lassos) {
            const bool v = accepts_lasso(a, w);
            for (const auto& x : variants(w)) {
                expect(r, lasso_normalize(x) == w, "variant does not normalize back: " + to_string(x));
                expect(r, accepts_lasso(a, x) == v, "verdict depends on lasso form: " + to_string(x));
            }
        }
    }
    return r;
}

// counter

CheckResult counter_examples() {
    CheckResult r;
    OneCounterBA bad{Alphabet(kAB)};
    bad.initial = bad.add_state("q", true);
    bad.add_transition(0, "a", 0, 0, -1);
    expect(r, !validate(bad) && validation_errors(bad).size() == 1, "zero-test decrement accepted");
    OneCounterBA ok{Alphabet(kAB)};
    ok.initial = ok.add_state("q", true);
    ok.add_state("q1");
    ok.add_transition(0, "a", 1, 1, -1);
    expect(r, validate(ok), "non-zero decrement rejected");
    OneCounterBA empty_delta{Alphabet(kAB)};
    empty_delta.initial = empty_delta.add_state("q");
    expect(r, validate(empty_delta), "empty transition set rejected");

    OneCounterBA inc{Alphabet(kAB)};
    inc.initial = inc.add_state("q0");
    inc.add_state("q1");
    inc.add_transition(0, "a", 0, 0, +1);
    inc.add_transition(0, "b", 1, 1, -1);
    expect(r, step(inc, {0, 0}, "a") == std::vector<Configuration>{{0, 1}}, "step (q0,0) a");
    expect(r, step(inc, {0, 3}, "a").empty(), "step (q0,3) a");
    expect(r, step(inc, {0, 1}, "b") == std::vector<Configuration>{{1, 0}}, "step (q0,1) b");

    const auto mex = sample_m_ex();
    expect(r, accepts_lasso(mex, parse_lasso("abc(c)")), "M_ex rejects abc(c)");
    expect(r, !accepts_lasso(mex, parse_lasso("aabc(c)")), "M_ex accepts aabc(c)");
    const auto star = sigma_star_counter();
    for (const char* w : {"(a)", "ab(c)", "0(ab)"}) {
        expect(r, accepts_lasso(star, parse_lasso(w)), std::string("Sigma^w acceptor rejects ") + w);
    }
    expect(r, !is_empty(mex), "M_ex reported empty");
    OneCounterBA stuck{Alphabet(kAB)};
    stuck.initial = stuck.add_state("q", true);
    stuck.add_transition(0, "a", 1, 0, +1);
    expect(r, is_empty(stuck), "stuck automaton reported non-empty");
    expect(r, is_empty(sample_empty()), "sample_empty reported non-empty");

    const auto o1 = oracle_bounded_accept(mex, parse_lasso("abc(c)"), 4, 2);
    expect(r, o1.accepted && o1.conclusive, "oracle abc(c)");
    const auto o2 = oracle_bounded_accept(mex, parse_lasso("aabc(c)"), 4, 2);
    expect(r, !o2.accepted && o2.conclusive, "oracle aabc(c)");
    OneCounterBA pump{Alphabet(kAB)};
    pump.initial = pump.add_state("q", true);
    pump.add_transition(0, "a", 0, 0, +1);
    pump.add_transition(0, "a", 1, 0, +1);
    const auto o3 = oracle_bounded_accept(pump, parse_lasso("(a)"), 3, 2);
    expect(r, !o3.conclusive, "oracle conclusive despite overflow");
    expect(r, accepts_lasso(pump, parse_lasso("(a)")), "pumping run not found");
    return r;
}

CheckResult counter_oracle(const SuiteOptions& opts) {
    CheckResult r;
    const CounterOptions copts = counter_options(opts);
    for (const auto& [name, m] : shipped_counters()) {
        for (const auto& w : counter_corpus()) {
            const auto o = oracle_bounded_accept(m, w, 16, 2);
            if (!o.conclusive) {
                ++r.skipped;
                continue;
            }
            expect(r, accepts_lasso(m, w, copts) == o.accepted, name + " disagrees with the oracle on " + to_string(w));
        }
    }
    return r;
}

CheckResult counter_random_oracle(const SuiteOptions& opts) {
    CheckResult r;
    Rng rng(opts.seed ^ 0x5bd1e995u);
    const CounterOptions copts = counter_options(opts);
    const auto lassos = enumerate_lassos(kAB, 5);
    for (int k = 0; k < 150; ++k) {
        const OneCounterBA m = random_counter(rng);
        if (!validate(m)) continue;
        for (const auto& w : lassos) {
            const auto o = oracle_bounded_accept(m, w, 12, 2);
            if (!o.conclusive) {
                ++r.skipped;
                continue;
            }
            expect(r, accepts_lasso(m, w, copts) == o.accepted,
                   "disagreement on " + to_string(w) + " for\n" + serialize(m));
        }
    }
    return r;
}

namespace {

void check_counter_run(CheckResult& r, const OneCounterBA& m, const CounterRun& run, const std::string& name) {
    std::vector<RunStep> steps = run.prefix;
    steps.insert(steps.end(), run.cycle.begin(), run.cycle.end());
    bool ok = !run.cycle.empty() && run.cycle_delta >= 0 &&
              (run.prefix.empty() ? run.cycle.front().from : run.prefix.front().from) ==
                  Configuration{m.initial, 0};
    bool final_seen = false;
    for (std::size_t n = 0; ok && n < run.prefix.size() + 2 * run.cycle.size(); ++n) {
        const Configuration c = run.configuration_at(n);
        const Configuration next = run.configuration_at(n + 1);
        const auto& t = m.transitions.at(run.transition_at(n));
        const auto succ = step(m, c, t.letter);
        ok = t.from == c.state && t.to == next.state &&
             std::find(succ.begin(), succ.end(), next) != succ.end();
        if (n >= run.prefix.size() && m.is_final(t.to)) final_seen = true;
    }
    expect(r, ok && final_seen, name + ": witness run is not an accepting run");
}

}  // namespace

CheckResult counter_witness(const SuiteOptions& opts) {
    CheckResult r;
    const CounterOptions copts = counter_options(opts);
    std::vector<std::pair<std::string, OneCounterBA>> autos = shipped_counters();
    Rng rng(opts.seed ^ 0x9e3779b9u);
    for (int k = 0; k < 150; ++k) {
        OneCounterBA m = random_counter(rng);
        if (validate(m)) autos.emplace_back("random." + std::to_string(k), std::move(m));
    }
    const auto lassos = enumerate_lassos(kAB, 4);
    for (const auto& [name, m] : autos) {
        const auto run = find_accepting_run(m, copts);
        if (run) {
            check_counter_run(r, m, *run, name);
            const LassoWord w = run->word(m);
            expect(r, accepts_lasso(m, w, copts), name + ": witness word " + to_string(w) + " rejected");
            const auto o = oracle_bounded_accept(m, w, 32, 3);
            expect(r, o.accepted || !o.conclusive, name + ": oracle refutes witness " + to_string(w));
        } else {
            for (const auto& w : lassos) {
                if (!m.alphabet.contains_all(w.stem()) || !m.alphabet.contains_all(w.loop())) continue;
                expect(r, !accepts_lasso(m, w, copts), name + ": empty but accepts " + to_string(w));
            }
        }
        for (const auto& w : lassos) {
            if (!m.alphabet.contains_all(w.loop()) || !m.alphabet.contains_all(w.stem())) continue;
            if (const auto lr = find_accepting_run(m, w, copts)) {
                check_counter_run(r, m, *lr, name + " on " + to_string(w));
                expect(r, lr->word(m) == w, name + ": run on " + to_string(w) + " reads another word");
            }
        }
    }
    return r;
}

CheckResult counter_erasure(const SuiteOptions& opts) {
    CheckResult r;
    Rng rng(opts.seed ^ 0x27d4eb2fu);
    const CounterOptions copts = counter_options(opts);
    const auto lassos = enumerate_lassos(kAB, 4);
    for (int k = 0; k < 100; ++k) {
        const BuchiAutomaton a = random_buchi(rng, 4);
        const OneCounterBA m = counter_blind(rng, a);
        const BuchiAutomaton erased = erase_counter(m);
        for (const auto& w : lassos) {
            const bool expected = brute_buchi_accepts(a, w);
            expect(r, accepts_lasso(m, w, copts) == expected, "counter verdict differs on " + to_string(w));
            expect(r, accepts_lasso(erased, w) == expected, "erased automaton differs on " + to_string(w));
        }
    }
    return r;
}

// rational

CheckResult rational_examples() {
    CheckResult r;
    const Alphabet ab(kAB);
    TwoTapeBA chain(ab, ab);
    chain.initial = chain.add_state("q");
    chain.add_state("q'", true);
    chain.add_transition(0, {"a", "b"}, {}, 1);
    chain.add_transition(1, {}, {}, 0);
    const auto n = normalize(chain);
    expect(r, n.num_states() == 3 && n.auxiliary[2] && !n.final[2], "chain expansion states");
    expect(r, n.chains[0].size() == 2 && n.transitions[n.chains[0][0]].tape == Tape::First &&
                  n.transitions[n.chains[0][0]].to == 2 && n.transitions[n.chains[0][1]].from == 2,
           "chain expansion transitions");
    expect(r, n.chains[1].size() == 1 && n.transitions[n.chains[1][0]].tape == Tape::None,
           "silent transition");

    const auto id = sample_identity();
    expect(r, accepts_lasso_pair(id, {parse_lasso("(ab)"), parse_lasso("(ab)")}), "identity on ((ab),(ab))");
    expect(r, !accepts_lasso_pair(id, {parse_lasso("(ab)"), parse_lasso("(ba)")}), "identity on ((ab),(ba))");
    const auto silent = sample_silent();
    expect(r, !accepts_lasso_pair(silent, {parse_lasso("a(a)"), parse_lasso("b(b)")}),
           "silent final loop accepts");
    expect(r, is_empty_infinite(no_final(ab)), "no final state but non-empty");
    expect(r, !is_empty_infinite(id), "identity reported empty");
    expect(r, is_empty_infinite(silent), "silent final cycle reported non-empty");
    const auto u = union_of(id, no_final(ab));
    expect(r, accepts_lasso_pair(u, {parse_lasso("(ab)"), parse_lasso("(ab)")}), "union with empty relation");
    expect(r, u.states.name(u.initial) == "init" && !u.is_final(u.initial), "union initial state");
    expect_throws(r, [&] { union_of(id, identity_over(sample_sigma())); }, "union alphabet mismatch");
    expect_throws(r, [&] { accepts_lasso_pair(id, {parse_lasso("(c)"), parse_lasso("(a)")}); },
                  "pair alphabet mismatch");
    return r;
}

CheckResult rational_normalize(const SuiteOptions& opts) {
    CheckResult r;
    Rng rng(opts.seed ^ 0x85ebca6bu);
    for (const auto& [name, t] : shipped_two_tape()) {
        const auto n = normalize(t);
        const auto flat = n.to_two_tape();
        for (int k = 0; k < 500; ++k) {
            const LassoPair p = random_pair(rng, t);
            const bool macro = accepts_lasso_pair_macro(t, p, opts.node_budget);
            const bool micro = accepts_lasso_pair(n, p, opts.node_budget);
            const bool degen = accepts_lasso_pair_degeneralized(t, p);
            const bool again = accepts_lasso_pair_macro(flat, p, opts.node_budget);
            expect(r, macro == micro && micro == degen && degen == again,
                   [&] { return pair_text(name, p) + ": normalize changes the verdict"; });
        }
    }
    return r;
}

CheckResult rational_union(const SuiteOptions& opts) {
    CheckResult r;
    Rng rng(opts.seed ^ 0xc2b2ae35u);
    const auto shipped = shipped_two_tape();
    std::vector<NormalizedTwoTapeBA> normal;
    for (const auto& s : shipped) normal.push_back(normalize(s.second));
    for (std::size_t i = 0; i < shipped.size(); ++i) {
        const auto& a = shipped[i].second;
        const auto self = normalize(union_of(a, a));
        const auto with_empty = normalize(union_of(a, no_final(a.input_alphabet)));
        for (std::size_t j = i + 1; j < shipped.size(); ++j) {
            const auto& b = shipped[j].second;
            if (!a.input_alphabet.same_letters(b.input_alphabet)) continue;
            const auto u = normalize(union_of(a, b));
            for (int k = 0; k < 500; ++k) {
                const LassoPair p = random_pair(rng, a);
                const bool va = accepts_lasso_pair(normal[i], p, opts.node_budget);
                const bool vb = accepts_lasso_pair(normal[j], p, opts.node_budget);
                expect(r, accepts_lasso_pair(u, p, opts.node_budget) == (va || vb),
                       pair_text(shipped[i].first + " | " + shipped[j].first, p) + ": union is not the OR");
            }
        }
        for (int k = 0; k < 100; ++k) {
            const LassoPair p = random_pair(rng, a);
            const bool v = accepts_lasso_pair(normal[i], p, opts.node_budget);
            expect(r, accepts_lasso_pair(self, p, opts.node_budget) == v, pair_text(shipped[i].first, p) + ": T | T differs");
            expect(r, accepts_lasso_pair(with_empty, p, opts.node_budget) == v,
                   pair_text(shipped[i].first, p) + ": T | empty differs");
        }
    }
    return r;
}

CheckResult rational_both_infinite() {
    CheckResult r;
    Rng rng(7);
    const Alphabet ab(kAB);
    const std::vector<std::pair<std::string, TwoTapeBA>> lame = {
        {"silent", sample_silent()}, {"tape1-only", one_tape_loop(ab, true)}, {"tape2-only", one_tape_loop(ab, false)}};
    for (const auto& [name, t] : lame) {
        expect(r, is_empty_infinite(t), name + " reported non-empty");
        const auto n = normalize(t);
        for (int k = 0; k < 300; ++k) {
            const LassoPair p{random_lasso(rng, kAB, 3, 3), random_lasso(rng, kAB, 3, 3)};
            expect(r, !accepts_lasso_pair(n, p) && !accepts_lasso_pair_macro(t, p),
                   pair_text(name, p) + " accepted without both tapes progressing");
        }
    }
    return r;
}

CheckResult rational_witness() {
    CheckResult r;
    Rng rng(11);
    std::vector<std::pair<std::string, TwoTapeBA>> autos = shipped_two_tape();
    autos.emplace_back("r2", build_r2(sample_sigma()));
    for (int k = 0; k < 300; ++k) autos.emplace_back("random." + std::to_string(k), random_two_tape(rng));
    for (const auto& [name, t] : autos) {
        const auto w = find_infinite_pair(t);
        if (!w) {
            ++r.cases;
            continue;
        }
        expect(r, w->first.is_canonical() && w->second.is_canonical(), name + ": witness not canonical");
        expect(r, accepts_lasso_pair(t, *w) && accepts_lasso_pair_macro(t, *w),
               pair_text(name, *w) + ": witness rejected");
    }
    return r;
}

CheckResult rational_canonical_invariance(const SuiteOptions& opts) {
    CheckResult r;
    Rng rng(opts.seed ^ 0x165667b1u);
    for (const auto& [name, t] : shipped_two_tape()) {
        const auto n = normalize(t);
        for (int k = 0; k < 100; ++k) {
            const LassoPair p = random_pair(rng, t);
            const bool v = accepts_lasso_pair(n, p, opts.node_budget);
            for (const auto& x : variants(p.first)) {
                expect(r, accepts_lasso_pair(n, {x, p.second}, opts.node_budget) == v,
                       pair_text(name, p) + ": first component form matters");
            }
            for (const auto& y : variants(p.second)) {
                expect(r, accepts_lasso_pair(n, {p.first, y}, opts.node_budget) == v,
                       pair_text(name, p) + ": second component form matters");
            }
        }
    }
    return r;
}

CheckResult rational_run_dag() {
    CheckResult r;
    const Alphabet sigma = sample_sigma();
    const Alphabet gamma = Alphabet::with_marker(sigma);
    const auto id = normalize(identity_over(gamma));
    const BlockWord al = alpha_word(sigma);
    const auto d0 = prefix_run_dag(id, al, al, 0);
    expect(r, d0.nodes.size() == 1 && d0.edges.empty() && d0.nodes[0].state == id.initial, "depth 0 DAG");
    const auto d3 = prefix_run_dag(id, al, al, 3);
    std::size_t paths = 0;
    d3.for_each_maximal_path([&](const std::vector<std::size_t>& p) {
        ++paths;
        const std::size_t end = p.empty() ? 0 : d3.edges[p.back()].to;
        expect(r, d3.fully_consumed(end) && final_visits(id, d3, p) == 9 &&
                      d3.nodes[end].max_final_visits == 9,
               "identity path on alpha prefixes");
    });
    expect(r, paths == 1, "identity DAG has " + std::to_string(paths) + " maximal paths");
    const auto again = prefix_run_dag(id, al, al, 3);
    bool same = again.nodes.size() == d3.nodes.size() && again.edges.size() == d3.edges.size();
    for (std::size_t k = 0; same && k < d3.nodes.size(); ++k) {
        same = again.nodes[k].state == d3.nodes[k].state && again.nodes[k].pos1 == d3.nodes[k].pos1 &&
               again.nodes[k].pos2 == d3.nodes[k].pos2;
    }
    expect(r, same, "DAG node order is not reproducible");
    TwoTapeBA loop(gamma, gamma);
    loop.initial = loop.add_state("q", true);
    loop.add_transition(0, {}, {}, 0);
    const auto nl = normalize(loop);
    expect_throws(r, [&] { prefix_run_dag(nl, al, al, 1); }, "silent cycle");
    expect_throws(r, [&] { prefix_run_dag(id, al, al, 6, 5); }, "node budget");
    return r;
}

// reduction

CheckResult reduction_examples() {
    CheckResult r;
    const Alphabet sigma = sample_sigma();
    const auto a0 = sample_a0();
    const auto mex = sample_m_ex();
    const auto r1 = build_r1(a0);
    expect(r, accepts_lasso_pair(r1, {parse_lasso("(A0a)"), parse_lasso("(A)")}), "R1(A0) on ((A0a),(A))");
    expect(r, !accepts_lasso_pair(r1, {parse_lasso("(A0a)"), parse_lasso("(A0)")}), "R1(A0) on ((A0a),(A0))");
    expect(r, !accepts_lasso_pair(build_r1(mex), {parse_lasso("(A0a)"), parse_lasso("(A)")}),
           "R1(M_ex) on ((A0a),(A))");
    expect_throws(r, [] { build_r1(OneCounterBA(Alphabet{"a", "b"})); }, "R1 without 0");
    expect_throws(r, [] { build_c1(Alphabet{"a"}); }, "C1 without 0");

    const auto c3 = build_c3(sigma);
    expect(r, accepts_lasso_pair(c3, {parse_lasso("AaA00A(c)"), parse_lasso("AbA000A(c)")}), "C3 fires");
    expect(r, !accepts_lasso_pair(c3, {parse_lasso("AaA00A(c)"), parse_lasso("AbA0A(c)")}), "C3 does not fire");
    const auto c2 = build_c2(sigma);
    expect(r, accepts_lasso_pair(c2, {parse_lasso("(A0a)"), parse_lasso("A0A0bA(0A)")}), "C2 on a letter in sigma_2");
    const auto r2 = build_r2(sigma);
    expect(r, accepts_lasso_pair(r2, {parse_lasso("A0aA00b(b)"), parse_lasso("A0A00(0)")}), "R2 on a deviation");
    expect(r, accepts_lasso_pair(build_c1(sigma), {parse_lasso("aa(a)"), parse_lasso("(A0)")}), "C1 on aa...");

    const auto bundle = build_r(mex);
    expect(r, !is_empty_infinite(bundle.t_r), "t_r reported empty");
    expect(r, bundle.gamma == Alphabet::with_marker(sigma), "bundle alphabet");

    const auto [g1, g2] = g_pair(parse_lasso("(ab)"), sigma);
    expect(r, to_string(block_prefix(g1, 2)) == "A0aA00b" && to_string(block_prefix(g2, 2)) == "A0A00",
           "g((ab)) prefixes");
    expect(r, block_prefix(g1, 0).empty() && block_prefix(g2, 0).empty(), "g depth 0");

    const auto x0 = parse_lasso("(a)");
    const auto b0 = witness_run(a0, x0, *find_accepting_run(a0, x0), 3);
    bool shape = b0.blocks.size() == 3;
    for (std::size_t i = 1; shape && i <= 3; ++i) {
        const Block& b = b0.blocks[i - 1];
        shape = b.u.size() == i && b.v.empty() && b.w.empty() && b.z.size() == i;
    }
    expect(r, shape && validate_block_run(a0, x0, b0).empty(), "witness_run for A0");
    const auto x1 = parse_lasso("abc(c)");
    const auto b1 = witness_run(mex, x1, *find_accepting_run(mex, x1), 6);
    expect(r, b1.blocks[0].v.empty() && b1.blocks[1].v == zeros(1) && b1.blocks[2].v.empty() &&
                  b1.blocks[3].v.empty() && b1.blocks[0].w == zeros(1),
           "witness_run counters for M_ex");
    expect(r, validate_block_run(mex, x1, b1).empty(), "witness_run for M_ex does not validate");
    expect(r, witness_run(mex, x1, *find_accepting_run(mex, x1), 0).blocks.empty(), "depth 0 witness");
    return r;
}

CheckResult reduction_r2_universality(const SuiteOptions& opts) {
    CheckResult r;
    const auto n = normalize(build_r2(sample_sigma()));
    const auto& corpus = gamma_corpus();
    for (const auto& x : corpus) {
        for (const auto& y : corpus) {
            expect(r, accepts_lasso_pair(n, {x, y}, opts.node_budget),
                   [&] { return "R2 rejects " + to_string(LassoPair{x, y}); });
        }
    }
    return r;
}

CheckResult reduction_section_sweep(const SuiteOptions& opts) {
    CheckResult r;
    const auto n = normalize(build_r(sample_m_ex()).t_r);
    const auto& corpus = gamma_corpus();
    for (const auto& x : corpus) {
        for (const auto& y : corpus) {
            expect(r, accepts_lasso_pair(n, {x, y}, opts.node_budget),
                   [&] { return "t_r rejects " + to_string(LassoPair{x, y}); });
        }
    }
    return r;
}

CheckResult reduction_r1_completeness(const SuiteOptions& opts) {
    CheckResult r;
    const CounterOptions copts = counter_options(opts);
    const Alphabet sigma = sample_sigma();
    for (const auto& [name, a] : shipped_counters()) {
        const auto r1 = build_r1(a);
        const auto n = normalize(r1);
        for (const auto& x : counter_corpus()) {
            const auto run = find_accepting_run(a, x, copts);
            if (!run) continue;
            const auto [g1, g2] = g_pair(x, sigma);
            std::size_t previous = 0;
            for (std::size_t depth = 0; depth <= opts.depth; ++depth) {
                const std::string where = name + " x=" + to_string(x) + " depth " + std::to_string(depth);
                const BlockRun br = witness_run(a, x, *run, depth);
                const auto errors = validate_block_run(a, x, br);
                expect(r, errors.empty(), where + ": " + (errors.empty() ? "" : errors.front()));
                const auto dag = prefix_run_dag(n, g1, g2, depth, opts.node_budget);
                const auto path = embed_macro_run(n, dag, r1_macro_run(r1, a, br));
                expect(r, path.has_value(), where + ": witness does not embed in the run DAG");
                if (!path) continue;
                const std::size_t visits = final_visits(n, dag, *path);
                expect(r, visits >= previous, where + ": final visits decrease");
                previous = visits;
                if (depth == opts.depth) {
                    expect(r, 4 * visits >= depth,
                           where + ": only " + std::to_string(visits) + " final visits");
                }
            }
        }
    }
    return r;
}

CheckResult reduction_r1_soundness(const SuiteOptions& opts) {
    CheckResult r;
    const Alphabet sigma = sample_sigma();
    for (const auto& [name, a] : shipped_counters()) {
        const auto r1 = build_r1(a);
        const auto n = normalize(r1);
        for (const auto& x : counter_corpus()) {
            const auto [g1, g2] = g_pair(x, sigma);
            for (std::size_t depth = 0; depth <= opts.depth; ++depth) {
                const auto dag = prefix_run_dag(n, g1, g2, depth, opts.node_budget);
                dag.for_each_maximal_path(
                    [&](const std::vector<std::size_t>& path) {
                        const auto report = check_r1_path(a, &x, r1, n, dag, path);
                        expect(r, report.violations.empty(), [&] {
                            return name + " x=" + to_string(x) + " depth " + std::to_string(depth) + ": " +
                                   report.violations.front();
                        });
                    },
                    opts.node_budget);
            }
        }
    }
    return r;
}

CheckResult reduction_r1_lasso_shape(const SuiteOptions& opts) {
    CheckResult r;
    const auto corpus = enumerate_lassos(Alphabet::with_marker(sample_sigma()).letters(), 3);
    for (const auto& [name, a] : shipped_counters()) {
        const auto r1 = build_r1(a);
        const auto n = normalize(r1);
        for (const auto& x : corpus) {
            for (const auto& y : corpus) {
                const LassoPair p{x, y};
                const auto run = find_lasso_pair_run(n, p, opts.node_budget);
                ++r.cases;
                if (!run) continue;
                std::vector<std::size_t> micro = run->stem;
                for (int k = 0; k < 4; ++k) micro.insert(micro.end(), run->cycle.begin(), run->cycle.end());
                const auto replayed = replay(n, micro);
                if (!replayed) {
                    r.fail(pair_text(name, p) + ": run does not replay");
                    continue;
                }
                const auto report = check_r1_path(a, nullptr, r1, n, replayed->dag, replayed->path);
                expect(r, report.violations.empty() && report.complete_blocks >= 1,
                       pair_text(name, p) + ": accepted pair " +
                           (report.violations.empty() ? "has no block" : report.violations.front()));
                const bool final_in_cycle = std::any_of(run->cycle.begin(), run->cycle.end(), [&](std::size_t m) {
                    return n.final[n.transitions[m].to];
                });
                expect(r, final_in_cycle, pair_text(name, p) + ": cycle has no final state");
            }
        }
    }
    return r;
}

CheckResult reduction_membership_transfer(const SuiteOptions& opts) {
    CheckResult r;
    const CounterOptions copts = counter_options(opts);
    const Alphabet sigma = sample_sigma();
    for (const auto& [name, a] : shipped_counters()) {
        const auto r1 = build_r1(a);
        const auto n = normalize(r1);
        for (const auto& x : counter_corpus()) {
            const bool member = accepts_lasso(a, x, copts);
            const auto run = find_accepting_run(a, x, copts);
            expect(r, member == run.has_value(), name + " x=" + to_string(x) + ": verdict and run differ");
            if (!run) continue;
            const BlockRun br = witness_run(a, x, *run, opts.depth);
            expect(r, validate_block_run(a, x, br).empty(), name + " x=" + to_string(x) + ": witness invalid");
            const auto [g1, g2] = g_pair(x, sigma);
            const auto dag = prefix_run_dag(n, g1, g2, opts.depth, opts.node_budget);
            std::size_t best = 0;
            dag.for_each_maximal_path(
                [&](const std::vector<std::size_t>& p) {
                    best = std::max(best, check_r1_path(a, &x, r1, n, dag, p).complete_blocks);
                },
                opts.node_budget);
            expect(r, best == opts.depth, name + " x=" + to_string(x) + ": no DAG path completes every block");
        }
    }
    return r;
}

CheckResult format_round_trip() {
    CheckResult r;
    std::vector<AnyAutomaton> autos;
    autos.emplace_back(sample_inf_a());
    for (const auto& [name, m] : shipped_counters()) autos.emplace_back(m);
    for (const auto& [name, t] : shipped_two_tape()) autos.emplace_back(t);
    autos.emplace_back(build_r(sample_m_ex()).t_r);
    for (const auto& a : autos) {
        const std::string text = serialize(a);
        const AnyAutomaton back = parse_automaton(text);
        expect(r, serialize(back) == text && back.index() == a.index(), "round trip changes:\n" + text);
        if (const auto* t = std::get_if<TwoTapeBA>(&a)) {
            expect(r, same_two_tape(*t, std::get<TwoTapeBA>(back)), "2-tape round trip differs");
        }
    }
    for (const char* bad : {"alphabet: a\n", "# kind: buchi\nalphabet: a\nstates: q\ninitial: p\n",
                            "# kind: counter\nalphabet: a\nstates: q\ninitial: q\ntrans: q a 0 q 2\n",
                            "# kind: 2tape\nalphabet1: a\nalphabet2: a\nstates: q\ninitial: q\ntrans: q \"b\" \"\" q\n"}) {
        expect_throws(r, [&] { parse_automaton(bad); }, std::string("accepted malformed text: ") + bad);
    }
    return r;
}

std::vector<NamedCheck> suite_checks() {
    using O = const SuiteOptions&;
    return {
        {"words.examples", [](O) { return words_examples(); }},
        {"words.lasso_normalize", [](O) { return words_lasso_normalize(); }},
        {"words.letter_at", [](O o) { return words_letter_at(o.seed); }},
        {"words.h_injectivity", [](O) { return words_h_injectivity(); }},
        {"words.h_continuity", [](O) { return words_h_continuity(); }},
        {"words.not_block_word", [](O) { return words_not_block_word(); }},
        {"buchi.examples", [](O) { return buchi_examples(); }},
        {"buchi.emptiness", [](O o) { return buchi_emptiness(o.seed); }},
        {"buchi.product", [](O o) { return buchi_product(o.seed); }},
        {"buchi.canonical_invariance", [](O o) { return buchi_canonical_invariance(o.seed); }},
        {"counter.examples", [](O) { return counter_examples(); }},
        {"counter.oracle", [](O o) { return counter_oracle(o); }},
        {"counter.random_oracle", [](O o) { return counter_random_oracle(o); }},
        {"counter.witness", [](O o) { return counter_witness(o); }},
        {"counter.erasure", [](O o) { return counter_erasure(o); }},
        {"rational.examples", [](O) { return rational_examples(); }},
        {"rational.normalize", [](O o) { return rational_normalize(o); }},
        {"rational.union", [](O o) { return rational_union(o); }},
        {"rational.both_infinite", [](O) { return rational_both_infinite(); }},
        {"rational.witness", [](O) { return rational_witness(); }},
        {"rational.canonical_invariance", [](O o) { return rational_canonical_invariance(o); }},
        {"rational.run_dag", [](O) { return rational_run_dag(); }},
        {"reduction.examples", [](O) { return reduction_examples(); }},
        {"reduction.r2_universality", [](O o) { return reduction_r2_universality(o); }},
        {"reduction.section_sweep", [](O o) { return reduction_section_sweep(o); }},
        {"reduction.r1_completeness", [](O o) { return reduction_r1_completeness(o); }},
        {"reduction.r1_soundness", [](O o) { return reduction_r1_soundness(o); }},
        {"reduction.r1_lasso_shape", [](O o) { return reduction_r1_lasso_shape(o); }},
        {"reduction.membership_transfer", [](O o) { return reduction_membership_transfer(o); }},
        {"cli.round_trip", [](O) { return format_round_trip(); }},
    };
}

CheckResult run_check(const NamedCheck& check, const SuiteOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = check.run(opts);
    } catch (const BudgetExceeded& e) {
        r.budget_exhausted = true;
        r.detail = e.what();
    } catch (const std::exception& e) {
        r.fail(std::string("error: ") + e.what());
    }
    r.name = check.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CheckResult> run_suite(const SuiteOptions& opts) {
    std::vector<CheckResult> out;
    for (const auto& c : suite_checks()) out.push_back(run_check(c, opts));
    return out;
}

namespace {

std::string one_line(const std::string& s) {
    std::string out;
    for (char c : s) out += (c == '\n') ? ' ' : c;
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

}  // namespace

std::string render_report(const std::vector<CheckResult>& results, bool with_timing) {
    std::ostringstream out;
    std::size_t passed = 0, failed = 0, budget = 0;
    for (const auto& r : results) {
        const char* verdict = r.budget_exhausted ? "budget" : r.passed() ? "pass" : "fail";
        out << "check " << r.name << " verdict=" << verdict << " cases=" << r.cases
            << " failures=" << r.failures;
        if (r.skipped) out << " inconclusive=" << r.skipped;
        if (with_timing) {
            out.setf(std::ios::fixed);
            out.precision(3);
            out << " seconds=" << r.seconds;
        }
        if (!r.detail.empty()) out << " detail=\"" << one_line(r.detail) << "\"";
        out << "\n";
        if (r.budget_exhausted) ++budget;
        else if (r.passed()) ++passed;
        else ++failed;
    }
    out << "summary checks=" << results.size() << " passed=" << passed << " failed=" << failed
        << " budget=" << budget << "\n";
    return out.str();
}

}  // namespace omega::checks
