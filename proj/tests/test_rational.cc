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

#include <doctest.h>

#include "omega/checks.hh"
#include "omega/error.hh"
#include "omega/rational.hh"

using namespace omega;

namespace {

LassoPair pair(const char* x, const char* y) { return {parse_lasso(x), parse_lasso(y)}; }

}  // namespace

TEST_CASE("normalization splits letters into a chain") {
    TwoTapeBA t(Alphabet{"a", "b"}, Alphabet{"a", "b"});
    t.initial = t.add_state("q");
    t.add_state("q'", true);
    t.add_transition(0, {"a", "b"}, {}, 1);
    const auto n = normalize(t);
    CHECK(n.num_states() == 3);
    CHECK(n.auxiliary[2]);
    CHECK_FALSE(n.final[2]);
    REQUIRE(n.chains[0].size() == 2);
    CHECK(n.transitions[n.chains[0][0]].tape == Tape::First);
    CHECK(n.transitions[n.chains[0][1]].origin == 0);
}

TEST_CASE("identity relation") {
    const auto id = checks::sample_identity();
    CHECK(accepts_lasso_pair(id, pair("(ab)", "(ab)")));
    CHECK(accepts_lasso_pair(id, pair("a(b)", "a(b)")));
    CHECK_FALSE(accepts_lasso_pair(id, pair("(ab)", "(ba)")));
    CHECK_FALSE(is_empty_infinite(id));
}

TEST_CASE("both tapes must be read infinitely often") {
    const auto silent = checks::sample_silent();
    CHECK_FALSE(accepts_lasso_pair(silent, pair("a(a)", "b(b)")));
    CHECK(is_empty_infinite(silent));
    CHECK(checks::rational_both_infinite().passed());
}

TEST_CASE("union") {
    const auto id = checks::sample_identity();
    TwoTapeBA swap(Alphabet{"a", "b"}, Alphabet{"a", "b"});
    swap.initial = swap.add_state("q", true);
    swap.add_transition(0, {"a"}, {"b"}, 0);
    swap.add_transition(0, {"b"}, {"a"}, 0);
    const auto u = union_of(id, swap);
    CHECK(u.states.name(u.initial) == "init");
    CHECK(accepts_lasso_pair(u, pair("(ab)", "(ab)")));
    CHECK(accepts_lasso_pair(u, pair("(ab)", "(ba)")));
    CHECK_FALSE(accepts_lasso_pair(u, pair("(a)", "(ab)")));
    TwoTapeBA small(Alphabet{"a"}, Alphabet{"a"});
    small.initial = small.add_state("q", true);
    CHECK_THROWS_AS(union_of(id, small), AlphabetMismatch);
}

TEST_CASE("three routes agree on a delayed copy") {
    // Tape 2 lags two letters behind tape 1.
    TwoTapeBA t(Alphabet{"a", "b"}, Alphabet{"a", "b"});
    t.initial = t.add_state("s");
    t.add_state("r", true);
    t.add_transition(0, {"a", "b"}, {}, 1);
    t.add_transition(1, {"a"}, {"a"}, 1);
    t.add_transition(1, {"b"}, {"b"}, 1);
    for (const auto& p : {pair("ab(a)", "(a)"), pair("(ab)", "(ab)"), pair("ab(ba)", "(ba)")}) {
        const bool v = accepts_lasso_pair(t, p);
        CHECK(accepts_lasso_pair_macro(t, p) == v);
        CHECK(accepts_lasso_pair_degeneralized(t, p) == v);
    }
    CHECK(accepts_lasso_pair(t, pair("ab(a)", "(a)")));
    CHECK_FALSE(accepts_lasso_pair(t, pair("ab(a)", "(b)")));
}

TEST_CASE("run DAG") {
    const auto n = normalize(checks::sample_identity());
    const auto dag = run_dag(n, parse_word("abab"), parse_word("aba"));
    // Each letter pair takes two micro steps through an auxiliary state.
    REQUIRE(dag.nodes.size() == 8);
    CHECK(dag.is_maximal(7));
    CHECK(dag.fully_consumed(7));
    CHECK(dag.nodes[7].pos1 == 4);
    CHECK(dag.nodes[7].max_final_visits == 3);
    CHECK(checks::rational_run_dag().passed());
}

TEST_CASE("rational properties") {
    CHECK(checks::rational_examples().passed());
    CHECK(checks::rational_witness().passed());
}
