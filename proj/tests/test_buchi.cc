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

#include "omega/buchi.hh"
#include "omega/checks.hh"
#include "omega/error.hh"

using namespace omega;

namespace {

BuchiAutomaton one_state(bool final, std::initializer_list<const char*> letters) {
    BuchiAutomaton a{Alphabet{"a", "b"}};
    a.initial = a.add_state("q", final);
    for (const char* l : letters) a.add_transition(0, l, 0);
    return a;
}

}  // namespace

TEST_CASE("lasso automaton accepts exactly its word") {
    const auto a = lasso_automaton(parse_lasso("a(bc)"));
    CHECK(a.num_states() == 3);
    CHECK(a.transitions.size() == 3);
    CHECK(accepts_lasso(a, parse_lasso("a(bc)")));
    CHECK(accepts_lasso(a, parse_lasso("abcb(cb)")));
    CHECK_FALSE(accepts_lasso(a, parse_lasso("(abc)")));
}

TEST_CASE("infinitely many a") {
    const auto a = checks::sample_inf_a();
    CHECK(accepts_lasso(a, parse_lasso("(ab)")));
    CHECK(accepts_lasso(a, parse_lasso("bbb(a)")));
    CHECK_FALSE(accepts_lasso(a, parse_lasso("a(b)")));
    CHECK_FALSE(is_empty(a));
    const auto w = find_accepted_lasso(a);
    REQUIRE(w.has_value());
    CHECK(accepts_lasso(a, *w));
}

TEST_CASE("emptiness edge cases") {
    CHECK(is_empty(one_state(false, {"a", "b"})));
    CHECK_FALSE(is_empty(one_state(true, {"a"})));
    CHECK(is_empty(one_state(true, {})));
    BuchiAutomaton a{Alphabet{"a"}};
    a.initial = a.add_state("q0");
    a.add_state("q1", true);
    a.add_transition(1, "a", 1);
    CHECK(is_empty(a));
    CHECK(trim(a).num_states() == 1);
}

TEST_CASE("product and degeneralization") {
    const auto all = one_state(true, {"a", "b"});
    const auto none = one_state(false, {"a", "b"});
    CHECK(is_empty(degeneralize(product(all, none))));
    const auto g = product(all, checks::sample_inf_a());
    CHECK(g.num_sets() == 2);
    const auto d = degeneralize(g);
    CHECK(d.num_states() <= g.num_states() * (g.num_sets() + 1));
    CHECK(accepts_lasso(d, parse_lasso("(a)")));
    CHECK_FALSE(accepts_lasso(d, parse_lasso("(b)")));
    CHECK_THROWS_AS(product(all, lasso_automaton(parse_lasso("(c)"))), AlphabetMismatch);
}

TEST_CASE("buchi properties") {
    CHECK(checks::buchi_examples().passed());
    CHECK(checks::buchi_canonical_invariance(3).passed());
}
