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
#include "omega/counter.hh"
#include "omega/error.hh"

using namespace omega;

TEST_CASE("zero tests gate decrements") {
    OneCounterBA bad{Alphabet{"a"}};
    bad.initial = bad.add_state("q", true);
    bad.add_transition(0, "a", 0, 0, -1);
    CHECK_FALSE(validate(bad));
    CHECK(validation_errors(bad).size() == 1);

    OneCounterBA m{Alphabet{"a", "b"}};
    m.initial = m.add_state("q0");
    m.add_state("q1");
    m.add_transition(0, "a", 0, 0, +1);
    m.add_transition(0, "b", 1, 1, -1);
    CHECK(validate(m));
    CHECK(step(m, {0, 0}, "a") == std::vector<Configuration>{{0, 1}});
    CHECK(step(m, {0, 3}, "a").empty());
    CHECK(step(m, {0, 1}, "b") == std::vector<Configuration>{{1, 0}});
    CHECK(step(m, {0, 0}, "b").empty());
}

TEST_CASE("balanced prefix example") {
    const auto m = sample_m_ex();
    CHECK(accepts_lasso(m, parse_lasso("abc(c)")));
    CHECK(accepts_lasso(m, parse_lasso("aabbc(c)")));
    CHECK(accepts_lasso(m, parse_lasso("(c)")));
    CHECK_FALSE(accepts_lasso(m, parse_lasso("aabc(c)")));
    CHECK_FALSE(accepts_lasso(m, parse_lasso("(ab)")));
    CHECK_FALSE(accepts_lasso(m, parse_lasso("b(c)")));
}

TEST_CASE("emptiness of the samples") {
    CHECK_FALSE(is_empty(sample_a0()));
    CHECK_FALSE(is_empty(sample_m_ex()));
    CHECK(is_empty(sample_empty()));
    CHECK(default_counter_cap(2) == 8);
}

TEST_CASE("accepting runs are real runs") {
    const auto m = sample_m_ex();
    const auto run = find_accepting_run(m, parse_lasso("aabbc(c)"));
    REQUIRE(run.has_value());
    CHECK(run->word(m) == parse_lasso("aabb(c)"));
    CHECK(run->configuration_at(0) == Configuration{m.initial, 0});
    CHECK(run->configuration_at(2).counter == 2);
    CHECK(run->cycle_delta == 0);
}

TEST_CASE("unbounded counter on a pumping loop") {
    OneCounterBA m{Alphabet{"a"}};
    m.initial = m.add_state("q", true);
    m.add_transition(0, "a", 0, 0, +1);
    m.add_transition(0, "a", 1, 0, +1);
    CHECK(accepts_lasso(m, parse_lasso("(a)")));
    CHECK_FALSE(oracle_bounded_accept(m, parse_lasso("(a)"), 5, 2).conclusive);
    const auto run = find_accepting_run(m);
    REQUIRE(run.has_value());
    CHECK(run->cycle_delta > 0);
}

TEST_CASE("budget exhaustion is reported") {
    CounterOptions opts;
    opts.node_budget = 2;
    CHECK_THROWS_AS(accepts_lasso(sample_m_ex(), parse_lasso("aabbc(c)"), opts), BudgetExceeded);
}

TEST_CASE("counter properties") {
    checks::SuiteOptions opts;
    CHECK(checks::counter_examples().passed());
    CHECK(checks::counter_erasure(opts).passed());
}
