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

#include <functional>
#include <string>

#include "omega/checks.hh"
#include "omega/error.hh"
#include "omega/reduction.hh"

using namespace omega;

namespace {

LassoPair pair(const char* x, const char* y) { return {parse_lasso(x), parse_lasso(y)}; }

/// Violations over every maximal path of r1 on g(x) for each x of size <= 4.
std::size_t violations(const OneCounterBA& a, const TwoTapeBA& r1, std::size_t depth) {
    const auto n = normalize(r1);
    std::size_t count = 0;
    for (const auto& x : enumerate_lassos({"a", "b", "c"}, 4)) {
        const auto [g1, g2] = g_pair(x, sample_sigma());
        const auto dag = prefix_run_dag(n, g1, g2, depth);
        dag.for_each_maximal_path([&](const std::vector<std::size_t>& p) {
            count += check_r1_path(a, &x, r1, n, dag, p).violations.empty() ? 0 : 1;
        });
    }
    return count;
}

/// r1 with the transitions matching `pick` replaced by `edit`.
TwoTapeBA mutate(const TwoTapeBA& r1, const std::function<bool(const TwoTapeTransition&)>& pick,
                 const std::function<void(TwoTapeTransition&)>& edit) {
    TwoTapeBA out(r1.input_alphabet, r1.output_alphabet);
    for (State q = 0; q < r1.num_states(); ++q) out.add_state(r1.states.name(q), r1.is_final(q));
    out.initial = r1.initial;
    for (auto t : r1.transitions) {
        if (pick(t)) edit(t);
        out.add_transition(t.from, t.input, t.output, t.to);
    }
    return out;
}

bool name_starts(const TwoTapeBA& t, State q, const std::string& prefix) {
    return t.states.name(q).rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("R1 state layout") {
    const auto r1 = build_r1(sample_m_ex());
    CHECK(r1.num_states() == 2 + 3 * 2 + 2);
    CHECK(r1.states.name(r1.initial) == "init");
    CHECK(r1.is_final(*r1.states.find("z:qf")));
    CHECK_FALSE(r1.is_final(*r1.states.find("z:q0")));
    CHECK(r1.input_alphabet == Alphabet::with_marker(sample_sigma()));
}

TEST_CASE("R1 membership on the block pair") {
    CHECK(accepts_lasso_pair(build_r1(sample_a0()), pair("(A0a)", "(A)")));
    CHECK_FALSE(accepts_lasso_pair(build_r1(sample_m_ex()), pair("(A0a)", "(A)")));
    CHECK_FALSE(accepts_lasso_pair(build_r1(sample_a0()), pair("(A0a)", "(A0)")));
}

TEST_CASE("clause automata fire on their deviations") {
    const Alphabet sigma = sample_sigma();
    CHECK(accepts_lasso_pair(build_c1(sigma), pair("aa(a)", "(A0)")));
    CHECK(accepts_lasso_pair(build_c2(sigma), pair("(A0a)", "A0A0bA(0A)")));
    CHECK(accepts_lasso_pair(build_c3(sigma), pair("AaA00A(c)", "AbA000A(c)")));
    CHECK_FALSE(accepts_lasso_pair(build_c3(sigma), pair("AaA00A(c)", "AbA0A(c)")));
    CHECK(accepts_lasso_pair(build_r2(sigma), pair("A0aA00b(b)", "A0A00(0)")));
}

TEST_CASE("bundle") {
    const auto b = build_r(sample_m_ex());
    CHECK(b.gamma == Alphabet::with_marker(sample_sigma()));
    CHECK(accepts_lasso_pair(b.t_r, pair("(A)", "(A)")));
    CHECK_FALSE(is_empty_infinite(b.t_r));
    CHECK_THROWS_AS(build_r1(OneCounterBA(Alphabet{"a"})), InvalidArgument);
}

TEST_CASE("witness blocks follow the counter") {
    const auto m = sample_m_ex();
    const auto x = parse_lasso("abc(c)");
    const auto run = find_accepting_run(m, x);
    REQUIRE(run.has_value());
    const BlockRun br = witness_run(m, x, *run, 5);
    REQUIRE(br.blocks.size() == 5);
    CHECK(br.blocks[0].v.empty());
    CHECK(br.blocks[0].w.size() == 1);
    CHECK(br.blocks[1].v.size() == 1);
    CHECK(br.blocks[1].w.empty());
    CHECK(br.blocks[2].x == "c");
    CHECK(validate_block_run(m, x, br).empty());

    BlockRun broken = br;
    broken.blocks[1].u.push_back(kZero);
    CHECK_FALSE(validate_block_run(m, x, broken).empty());
}

TEST_CASE("depth 12 run DAG holds the witness for abc(c)") {
    const auto m = sample_m_ex();
    const auto x = parse_lasso("abc(c)");
    const auto r1 = build_r1(m);
    const auto n = normalize(r1);
    const auto [g1, g2] = g_pair(x, sample_sigma());
    const auto dag = prefix_run_dag(n, g1, g2, 12);

    const BlockRun br = witness_run(m, x, *find_accepting_run(m, x), 12);
    REQUIRE(validate_block_run(m, x, br).empty());
    const auto path = embed_macro_run(n, dag, r1_macro_run(r1, m, br));
    REQUIRE(path.has_value());
    CHECK(final_visits(n, dag, *path) >= 4);
    const auto report = check_r1_path(m, &x, r1, n, dag, *path);
    CHECK(report.violations.empty());
    CHECK(report.complete_blocks == 12);
    CHECK(report.configurations[1] == Configuration{0, 1});
}

TEST_CASE("soundness holds for the real gadget") {
    CHECK(violations(sample_m_ex(), build_r1(sample_m_ex()), 6) == 0);
    CHECK(violations(sample_a0(), build_r1(sample_a0()), 6) == 0);
}

TEST_CASE("soundness check detects a wrong source automaton") {
    OneCounterBA other = sample_m_ex();
    other.transitions[2].delta = 0;
    CHECK(violations(other, build_r1(sample_m_ex()), 6) > 0);
}

TEST_CASE("soundness check detects a counter loop that drops a tape") {
    const auto m = sample_m_ex();
    const auto r1 = build_r1(m);
    const auto broken = mutate(
        r1,
        [&](const TwoTapeTransition& t) { return t.from == t.to && name_starts(r1, t.from, "v:"); },
        [](TwoTapeTransition& t) { t.output.clear(); });
    CHECK(violations(m, broken, 6) > 0);
}

TEST_CASE("soundness check detects a skewed carry") {
    const auto m = sample_m_ex();
    const auto r1 = build_r1(m);
    const auto broken = mutate(
        r1,
        [&](const TwoTapeTransition& t) { return t.from == t.to && name_starts(r1, t.from, "y:"); },
        [](TwoTapeTransition& t) { t.input.push_back(kZero); });
    CHECK(violations(m, broken, 6) > 0);
}

TEST_CASE("reduction properties") {
    CHECK(checks::reduction_examples().passed());
}
