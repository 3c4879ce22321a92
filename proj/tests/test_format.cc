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

#include <string>

#include "omega/checks.hh"
#include "omega/error.hh"
#include "omega/format.hh"

using namespace omega;

#ifndef OMEGA_DATA_DIR
#error "OMEGA_DATA_DIR must point at the shipped data files"
#endif

namespace {

std::string data(const char* name) { return std::string(OMEGA_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("shipped files match the built-in samples") {
    CHECK(serialize(load_automaton(data("a0.ctr"))) == serialize(sample_a0()));
    CHECK(serialize(load_automaton(data("m_ex.ctr"))) == serialize(sample_m_ex()));
    CHECK(serialize(load_automaton(data("empty.ctr"))) == serialize(sample_empty()));
    CHECK(serialize(load_automaton(data("identity.2tape"))) == serialize(checks::sample_identity()));
    CHECK(serialize(load_automaton(data("silent.2tape"))) == serialize(checks::sample_silent()));
    CHECK(serialize(load_automaton(data("inf_a.buchi"))) == serialize(checks::sample_inf_a()));
}

TEST_CASE("counter text") {
    const auto m = parse_counter(
        "# kind: counter\n"
        "alphabet: a b   # comment\n"
        "states: p q\n"
        "initial: p\n"
        "final: q\n"
        "trans: p a 0 q +1\n"
        "trans: q b 1 p -1\n");
    CHECK(m.num_states() == 2);
    CHECK(m.transitions.size() == 2);
    CHECK(m.transitions[1].delta == -1);
    CHECK(m.transitions[1].zero_flag == 1);
    CHECK(m.is_final(1));
}

TEST_CASE("2tape text with empty words") {
    const auto t = parse_two_tape(
        "# kind: 2tape\n"
        "alphabet1: a b\n"
        "alphabet2: a\n"
        "states: s\n"
        "initial: s\n"
        "final: s\n"
        "trans: s \"ab\" \"\" s\n");
    REQUIRE(t.transitions.size() == 1);
    CHECK(t.transitions[0].input == Word{"a", "b"});
    CHECK(t.transitions[0].output.empty());
    CHECK(parse_two_tape(serialize(t)).transitions == t.transitions);
}

TEST_CASE("parse errors carry the line") {
    try {
        parse_counter("# kind: counter\nalphabet: a\nstates: q\ninitial: q\ntrans: q a 2 q 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
    }
    CHECK_THROWS_AS(parse_automaton("alphabet: a\n"), ParseError);
    CHECK_THROWS_AS(parse_buchi("# kind: counter\nalphabet: a\nstates: q\ninitial: q\n"), ParseError);
    CHECK_THROWS_AS(parse_buchi("# kind: buchi\nalphabet: a\nstates: q\ninitial: q\ntrans: q b q\n"), Error);
}

TEST_CASE("round trip") {
    CHECK(checks::format_round_trip().passed());
    const auto r = build_r(sample_m_ex()).t_r;
    CHECK(serialize(parse_two_tape(serialize(r))) == serialize(r));
}
