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

/* checks.hh -- property sweeps and brute-force oracles behind `suite`.
 *
 * Every check is deterministic given its seed and records the first
 * counterexample it meets. The oracles here share no code with the decision
 * procedures they test beyond the automaton data types.
 */

#ifndef OMEGA_CHECKS_HH_
#define OMEGA_CHECKS_HH_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omega/counter.hh"
#include "omega/rational.hh"
#include "omega/reduction.hh"

namespace omega::checks {

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// Conclusive-only checks count the skipped cases here.
    std::size_t skipped = 0;
    /// First counterexample, or an error message.
    std::string detail;
    bool budget_exhausted = false;
    double seconds = 0.0;

    bool passed() const { return failures == 0 && !budget_exhausted; }
    void fail(const std::string& what) {
        if (failures++ == 0) detail = what;
    }
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    /// Deepest block prefix used by the R1 simulation checks.
    std::size_t depth = 20;
    std::optional<std::uint64_t> counter_cap;
    std::size_t node_budget = search::kDefaultBudget;
};

// Shipped samples.

/// (name, automaton) in a fixed order: counter.a0, counter.m_ex, counter.empty.
std::vector<std::pair<std::string, OneCounterBA>> shipped_counters();
/// (q, a, a, q) for a in {a, b}, q final.
TwoTapeBA sample_identity();
/// Reads (a, b) into a final state whose only move is a silent self-loop.
TwoTapeBA sample_silent();
/// A small one-state Buchi automaton over {a, b}: infinitely many a.
BuchiAutomaton sample_inf_a();
/// The shipped 2-tape automata: identity, silent, R1 of each shipped counter
/// automaton and the four clause automata.
std::vector<std::pair<std::string, TwoTapeBA>> shipped_two_tape();

// Oracles.

/// Lasso membership by subset and loop-relation closure.
bool brute_buchi_accepts(const BuchiAutomaton& a, const LassoWord& w);
/// The first 1-based position where x and y differ, or nothing if equal.
std::optional<std::size_t> first_difference(const LassoWord& x, const LassoWord& y);
/// Some block index i <= limit at which w leaves the shape of h(x) for every
/// x, or nothing.
std::optional<std::size_t> h_shape_violation(const LassoWord& w, std::size_t limit);
std::optional<std::size_t> alpha_shape_violation(const LassoWord& w, std::size_t limit);

// Corpora.

/// Every canonical lasso over {a, b, c} with |stem| + |loop| <= 6.
const std::vector<LassoWord>& counter_corpus();
/// Every canonical lasso over Gamma = {0, a, b, c, A} with size <= 4.
const std::vector<LassoWord>& gamma_corpus();

// Checks, one per property; the acceptance criteria are unions of these.

CheckResult words_lasso_normalize();
CheckResult words_letter_at(std::uint64_t seed);
CheckResult words_examples();
CheckResult words_h_injectivity();
CheckResult words_h_continuity();
CheckResult words_not_block_word();

CheckResult buchi_examples();
CheckResult buchi_emptiness(std::uint64_t seed);
CheckResult buchi_product(std::uint64_t seed);
CheckResult buchi_canonical_invariance(std::uint64_t seed);

CheckResult counter_examples();
CheckResult counter_oracle(const SuiteOptions& opts);
CheckResult counter_random_oracle(const SuiteOptions& opts);
CheckResult counter_witness(const SuiteOptions& opts);
CheckResult counter_erasure(const SuiteOptions& opts);

CheckResult rational_examples();
CheckResult rational_normalize(const SuiteOptions& opts);
CheckResult rational_union(const SuiteOptions& opts);
CheckResult rational_both_infinite();
CheckResult rational_witness();
CheckResult rational_canonical_invariance(const SuiteOptions& opts);
CheckResult rational_run_dag();

CheckResult reduction_examples();
CheckResult reduction_r2_universality(const SuiteOptions& opts);
CheckResult reduction_section_sweep(const SuiteOptions& opts);
CheckResult reduction_r1_completeness(const SuiteOptions& opts);
CheckResult reduction_r1_soundness(const SuiteOptions& opts);
CheckResult reduction_r1_lasso_shape(const SuiteOptions& opts);
CheckResult reduction_membership_transfer(const SuiteOptions& opts);

CheckResult format_round_trip();

struct NamedCheck {
    std::string name;
    std::function<CheckResult(const SuiteOptions&)> run;
};

/// Every check of the suite in report order.
std::vector<NamedCheck> suite_checks();

/// Runs fn, fills in the name, catches BudgetExceeded and other errors, and
/// records the wall time.
CheckResult run_check(const NamedCheck& check, const SuiteOptions& opts);

std::vector<CheckResult> run_suite(const SuiteOptions& opts);

/// One "check ..." line per result and a trailing summary line. Timing is
/// only written when asked for, so that reports compare byte for byte.
std::string render_report(const std::vector<CheckResult>& results, bool with_timing);

}  // namespace omega::checks

#endif  // OMEGA_CHECKS_HH_
