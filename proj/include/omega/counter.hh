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

/* counter.hh -- real-time one-counter Buchi automata.
 *
 * A transition (q, a, i, q', j) reads a, requires i == 0 exactly when the
 * counter is zero, and adds j in {-1, 0, +1}. A zero-test transition (i == 0)
 * may never decrement. Every transition consumes one letter.
 */

#ifndef OMEGA_COUNTER_HH_
#define OMEGA_COUNTER_HH_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omega/buchi.hh"

namespace omega {

struct CounterTransition {
    State from;
    Symbol letter;
    int zero_flag;  // 0: counter is zero, 1: counter is non-zero
    State to;
    int delta;

    bool operator==(const CounterTransition&) const = default;
};

class OneCounterBA {
public:
    OneCounterBA() = default;
    explicit OneCounterBA(Alphabet alphabet) : alphabet(std::move(alphabet)) {}

    State add_state(std::string name, bool is_final = false);
    void add_transition(State from, const Letter& letter, int zero_flag, State to, int delta);

    std::size_t num_states() const { return states.num_states(); }
    bool is_final(State s) const { return final.at(s); }
    std::vector<std::vector<std::size_t>> adjacency() const;

    Alphabet alphabet;
    StateSet states;
    std::vector<CounterTransition> transitions;
    State initial = 0;
    std::vector<bool> final;
};

struct Configuration {
    State state;
    std::uint64_t counter;

    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration&) const = default;
};

/// One message per violated invariant; empty when M is valid.
std::vector<std::string> validation_errors(const OneCounterBA& m);
bool validate(const OneCounterBA& m);

/// Successor configurations on `letter`, in transition order.
std::vector<Configuration> step(const OneCounterBA& m, const Configuration& c, Symbol letter);
std::vector<Configuration> step(const OneCounterBA& m, const Configuration& c, const Letter& letter);

/// One step of a run: the configuration before it and the transition taken.
struct RunStep {
    Configuration from;
    std::size_t transition;
};

/// A lasso-shaped run: `prefix`, then `cycle` repeated forever, each
/// repetition shifting the counter by `cycle_delta` (>= 0).
struct CounterRun {
    std::vector<RunStep> prefix;
    std::vector<RunStep> cycle;
    std::int64_t cycle_delta = 0;

    /// Configuration before step n (0-based); configuration_at(0) is the
    /// starting configuration.
    Configuration configuration_at(std::size_t n) const;
    std::size_t transition_at(std::size_t n) const;
    /// The letters read, as a canonical lasso.
    LassoWord word(const OneCounterBA& m) const;
};

struct CounterOptions {
    /// Counter cap for the capped configuration graph; defaults to
    /// default_counter_cap of the control size.
    std::optional<std::uint64_t> counter_cap;
    std::size_t node_budget = search::kDefaultBudget;
};

/// |K|^2 + |K| + 2.
std::uint64_t default_counter_cap(std::size_t control_states);

/// An accepting run from (q0, 0), or nothing when L(M) is empty.
std::optional<CounterRun> find_accepting_run(const OneCounterBA& m, const CounterOptions& opts = {});
bool is_empty(const OneCounterBA& m, const CounterOptions& opts = {});

/// An accepting run of M on w, or nothing.
std::optional<CounterRun> find_accepting_run(const OneCounterBA& m, const LassoWord& w,
                                             const CounterOptions& opts = {});
bool accepts_lasso(const OneCounterBA& m, const LassoWord& w, const CounterOptions& opts = {});

struct OracleVerdict {
    bool accepted = false;
    /// Positive verdicts are always conclusive; negative ones only when no
    /// step tried to push the counter past the cap.
    bool conclusive = false;
};

/// Brute-force search over (state, position, counter <= counter_cap) on the
/// lasso unrolled `cycle_bound` times. Shares no code with the decision
/// procedures above.
OracleVerdict oracle_bounded_accept(const OneCounterBA& m, const LassoWord& w,
                                    std::uint64_t counter_cap, std::size_t cycle_bound);

/// The finite control with counter effects dropped; every zero flag is kept
/// as a plain transition.
BuchiAutomaton erase_counter(const OneCounterBA& m);

}  // namespace omega

#endif  // OMEGA_COUNTER_HH_
