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

/* buchi.hh -- one-tape Buchi automata: products, degeneralization, emptiness
 * and lasso membership.
 */

#ifndef OMEGA_BUCHI_HH_
#define OMEGA_BUCHI_HH_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "omega/search.hh"
#include "omega/words.hh"

namespace omega {

using State = std::size_t;

struct Transition {
    State from;
    Symbol letter;
    State to;

    bool operator==(const Transition&) const = default;
};

/// Shared state bookkeeping for every automaton kind.
class StateSet {
public:
    State add_state(std::string name);
    std::size_t num_states() const { return names_.size(); }
    const std::string& name(State s) const { return names_.at(s); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<State> find(const std::string& name) const;
    /// Like find but throws InvalidArgument.
    State state(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, State> index_;
};

class BuchiAutomaton {
public:
    BuchiAutomaton() = default;
    explicit BuchiAutomaton(Alphabet alphabet) : alphabet(std::move(alphabet)) {}

    State add_state(std::string name, bool is_final = false);
    void add_transition(State from, Symbol letter, State to);
    void add_transition(State from, const Letter& letter, State to);

    std::size_t num_states() const { return states.num_states(); }
    bool is_final(State s) const { return final.at(s); }
    /// Outgoing transition indices per state, in insertion order.
    std::vector<std::vector<std::size_t>> adjacency() const;

    /// Throws InvalidArgument when an invariant fails.
    void check() const;

    Alphabet alphabet;
    StateSet states;
    std::vector<Transition> transitions;
    State initial = 0;
    std::vector<bool> final;
};

/// Transition-based generalized acceptance: a run is accepting when it uses
/// a transition of every set infinitely often. No sets means every infinite
/// run accepts.
class GeneralizedBuchi {
public:
    GeneralizedBuchi() = default;
    explicit GeneralizedBuchi(Alphabet alphabet) : alphabet(std::move(alphabet)) {}

    State add_state(std::string name) { return states.add_state(std::move(name)); }
    std::size_t add_transition(State from, Symbol letter, State to);
    std::size_t num_states() const { return states.num_states(); }
    std::size_t num_sets() const { return acceptance.size(); }
    std::vector<std::vector<std::size_t>> adjacency() const;
    /// Bit k set when transition t belongs to acceptance set k.
    std::vector<search::Mask> transition_masks() const;
    void check() const;

    Alphabet alphabet;
    StateSet states;
    std::vector<Transition> transitions;
    State initial = 0;
    std::vector<std::vector<std::size_t>> acceptance;
};

/// Deterministic automaton with |stem| + |loop| states, all final, whose
/// only accepted word is w. Letters are resolved against `alphabet`, or
/// against the letters of w in order of first occurrence.
BuchiAutomaton lasso_automaton(const LassoWord& w);
BuchiAutomaton lasso_automaton(const LassoWord& w, const Alphabet& alphabet);

/// Synchronous product over reachable pairs. Acceptance sets are the
/// transitions entering a-final and b-final states, in that order.
GeneralizedBuchi product(const BuchiAutomaton& a, const BuchiAutomaton& b);

/// Counting construction; states are (q, level) for level 0..num_sets with
/// level num_sets final. Only reachable states are built.
BuchiAutomaton degeneralize(const GeneralizedBuchi& g);

/// A lasso accepted by `a`, or nothing when L(a) is empty.
std::optional<LassoWord> find_accepted_lasso(const BuchiAutomaton& a,
                                             std::size_t budget = search::kDefaultBudget);
std::optional<LassoWord> find_accepted_lasso(const GeneralizedBuchi& g,
                                             std::size_t budget = search::kDefaultBudget);

bool is_empty(const BuchiAutomaton& a, std::size_t budget = search::kDefaultBudget);
/// Direct SCC check on the generalized condition, without degeneralizing.
bool is_empty(const GeneralizedBuchi& g, std::size_t budget = search::kDefaultBudget);

/// not is_empty(degeneralize(product(a, lasso_automaton(w))))
bool accepts_lasso(const BuchiAutomaton& a, const LassoWord& w);

/// Drops states unreachable from the initial state.
BuchiAutomaton trim(const BuchiAutomaton& a);

}  // namespace omega

#endif  // OMEGA_BUCHI_HH_
