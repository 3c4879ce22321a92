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

/* rational.hh -- 2-tape Buchi automata and the infinitary rational relations
 * they accept.
 *
 * A computation is an infinite sequence of transitions (q, u, v, q') with
 * finite words u over the input alphabet and v over the output alphabet. It
 * is successful when a final state recurs, and it contributes the pair
 * (u1.u2..., v1.v2...) only when both components are infinite.
 */

#ifndef OMEGA_RATIONAL_HH_
#define OMEGA_RATIONAL_HH_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "omega/buchi.hh"

namespace omega {

struct TwoTapeTransition {
    State from;
    Word input;
    Word output;
    State to;

    bool operator==(const TwoTapeTransition&) const = default;
};

class TwoTapeBA {
public:
    TwoTapeBA() = default;
    TwoTapeBA(Alphabet input, Alphabet output)
        : input_alphabet(std::move(input)), output_alphabet(std::move(output)) {}

    State add_state(std::string name, bool is_final = false);
    /// Throws AlphabetMismatch when a letter is outside its tape's alphabet.
    void add_transition(State from, Word input, Word output, State to);

    std::size_t num_states() const { return states.num_states(); }
    bool is_final(State s) const { return final.at(s); }
    std::vector<std::vector<std::size_t>> adjacency() const;
    void check() const;

    Alphabet input_alphabet;
    Alphabet output_alphabet;
    StateSet states;
    std::vector<TwoTapeTransition> transitions;
    State initial = 0;
    std::vector<bool> final;
};

enum class Tape : std::uint8_t { None, First, Second };

/// A single-letter step; `origin` is the index of the macro transition it
/// was expanded from.
struct MicroTransition {
    State from;
    Tape tape;
    Symbol letter;  // meaningless for Tape::None
    State to;
    std::size_t origin;
};

/// Every transition reads one letter on one tape, except the silent steps
/// left by (lambda, lambda) transitions, which never count as progress.
/// States 0..n-1 are the original ones; auxiliary states follow and are
/// never final.
struct NormalizedTwoTapeBA {
    Alphabet input_alphabet;
    Alphabet output_alphabet;
    StateSet states;
    std::vector<bool> final;
    std::vector<bool> auxiliary;
    State initial = 0;
    std::vector<MicroTransition> transitions;
    /// Outgoing micro transitions per state.
    std::vector<std::vector<std::size_t>> out;
    /// For each macro transition, its micro transitions in order.
    std::vector<std::vector<std::size_t>> chains;

    std::size_t num_states() const { return states.num_states(); }
    /// The same machine with every micro transition written as a macro one.
    TwoTapeBA to_two_tape() const;
};

struct LassoPair {
    LassoWord first;
    LassoWord second;

    bool operator==(const LassoPair&) const = default;
    auto operator<=>(const LassoPair&) const = default;
};

LassoPair canonical(const LassoPair& p);
std::string to_string(const LassoPair& p);

/// Expands each transition into a chain of single-letter micro transitions,
/// input letters first, through fresh non-final auxiliary states.
NormalizedTwoTapeBA normalize(const TwoTapeBA& t);

/// Fresh initial state copying the initial transitions of every component.
/// Component states are renamed "k.<name>" (k from 1) and unreachable states
/// are dropped.
TwoTapeBA union_of(std::span<const TwoTapeBA> parts);
TwoTapeBA union_of(const TwoTapeBA& a, const TwoTapeBA& b);

TwoTapeBA trim(const TwoTapeBA& t);

/// A lasso-shaped successful computation, as micro transition indices of the
/// normalized automaton.
struct PairRun {
    std::vector<std::size_t> stem;
    std::vector<std::size_t> cycle;
};

/// Decides (p.first, p.second) in R(T) on the product of the normalized
/// automaton with both lasso position automata, under the generalized
/// condition {enter final, read tape 1, read tape 2}.
std::optional<PairRun> find_lasso_pair_run(const NormalizedTwoTapeBA& t, const LassoPair& p,
                                           std::size_t budget = search::kDefaultBudget);
bool accepts_lasso_pair(const NormalizedTwoTapeBA& t, const LassoPair& p,
                        std::size_t budget = search::kDefaultBudget);
bool accepts_lasso_pair(const TwoTapeBA& t, const LassoPair& p,
                        std::size_t budget = search::kDefaultBudget);

/// Same question on the macro transitions directly, without normalizing.
bool accepts_lasso_pair_macro(const TwoTapeBA& t, const LassoPair& p,
                              std::size_t budget = search::kDefaultBudget);
/// Same question through an explicit generalized product, degeneralize and
/// the one-tape emptiness check.
bool accepts_lasso_pair_degeneralized(const TwoTapeBA& t, const LassoPair& p);

/// A lasso pair in R(T), or nothing when R(T) is empty.
std::optional<LassoPair> find_infinite_pair(const TwoTapeBA& t,
                                            std::size_t budget = search::kDefaultBudget);
bool is_empty_infinite(const TwoTapeBA& t, std::size_t budget = search::kDefaultBudget);

struct DagNode {
    State state;
    std::size_t pos1;
    std::size_t pos2;
    /// Final states entered along the best and worst root paths.
    std::size_t max_final_visits;
    std::size_t min_final_visits;
};

struct DagEdge {
    std::size_t from;
    std::size_t to;
    std::size_t micro;
};

/// All partial runs of a normalized automaton that stay within two finite
/// tape contents. Node 0 is the root (initial state, nothing read); nodes are
/// numbered in breadth-first discovery order.
struct RunDag {
    Word tape1;
    Word tape2;
    std::vector<DagNode> nodes;
    std::vector<DagEdge> edges;
    std::vector<std::vector<std::size_t>> out;

    bool is_maximal(std::size_t node) const { return out.at(node).empty(); }
    bool fully_consumed(std::size_t node) const {
        return nodes.at(node).pos1 == tape1.size() && nodes.at(node).pos2 == tape2.size();
    }
    /// The edge leaving `node` by micro transition `micro`, if any.
    std::optional<std::size_t> edge_by_micro(std::size_t node, std::size_t micro) const;
    /// Calls fn(edge ids) for every root-to-maximal path in a fixed order.
    /// Throws BudgetExceeded after `budget` path edges in total.
    void for_each_maximal_path(const std::function<void(const std::vector<std::size_t>&)>& fn,
                               std::size_t budget = search::kDefaultBudget) const;
};

/// Throws InvalidArgument when the explored runs contain a silent cycle and
/// BudgetExceeded past `budget` nodes.
RunDag run_dag(const NormalizedTwoTapeBA& t, const Word& tape1, const Word& tape2,
               std::size_t budget = search::kDefaultBudget);
RunDag prefix_run_dag(const NormalizedTwoTapeBA& t, const BlockWord& g1, const BlockWord& g2,
                      std::size_t depth, std::size_t budget = search::kDefaultBudget);

}  // namespace omega

#endif  // OMEGA_RATIONAL_HH_
