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

/* reduction.hh -- from a one-counter Buchi automaton to a 2-tape Buchi
 * automaton whose section at alpha is the language.
 *
 * Over Gamma = Sigma U {A}, with tape 1 carrying h(x) and tape 2 carrying
 * alpha, block i of each tape is split as
 *
 *     tape 1:  A u_i v_i x(i)        u_i, v_i in 0*
 *     tape 2:  A w_i z_i             w_i, z_i in 0*
 *
 * R1 accepts the pairs of this shape with |v_1| = 0, |u_{i+1}| = |z_i| + 1
 * and x(i): (q_{i-1}, |v_i|) -> (q_i, |w_i|) a step of the source automaton,
 * some final q_i recurring. R2 accepts every pair outside h(Sigma^w) x {alpha}.
 */

#ifndef OMEGA_REDUCTION_HH_
#define OMEGA_REDUCTION_HH_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omega/counter.hh"
#include "omega/rational.hh"

namespace omega {

/// R1 state names: "init", "u1", and "p:q", "y:q", "z:q" for each source
/// state q, plus "v:k" for each non-zero-test source transition k.
TwoTapeBA build_r1(const OneCounterBA& a);

/// sigma_1 has no initial segment in A.S^2.A.S^3.A, or sigma_2 none in
/// A.S.A.S^2.A.
TwoTapeBA build_c1(const Alphabet& sigma);
/// sigma_2 not in (A.0^+)^w, or sigma_1 not in (A.0^+.S)^w.
TwoTapeBA build_c2(const Alphabet& sigma);
/// Aligned blocks n+1 (n >= 1) of lengths |u| on tape 1 and |v| on tape 2,
/// with |u| != |v| + 1.
TwoTapeBA build_c3(const Alphabet& sigma);
/// Block n+2 of tape 1 against block n+1 of tape 2 (n >= 1), lengths |v|
/// and |u|, with |v| != |u| + 2.
TwoTapeBA build_c4(const Alphabet& sigma);
TwoTapeBA build_r2(const Alphabet& sigma);

/// The all-accepting pair scanner: reads one letter of each tape in turn
/// forever. Shared tail of every clause automaton.
TwoTapeBA pair_scanner(const Alphabet& gamma);

struct ReductionBundle {
    OneCounterBA source;
    Alphabet gamma;
    TwoTapeBA t_r1;
    TwoTapeBA t_r2;
    TwoTapeBA t_r;
};

ReductionBundle build_r(const OneCounterBA& a);

/// (h(x), alpha).
std::pair<BlockWord, BlockWord> g_pair(const LassoWord& x, const Alphabet& sigma);

struct Block {
    Word u;
    Word v;
    Letter x;
    Word w;
    Word z;
    /// q_i, the source state after the block.
    State q;
    /// The source transition simulated in the block.
    std::size_t transition;
};

struct BlockRun {
    /// q_0.
    State initial = 0;
    /// blocks[i - 1] is block i.
    std::vector<Block> blocks;
    /// Shape of the counter run the blocks were read from, when known.
    struct Cycle {
        std::size_t prefix_length;
        std::size_t cycle_length;
        std::int64_t cycle_delta;
    };
    std::optional<Cycle> cycle;
};

/// Blocks 1..depth of the R1 computation on (h(x), alpha) induced by an
/// accepting run: v_i = 0^{c_i}, w_i = 0^{c_{i+1}}, |u_i| = i - c_i,
/// |z_i| = i - c_{i+1}. Throws InternalError when a counter value does not
/// fit its block.
BlockRun witness_run(const OneCounterBA& a, const LassoWord& x, const CounterRun& run,
                     std::size_t depth);

/// Every violated block invariant, one message each; empty when valid.
std::vector<std::string> validate_block_run(const OneCounterBA& a, const LassoWord& x,
                                            const BlockRun& run);

/// The macro transitions of build_r1(a) that realize `run` on the depth-block
/// prefixes of (h(x), alpha). The last block stops after x(depth): z_depth is
/// paired with u_{depth+1}, which lies beyond the prefix.
std::vector<std::size_t> r1_macro_run(const TwoTapeBA& r1, const OneCounterBA& a,
                                      const BlockRun& run);

/// Follows macro transitions through `dag` from the root; the edge path, or
/// nothing when some step is missing.
std::optional<std::vector<std::size_t>> embed_macro_run(const NormalizedTwoTapeBA& n,
                                                        const RunDag& dag,
                                                        const std::vector<std::size_t>& macros);

/// Number of path edges entering a final state.
std::size_t final_visits(const NormalizedTwoTapeBA& n, const RunDag& dag,
                         const std::vector<std::size_t>& path);

struct R1PathReport {
    /// Blocks whose x(i) was read.
    std::size_t complete_blocks = 0;
    /// The induced (q_{i-1}, c_i) for each complete block.
    std::vector<Configuration> configurations;
    std::vector<std::string> violations;
};

/// Splits a run of normalize(build_r1(a)) into blocks by the roles of the
/// R1 states, and checks |v_1| = 0, |u_{i+1}| = |z_i| + 1 and every block
/// step against a. When the tapes carry (h(x), alpha), pass x to also check
/// x(i) and |v_{i+1}| = |w_i|. Parts cut off by the end of the path are not
/// checked.
R1PathReport check_r1_path(const OneCounterBA& a, const LassoWord* x, const TwoTapeBA& r1,
                           const NormalizedTwoTapeBA& n, const RunDag& dag,
                           const std::vector<std::size_t>& path);

/// L = a^w: one final state, (q0, a, 0, q0, 0).
OneCounterBA sample_a0();
/// Balanced a/b words, then c^w once the counter is back to zero.
OneCounterBA sample_m_ex();
/// Decrements into its only final state, which then needs a non-zero
/// counter forever; L is empty.
OneCounterBA sample_empty();
/// Sigma = {0, a, b, c}, shared by the samples.
Alphabet sample_sigma();

}  // namespace omega

#endif  // OMEGA_REDUCTION_HH_
