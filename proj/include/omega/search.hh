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

/* search.hh -- on-the-fly accepting-cycle search over implicit graphs.
 *
 * The graph is given by an initial node key and a successor callback. Edges
 * carry an acceptance mask; a strongly connected component is accepting when
 * the union of the masks of its internal edges covers every required bit and
 * it has at least one internal edge. Tarjan's algorithm is run iteratively and
 * stops at the first accepting component, so the explored part of the graph is
 * usually much smaller than the graph.
 */

#ifndef OMEGA_SEARCH_HH_
#define OMEGA_SEARCH_HH_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "omega/error.hh"

namespace omega::search {

using Key = std::uint64_t;
using Mask = std::uint32_t;
using Label = std::uint32_t;

/// Set on every edge; required implicitly so that a lone node without a
/// self-loop never counts as a cycle.
inline constexpr Mask kEdgeBit = Mask{1} << 31;

inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// stem_nodes[0] is the initial node and stem_nodes.back() == cycle_nodes[0].
/// stem_labels[k] labels stem_nodes[k] -> stem_nodes[k+1]; cycle_labels[k]
/// labels cycle_nodes[k] -> cycle_nodes[(k+1) % n].
struct Witness {
    std::vector<Key> stem_nodes;
    std::vector<Label> stem_labels;
    std::vector<Key> cycle_nodes;
    std::vector<Label> cycle_labels;
};

namespace detail {

class NodeTable {
public:
    explicit NodeTable(std::size_t dense) {
        if (dense > 0) {
            dense_.assign(dense, kAbsent);
        }
    }
    static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

    std::uint32_t find(Key key) const {
        if (!dense_.empty()) {
            return key < dense_.size() ? dense_[key] : kAbsent;
        }
        auto it = sparse_.find(key);
        return it == sparse_.end() ? kAbsent : it->second;
    }
    void insert(Key key, std::uint32_t id) {
        if (!dense_.empty()) {
            if (key >= dense_.size()) {
                throw InternalError("dense node key out of range");
            }
            dense_[key] = id;
        } else {
            sparse_.emplace(key, id);
        }
    }

private:
    std::vector<std::uint32_t> dense_;
    std::unordered_map<Key, std::uint32_t> sparse_;
};

}  // namespace detail

/// Returns a lasso through an accepting component reachable from `init`, or
/// nothing when none exists. `succ(key, emit)` must call
/// `emit(target_key, mask, label)` for every outgoing edge, in a fixed order.
/// When `dense_keys` is non-zero every key must be below it and a flat table
/// replaces the hash map.
template <class Succ>
std::optional<Witness> find_accepting_cycle(Key init, Succ&& succ, Mask required,
                                            std::size_t budget = kDefaultBudget,
                                            std::size_t dense_keys = 0) {
    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    struct Node {
        Key key;
        std::uint32_t index = kNone;
        std::uint32_t low = 0;
        Mask acc = 0;
        bool on_stack = false;
        std::uint32_t edge_begin = 0;
        std::uint32_t edge_end = 0;
        std::uint32_t parent = kNone;
        Label parent_label = 0;
    };
    struct Edge {
        std::uint32_t to;
        Mask mask;
        Label label;
    };
    struct Frame {
        std::uint32_t node;
        std::uint32_t next_edge;
        Mask via_mask;  // mask of the tree edge that entered this node
    };

    const Mask full = required | kEdgeBit;
    detail::NodeTable table(dense_keys);
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::vector<std::uint32_t> tarjan;
    std::vector<Frame> frames;
    std::uint32_t counter = 0;

    auto intern = [&](Key key) -> std::uint32_t {
        std::uint32_t id = table.find(key);
        if (id == detail::NodeTable::kAbsent) {
            if (nodes.size() >= budget) {
                throw BudgetExceeded(budget);
            }
            id = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back(Node{key});
            table.insert(key, id);
        }
        return id;
    };
    auto open = [&](std::uint32_t v, Mask via) {
        nodes[v].index = nodes[v].low = counter++;
        nodes[v].on_stack = true;
        tarjan.push_back(v);
        const auto begin = static_cast<std::uint32_t>(edges.size());
        const Key key = nodes[v].key;
        succ(key, [&](Key target, Mask mask, Label label) {
            const std::uint32_t w = intern(target);
            edges.push_back(Edge{w, mask | kEdgeBit, label});
        });
        nodes[v].edge_begin = begin;
        nodes[v].edge_end = static_cast<std::uint32_t>(edges.size());
        frames.push_back(Frame{v, begin, via});
    };

    auto build_witness = [&](std::uint32_t root, std::size_t stack_pos) {
        std::vector<char> in_scc(nodes.size(), 0);
        for (std::size_t k = stack_pos; k < tarjan.size(); ++k) {
            in_scc[tarjan[k]] = 1;
        }
        Witness w;
        for (std::uint32_t v = root; v != kNone; v = nodes[v].parent) {
            w.stem_nodes.push_back(nodes[v].key);
            if (nodes[v].parent != kNone) {
                w.stem_labels.push_back(nodes[v].parent_label);
            }
        }
        std::reverse(w.stem_nodes.begin(), w.stem_nodes.end());
        std::reverse(w.stem_labels.begin(), w.stem_labels.end());

        // Edge sources are needed to walk BFS trees backwards.
        std::vector<std::uint32_t> edge_src(edges.size(), kNone);
        for (std::size_t k = stack_pos; k < tarjan.size(); ++k) {
            const std::uint32_t v = tarjan[k];
            for (std::uint32_t e = nodes[v].edge_begin; e < nodes[v].edge_end; ++e) {
                edge_src[e] = v;
            }
        }
        auto path_to = [&](std::uint32_t from, auto&& want) {
            std::vector<std::uint32_t> via_edge(nodes.size(), kNone);
            std::vector<char> seen(nodes.size(), 0);
            std::deque<std::uint32_t> queue{from};
            seen[from] = 1;
            while (!queue.empty()) {
                const std::uint32_t v = queue.front();
                queue.pop_front();
                for (std::uint32_t e = nodes[v].edge_begin; e < nodes[v].edge_end; ++e) {
                    const Edge& edge = edges[e];
                    if (!in_scc[edge.to]) {
                        continue;
                    }
                    if (want(edge)) {
                        std::vector<std::uint32_t> path{e};
                        for (std::uint32_t x = v; x != from; x = edge_src[via_edge[x]]) {
                            path.push_back(via_edge[x]);
                        }
                        std::reverse(path.begin(), path.end());
                        return path;
                    }
                    if (!seen[edge.to]) {
                        seen[edge.to] = 1;
                        via_edge[edge.to] = e;
                        queue.push_back(edge.to);
                    }
                }
            }
            throw InternalError("accepting component is not strongly connected");
        };

        Mask covered = 0;
        std::uint32_t cur = root;
        std::vector<std::uint32_t> cycle;
        auto append = [&](const std::vector<std::uint32_t>& path) {
            for (std::uint32_t e : path) {
                cycle.push_back(e);
                covered |= edges[e].mask;
                cur = edges[e].to;
            }
        };
        while ((covered & full) != full) {
            const Mask missing = full & ~covered;
            append(path_to(cur, [&](const Edge& e) { return (e.mask & missing) != 0; }));
        }
        if (cur != root) {
            append(path_to(cur, [&](const Edge& e) { return e.to == root; }));
        }
        for (std::uint32_t e : cycle) {
            w.cycle_nodes.push_back(nodes[edge_src[e]].key);
            w.cycle_labels.push_back(edges[e].label);
        }
        return w;
    };

    open(intern(init), 0);
    while (!frames.empty()) {
        Frame& f = frames.back();
        const std::uint32_t v = f.node;
        if (f.next_edge < nodes[v].edge_end) {
            const Edge edge = edges[f.next_edge++];
            const std::uint32_t w = edge.to;
            if (nodes[w].index == kNone) {
                nodes[w].parent = v;
                nodes[w].parent_label = edge.label;
                open(w, edge.mask);
            } else if (nodes[w].on_stack) {
                nodes[v].low = std::min(nodes[v].low, nodes[w].index);
                nodes[v].acc |= edge.mask;
            }
            continue;
        }
        const Mask via = f.via_mask;
        frames.pop_back();
        if (nodes[v].low == nodes[v].index) {
            std::size_t pos = tarjan.size();
            while (tarjan[pos - 1] != v) {
                --pos;
            }
            --pos;
            if ((nodes[v].acc & full) == full) {
                return build_witness(v, pos);
            }
            for (std::size_t k = pos; k < tarjan.size(); ++k) {
                nodes[tarjan[k]].on_stack = false;
            }
            tarjan.resize(pos);
        }
        if (!frames.empty()) {
            const std::uint32_t u = frames.back().node;
            if (nodes[v].on_stack) {
                nodes[u].low = std::min(nodes[u].low, nodes[v].low);
                nodes[u].acc |= nodes[v].acc | via;
            }
        }
    }
    return std::nullopt;
}

}  // namespace omega::search

#endif  // OMEGA_SEARCH_HH_
