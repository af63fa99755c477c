#ifndef DIPATHS_ORACLE_HPP
#define DIPATHS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dipaths/bipartite.hpp"
#include "dipaths/errors.hpp"
#include "dipaths/priority.hpp"
#include "dipaths/tree.hpp"

// Exhaustive reference computations used by the tests and by solution
// verification. Deliberately naive: none of them share logic with the fast
// per-star passes beyond the tree types.
namespace dipaths::oracle {

struct IntersectionGraph {
    int p = 0;
    std::vector<std::uint32_t> adj;  // bitmask per vertex

    bool adjacent(int i, int j) const { return (adj[i] >> j) & 1u; }
};

inline IntersectionGraph build_intersection_graph(const DirectedTree& tree,
                                                  const std::vector<Dipath>& paths) {
    if (paths.size() > 31)
        throw Error(ErrorCode::SizeLimit, "intersection graph limited to 31 paths");
    IntersectionGraph g;
    g.p = static_cast<int>(paths.size());
    g.adj.assign(g.p, 0);
    std::vector<std::vector<char>> arc_mask(paths.size(),
                                            std::vector<char>(tree.arc_count(), 0));
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (int a : paths[i].arcs) arc_mask[i][a] = 1;
    for (int i = 0; i < g.p; ++i)
        for (int j = i + 1; j < g.p; ++j) {
            bool meet = false;
            for (int a : paths[i].arcs)
                if (arc_mask[j][a]) {
                    meet = true;
                    break;
                }
            if (meet) {
                g.adj[i] |= 1u << j;
                g.adj[j] |= 1u << i;
            }
        }
    return g;
}

namespace detail {

inline bool colorable(const IntersectionGraph& g, int k) {
    std::vector<int> color(g.p, -1);
    // Backtracking with a cap on fresh colors to break symmetry.
    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == g.p) return true;
        int lim = std::min(k, used + 1);
        for (int c = 0; c < lim; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v) && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace detail

// Exact chromatic number by backtracking. Feasible for p <= 16.
inline int exact_chromatic(const IntersectionGraph& g) {
    if (g.p > 16) throw Error(ErrorCode::SizeLimit, "exact coloring limited to 16 paths");
    if (g.p == 0) return 0;
    for (int k = 1;; ++k)
        if (detail::colorable(g, k)) return k;
}

// Exact maximum clique, as the maximum stable set of the complement.
inline int exact_max_clique(const IntersectionGraph& g) {
    if (g.p > 16) throw Error(ErrorCode::SizeLimit, "exact clique limited to 16 paths");
    std::uint32_t all = (1u << g.p) - 1u;
    auto rec = [&](auto&& self, std::uint32_t rem) -> int {
        if (rem == 0) return 0;
        int v = __builtin_ctz(rem);
        std::uint32_t without = rem & ~(1u << v);
        return std::max(self(self, without), 1 + self(self, without & g.adj[v]));
    };
    return g.p == 0 ? 0 : rec(rec, all);
}

// Exact maximum stable set (= maximum number of arc-disjoint dipaths).
inline int exact_max_stable(const IntersectionGraph& g) {
    if (g.p > 16) throw Error(ErrorCode::SizeLimit, "exact stable set limited to 16 paths");
    std::uint32_t all = g.p == 31 ? 0x7fffffffu : ((1u << g.p) - 1u);
    auto rec = [&](auto&& self, std::uint32_t rem) -> int {
        if (rem == 0) return 0;
        int v = __builtin_ctz(rem);
        std::uint32_t without = rem & ~(1u << v);
        int best = self(self, without);
        best = std::max(best, 1 + self(self, without & ~g.adj[v]));
        return best;
    };
    return rec(rec, all);
}

// Smallest arc set meeting every dipath, by enumerating arc subsets in
// increasing size. Returns the arc ids of one optimal multicut.
inline std::vector<int> exact_min_multicut(const DirectedTree& tree,
                                           const std::vector<Dipath>& paths) {
    int m = tree.arc_count();
    if (m > 20) throw Error(ErrorCode::SizeLimit, "multicut enumeration limited to 20 arcs");
    if (paths.empty()) return {};
    std::vector<std::uint32_t> path_mask(paths.size(), 0);
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (int a : paths[i].arcs) path_mask[i] |= 1u << a;

    for (int k = 1; k <= m; ++k) {
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            std::uint32_t mask = 0;
            for (int a : pick) mask |= 1u << a;
            bool covers = true;
            for (std::uint32_t pm : path_mask)
                if ((pm & mask) == 0) {
                    covers = false;
                    break;
                }
            if (covers) return pick;
            int i = k - 1;
            while (i >= 0 && pick[i] == m - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw Error(ErrorCode::InternalInvariantViolation, "no multicut found");
}

// Largest pairwise arc-disjoint subset of the given paths, optionally also
// required to avoid the arcs of `avoid`.
inline int max_disjoint_packing(const std::vector<Dipath>& paths, const std::vector<int>& ids,
                                const Dipath* avoid = nullptr) {
    if (ids.size() > 20) throw Error(ErrorCode::SizeLimit, "packing enumeration limited to 20 paths");
    std::vector<const Dipath*> cand;
    for (int id : ids) {
        if (avoid != nullptr) {
            bool clash = false;
            for (int a : paths[id].arcs)
                if (std::find(avoid->arcs.begin(), avoid->arcs.end(), a) != avoid->arcs.end()) {
                    clash = true;
                    break;
                }
            if (clash) continue;
        }
        cand.push_back(&paths[id]);
    }
    int n = static_cast<int>(cand.size());
    std::vector<std::uint32_t> conflict(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool meet = false;
            for (int a : cand[i]->arcs)
                if (std::find(cand[j]->arcs.begin(), cand[j]->arcs.end(), a) != cand[j]->arcs.end()) {
                    meet = true;
                    break;
                }
            if (meet) {
                conflict[i] |= 1u << j;
                conflict[j] |= 1u << i;
            }
        }
    auto rec = [&](auto&& self, std::uint32_t rem) -> int {
        if (rem == 0) return 0;
        int v = __builtin_ctz(rem);
        std::uint32_t without = rem & ~(1u << v);
        return std::max(self(self, without), 1 + self(self, without & ~conflict[v]));
    };
    return rec(rec, n >= 32 ? 0 : ((1u << n) - 1u));
}

// Literal check of the kernel definition: K is pairwise arc-disjoint and
// every excluded dipath is beaten on some shared arc by a member of K.
inline bool verify_kernel(const DirectedTree& tree, const std::vector<Dipath>& paths,
                          const PriorityRelation& rel, const std::vector<int>& kernel_ids) {
    std::vector<char> in_kernel(paths.size(), 0);
    for (int id : kernel_ids) {
        if (id < 0 || id >= static_cast<int>(paths.size())) return false;
        if (in_kernel[id]) return false;
        in_kernel[id] = 1;
    }
    std::vector<int> arc_owner(tree.arc_count(), -1);
    for (int id : kernel_ids)
        for (int a : paths[id].arcs) {
            if (arc_owner[a] >= 0) return false;  // two kernel paths share an arc
            arc_owner[a] = id;
        }
    for (std::size_t q = 0; q < paths.size(); ++q) {
        if (in_kernel[q]) continue;
        bool dominated = false;
        for (int a : paths[q].arcs) {
            int k = arc_owner[a];
            if (k >= 0 && rel.prefers(a, k, static_cast<int>(q))) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;
    }
    return true;
}

// All kernels of the clique-acyclic orientation, by filtering every subset.
inline std::vector<std::vector<int>> enumerate_kernels(const DirectedTree& tree,
                                                       const std::vector<Dipath>& paths,
                                                       const PriorityRelation& rel) {
    if (paths.size() > 16) throw Error(ErrorCode::SizeLimit, "kernel enumeration limited to 16 paths");
    std::vector<std::vector<int>> found;
    std::uint32_t total = 1u << paths.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::vector<int> ids;
        for (std::size_t i = 0; i < paths.size(); ++i)
            if ((mask >> i) & 1u) ids.push_back(static_cast<int>(i));
        if (verify_kernel(tree, paths, rel, ids)) found.push_back(std::move(ids));
    }
    return found;
}

// Every matching of the alive subgraph, as sorted edge-id lists.
inline std::vector<std::vector<int>> enumerate_matchings(const BipartiteMultigraph& B,
                                                         const std::vector<char>* alive = nullptr) {
    if (B.edge_count() > 24) throw Error(ErrorCode::SizeLimit, "matching enumeration limited to 24 edges");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::vector<char> used_l(B.left_count(), 0), used_r(B.right_count(), 0);
    auto rec = [&](auto&& self, int e) -> void {
        if (e == B.edge_count()) {
            out.push_back(current);
            return;
        }
        self(self, e + 1);
        if (!edge_alive(alive, e)) return;
        int u = B.edge(e).left, w = B.edge(e).right;
        if (used_l[u] || used_r[w]) return;
        used_l[u] = used_r[w] = 1;
        current.push_back(e);
        self(self, e + 1);
        current.pop_back();
        used_l[u] = used_r[w] = 0;
    };
    rec(rec, 0);
    return out;
}

inline std::vector<std::vector<int>> enumerate_maximum_matchings(
    const BipartiteMultigraph& B, const std::vector<char>* alive = nullptr) {
    std::vector<std::vector<int>> all = enumerate_matchings(B, alive);
    std::size_t best = 0;
    for (const auto& m : all) best = std::max(best, m.size());
    std::vector<std::vector<int>> out;
    for (auto& m : all)
        if (m.size() == best) out.push_back(std::move(m));
    return out;
}

// All stable matchings: every matching, filtered by the blocking-edge test.
inline std::vector<std::vector<int>> enumerate_stable_matchings(
    const BipartiteMultigraph& B, const EdgePreferences& prefs,
    const std::vector<char>* alive = nullptr) {
    std::vector<std::vector<int>> out;
    for (auto& edges : enumerate_matchings(B, alive)) {
        Matching m;
        m.edges = edges;
        m.left_match.assign(B.left_count(), -1);
        m.right_match.assign(B.right_count(), -1);
        for (int e : edges) {
            m.left_match[B.edge(e).left] = e;
            m.right_match[B.edge(e).right] = e;
        }
        if (is_stable(B, prefs, m, alive)) out.push_back(std::move(edges));
    }
    return out;
}

}  // namespace dipaths::oracle

#endif
