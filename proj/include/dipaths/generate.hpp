#ifndef DIPATHS_GENERATE_HPP
#define DIPATHS_GENERATE_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dipaths/errors.hpp"
#include "dipaths/io.hpp"
#include "dipaths/tree.hpp"

namespace dipaths {

enum class TreeShape { chain, star, random_attach };

struct GenConfig {
    std::uint32_t seed = 1;
    int n = 8;
    int p = 8;
    TreeShape shape = TreeShape::random_attach;
    Instance::PriorityMode pmode = Instance::PriorityMode::none;
    int root = 0;
};

namespace detail {

// mt19937 is fully specified, and avoiding <random> distributions keeps the
// byte stream identical across standard libraries.
inline std::uint32_t rnd_below(std::mt19937& rng, std::uint32_t k) { return rng() % k; }

inline bool rnd_coin(std::mt19937& rng) { return (rng() & 1u) != 0; }

template <typename T>
inline void rnd_shuffle(std::mt19937& rng, std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rnd_below(rng, static_cast<std::uint32_t>(i))]);
}

// A direction-respecting random walk: start anywhere, keep following
// outgoing arcs to unvisited vertices, stop early with probability 1/4 once
// at least one arc is in. Retries until a walk with an arc comes out.
inline std::vector<int> rnd_dipath(std::mt19937& rng, const DirectedTree& tree) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int cur = static_cast<int>(rnd_below(rng, tree.vertex_count()));
        std::vector<int> walk = {cur};
        std::vector<char> visited(tree.vertex_count(), 0);
        visited[cur] = 1;
        while (true) {
            if (walk.size() >= 2 && rnd_below(rng, 4) == 0) break;
            std::vector<int> next;
            for (const IncidentArc& ia : tree.incident(cur))
                if (ia.outgoing && !visited[tree.head(ia.arc)]) next.push_back(tree.head(ia.arc));
            if (next.empty()) break;
            cur = next[rnd_below(rng, static_cast<std::uint32_t>(next.size()))];
            visited[cur] = 1;
            walk.push_back(cur);
        }
        if (walk.size() >= 2) return walk;
    }
    throw Error(ErrorCode::InvalidInstance, "could not sample a dipath on this orientation");
}

// Per-arc orders that respect a base ranking only where they must: a pair of
// paths sharing two or more arcs keeps the base order (antisymmetry needs
// it), pairs sharing a single arc are permuted freely. Produces orders that
// no global ranking induces, while staying consistent.
inline std::vector<std::vector<int>> rnd_arc_orders(std::mt19937& rng,
                                                    const std::vector<Dipath>& paths,
                                                    int arc_count,
                                                    const std::vector<int>& base_rank) {
    std::vector<std::vector<int>> by_arc(arc_count);
    for (const Dipath& p : paths)
        for (int a : p.arcs) by_arc[a].push_back(p.id);

    // shared[i][j] > 1 forces the base order between i and j
    std::size_t np = paths.size();
    std::vector<std::vector<int>> shared(np, std::vector<int>(np, 0));
    for (int a = 0; a < arc_count; ++a)
        for (std::size_t i = 0; i < by_arc[a].size(); ++i)
            for (std::size_t j = i + 1; j < by_arc[a].size(); ++j)
                ++shared[by_arc[a][i]][by_arc[a][j]], ++shared[by_arc[a][j]][by_arc[a][i]];

    std::vector<std::vector<int>> orders(arc_count);
    for (int a = 0; a < arc_count; ++a) {
        // random linear extension of the forced constraints
        std::vector<int> todo = by_arc[a];
        while (!todo.empty()) {
            std::vector<int> ready;
            for (int cand : todo) {
                bool ok = true;
                for (int other : todo)
                    if (other != cand && shared[cand][other] >= 2 &&
                        base_rank[other] < base_rank[cand]) {
                        ok = false;
                        break;
                    }
                if (ok) ready.push_back(cand);
            }
            int pick = ready[rnd_below(rng, static_cast<std::uint32_t>(ready.size()))];
            orders[a].push_back(pick);
            todo.erase(std::find(todo.begin(), todo.end(), pick));
        }
    }
    return orders;
}

}  // namespace detail

// A star whose k*k crossing dipaths carry rotation-shifted per-arc orders.
// The pairwise preferences contain directed cycles, so no global ranking
// induces this relation; it exercises the fully general clique-acyclic case.
inline Instance rotation_star_instance(int k) {
    if (k < 2) throw Error(ErrorCode::InvalidInstance, "need k >= 2");
    Instance inst;
    inst.n = 2 * k + 1;
    inst.root = 0;
    for (int i = 0; i < k; ++i) inst.arcs.push_back({1 + i, 0});          // arc i: leaf -> center
    for (int j = 0; j < k; ++j) inst.arcs.push_back({0, 1 + k + j});     // arc k+j: center -> leaf
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            inst.path_vertices.push_back({1 + i, 0, 1 + k + j});  // path id i*k+j
    inst.pmode = Instance::PriorityMode::per_arc;
    inst.arc_orders.assign(2 * k, {});
    for (int i = 0; i < k; ++i)
        for (int s = 0; s < k; ++s) inst.arc_orders[i].push_back(i * k + (s + i) % k);
    for (int j = 0; j < k; ++j)
        for (int s = 0; s < k; ++s)
            inst.arc_orders[k + j].push_back(((s + j + 1) % k) * k + j);
    return inst;
}

inline Instance generate_instance(const GenConfig& cfg) {
    if (cfg.n < 2) throw Error(ErrorCode::InvalidInstance, "need at least two vertices");
    if (cfg.p < 0) throw Error(ErrorCode::InvalidInstance, "negative path count");
    std::mt19937 rng(cfg.seed);

    Instance inst;
    inst.n = cfg.n;
    inst.root = cfg.root;
    for (int v = 1; v < cfg.n; ++v) {
        int other;
        switch (cfg.shape) {
            case TreeShape::chain: other = v - 1; break;
            case TreeShape::star: other = 0; break;
            default: other = v == 1 ? 0 : static_cast<int>(detail::rnd_below(rng, v)); break;
        }
        if (detail::rnd_coin(rng))
            inst.arcs.push_back({other, v});
        else
            inst.arcs.push_back({v, other});
    }
    DirectedTree tree = DirectedTree::build(inst.n, inst.arcs);
    if (cfg.root < 0 || cfg.root >= cfg.n)
        throw Error(ErrorCode::InvalidInstance, "root out of range");

    std::vector<Dipath> paths;
    for (int i = 0; i < cfg.p; ++i) {
        std::vector<int> walk = detail::rnd_dipath(rng, tree);
        paths.push_back(make_dipath(tree, i, walk));
        inst.path_vertices.push_back(paths.back().vertices);
    }

    if (cfg.pmode == Instance::PriorityMode::global) {
        inst.pmode = Instance::PriorityMode::global;
        inst.rank.resize(cfg.p);
        for (int i = 0; i < cfg.p; ++i) inst.rank[i] = i;
        detail::rnd_shuffle(rng, inst.rank);
    } else if (cfg.pmode == Instance::PriorityMode::per_arc) {
        inst.pmode = Instance::PriorityMode::per_arc;
        std::vector<int> base(cfg.p);
        for (int i = 0; i < cfg.p; ++i) base[i] = i;
        detail::rnd_shuffle(rng, base);
        std::vector<int> base_rank(cfg.p);
        for (int r = 0; r < cfg.p; ++r) base_rank[base[r]] = r;
        inst.arc_orders = detail::rnd_arc_orders(rng, paths, tree.arc_count(), base_rank);
    }
    return inst;
}

}  // namespace dipaths

#endif
