#ifndef DIPATHS_PRIORITY_HPP
#define DIPATHS_PRIORITY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dipaths/errors.hpp"
#include "dipaths/tree.hpp"

namespace dipaths {

// The reflexive antisymmetric relation orienting the arc-intersection graph:
// a strict total order on the dipaths through each arc, consistent across
// shared arcs. Either induced by one global ranking or given arc by arc.
struct PriorityRelation {
    enum class Mode { global_ranking, per_arc };

    Mode mode = Mode::global_ranking;
    std::vector<int> global_rank;                 // rank per path id, lower is better
    std::vector<std::vector<int>> per_arc_order;  // per arc, path ids best first
    std::vector<std::unordered_map<int, int>> per_arc_pos;

    // True iff p takes priority over q at arc a (p != q, both through a).
    bool prefers(int a, int p, int q) const {
        if (mode == Mode::global_ranking) return global_rank[p] < global_rank[q];
        const auto& pos = per_arc_pos[a];
        return pos.at(p) < pos.at(q);
    }

    int rank_at(int a, int p) const {
        if (mode == Mode::global_ranking) return global_rank[p];
        return per_arc_pos[a].at(p);
    }
};

// Build the relation from a ranking listing every path id once, best first.
inline PriorityRelation make_global_priority(const std::vector<int>& best_first, int path_count) {
    PriorityRelation rel;
    rel.mode = PriorityRelation::Mode::global_ranking;
    rel.global_rank.assign(path_count, -1);
    if (static_cast<int>(best_first.size()) != path_count)
        throw Error(ErrorCode::IncompleteOrder, "ranking must list every path exactly once");
    for (std::size_t r = 0; r < best_first.size(); ++r) {
        int p = best_first[r];
        if (p < 0 || p >= path_count || rel.global_rank[p] >= 0)
            throw Error(ErrorCode::IncompleteOrder, "ranking must list every path exactly once");
        rel.global_rank[p] = static_cast<int>(r);
    }
    return rel;
}

inline PriorityRelation make_per_arc_priority(std::vector<std::vector<int>> orders) {
    PriorityRelation rel;
    rel.mode = PriorityRelation::Mode::per_arc;
    rel.per_arc_order = std::move(orders);
    rel.per_arc_pos.resize(rel.per_arc_order.size());
    for (std::size_t a = 0; a < rel.per_arc_order.size(); ++a)
        for (std::size_t k = 0; k < rel.per_arc_order[a].size(); ++k)
            rel.per_arc_pos[a][rel.per_arc_order[a][k]] = static_cast<int>(k);
    return rel;
}

// Normalize and check the relation against an instance: each arc's order must
// list exactly the dipaths through that arc, and two dipaths sharing several
// arcs must be ordered the same way on all of them (antisymmetry of the
// induced relation, i.e. clique-acyclicity).
inline PriorityRelation validate_priorities(const std::vector<Dipath>& paths,
                                            const PathIndex& index, PriorityRelation rel) {
    int p = static_cast<int>(paths.size());
    int m = static_cast<int>(index.by_arc.size());
    if (rel.mode == PriorityRelation::Mode::global_ranking) {
        if (static_cast<int>(rel.global_rank.size()) != p)
            throw Error(ErrorCode::IncompleteOrder, "ranking size mismatch");
        // Materialize the induced per-arc orders; a global ranking is always
        // consistent across arcs.
        rel.per_arc_order.assign(m, {});
        for (int a = 0; a < m; ++a) {
            for (const ArcHit& hit : index.by_arc[a]) rel.per_arc_order[a].push_back(hit.path);
            std::sort(rel.per_arc_order[a].begin(), rel.per_arc_order[a].end(),
                      [&](int x, int y) { return rel.global_rank[x] < rel.global_rank[y]; });
        }
        return rel;
    }

    if (static_cast<int>(rel.per_arc_order.size()) != m)
        throw Error(ErrorCode::IncompleteOrder, "need one order per arc");
    rel.per_arc_pos.assign(m, {});
    for (int a = 0; a < m; ++a) {
        const auto& order = rel.per_arc_order[a];
        if (order.size() != index.by_arc[a].size())
            throw Error(ErrorCode::IncompleteOrder,
                        "arc " + std::to_string(a) + ": order size does not match its dipaths");
        auto& pos = rel.per_arc_pos[a];
        for (std::size_t k = 0; k < order.size(); ++k) {
            int q = order[k];
            if (q < 0 || q >= p || pos.count(q))
                throw Error(ErrorCode::IncompleteOrder,
                            "arc " + std::to_string(a) + ": bad or repeated path id");
            pos[q] = static_cast<int>(k);
        }
        for (const ArcHit& hit : index.by_arc[a])
            if (!pos.count(hit.path))
                throw Error(ErrorCode::IncompleteOrder,
                            "arc " + std::to_string(a) + ": path " + std::to_string(hit.path) +
                                " missing from the order");
    }
    // Cross-arc consistency for every pair sharing at least two arcs.
    std::unordered_map<std::uint64_t, int> pair_sign;
    for (int a = 0; a < m; ++a) {
        const auto& order = rel.per_arc_order[a];
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                int lo = std::min(order[i], order[j]), hi = std::max(order[i], order[j]);
                int sign = order[i] < order[j] ? 1 : -1;  // +1: lower id preferred
                std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi);
                auto [it, inserted] = pair_sign.try_emplace(key, sign);
                if (!inserted && it->second != sign)
                    throw Error(ErrorCode::InconsistentOrder,
                                "paths " + std::to_string(lo) + " and " + std::to_string(hi) +
                                    " are ordered both ways on shared arcs");
            }
    }
    return rel;
}

}  // namespace dipaths

#endif
