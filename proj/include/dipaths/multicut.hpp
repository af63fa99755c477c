#ifndef DIPATHS_MULTICUT_HPP
#define DIPATHS_MULTICUT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "dipaths/bipartite.hpp"
#include "dipaths/errors.hpp"
#include "dipaths/star.hpp"
#include "dipaths/steps.hpp"
#include "dipaths/tree.hpp"

namespace dipaths {

// Per vertex v, the dipaths through the father arc whose selection would
// spoil a maximum arc-disjoint packing of the subtree below v.
struct BadSets {
    std::vector<std::vector<int>> bad;  // sorted path ids per vertex

    bool is_bad(int v, int path) const {
        return std::binary_search(bad[v].begin(), bad[v].end(), path);
    }
};

// Paired witness: pairwise arc-disjoint dipaths and an arc set meeting every
// dipath, of equal cardinality.
struct MulticutCertificate {
    std::vector<int> stable_set;  // path ids
    std::vector<int> cut;         // arc ids
};

namespace detail {

inline void kill_incident(const BipartiteMultigraph& B, BipVertex x, std::vector<char>& alive) {
    for (int e : B.incidence(x)) alive[e] = 0;
}

// Replace keyless (dummy) cover members by the real endpoint of their unique
// edge; a minimum cover never needs both, so the size is preserved.
inline void realize_cover(const BipartiteMultigraph& B, VertexCover& cover) {
    for (BipVertex& m : cover.members) {
        if (B.arc_of(m) >= 0) continue;
        const auto& inc = B.incidence(m);
        if (inc.size() != 1)
            throw Error(ErrorCode::InternalInvariantViolation, "dummy vertex with several edges");
        m = B.other_endpoint(inc[0], m);
        if (B.arc_of(m) < 0)
            throw Error(ErrorCode::InternalInvariantViolation, "edge with two dummy endpoints");
    }
    for (std::size_t i = 0; i < cover.members.size(); ++i)
        for (std::size_t j = i + 1; j < cover.members.size(); ++j)
            if (cover.members[i] == cover.members[j])
                throw Error(ErrorCode::InternalInvariantViolation, "cover lost a member");
}

}  // namespace detail

// Upward pass: in bottom-up order decide, for each dipath through a father
// arc, whether taking it would break the packing of the subtree. A path with
// its endpoint at v is never bad; a path already bad at the child below stays
// bad; the rest are tested on the star's bipartite graph with the father-arc
// vertex removed.
inline BadSets compute_bad_sets(const RootedTree& rooted, const PathIndex& index) {
    const DirectedTree& tree = rooted.tree;
    BadSets bs;
    bs.bad.assign(tree.vertex_count(), {});
    std::vector<int> stamp(index.path_count(), -1), ban(index.path_count(), -1);
    std::vector<int> scope;

    for (int v : rooted.order) {
        if (v == rooted.root) continue;
        const auto& qv = index.q_set(rooted, v);
        if (qv.empty()) continue;
        detail::gather_nonbad_below(rooted, index, bs.bad, v, stamp, ban, scope);

        BipartiteMultigraph B;
        Matching M;
        std::pair<std::vector<char>, std::vector<char>> avoid;
        if (!scope.empty()) {
            B = build_star_bipartite(tree, v, scope, index);
            std::vector<char> alive(B.edge_count(), 1);
            int pa = rooted.parent_arc[v];
            int xl = B.left_for_arc(pa), xr = B.right_for_arc(pa);
            if (xl >= 0) detail::kill_incident(B, {Side::left, xl}, alive);
            if (xr >= 0) detail::kill_incident(B, {Side::right, xr}, alive);
            M = max_matching(B, -1, &alive);
            avoid = avoidable_vertices(B, M, &alive);
        }

        auto& out = bs.bad[v];
        for (const ArcHit& hit : qv) {
            steps::add();
            const Dipath& p = index.paths[hit.path];
            int below = detail::vertex_below_on_path(p, hit.pos, v);
            if (below < 0) continue;  // endpoint at v, never bad
            if (bs.is_bad(below, hit.path)) {
                out.push_back(hit.path);
                continue;
            }
            BipVertex z = B.vertex_for_arc(rooted.parent_arc[below]);
            bool avoidable =
                z.side == Side::left ? avoid.first[z.index] != 0 : avoid.second[z.index] != 0;
            if (!avoidable) out.push_back(hit.path);
        }
        std::sort(out.begin(), out.end());
    }
    return bs;
}

// Downward pass: starting at the root, match the non-bad dipaths of each star
// and turn the minimum vertex covers into cut arcs. When a dipath fixed
// earlier runs through the star, the matching is forced through it and the
// anchored cover keeps the father arc out of the cut.
inline MulticutCertificate multicut(const RootedTree& rooted, const PathIndex& index,
                                    const BadSets& bs) {
    const DirectedTree& tree = rooted.tree;
    MulticutCertificate cert;
    std::vector<char> fixed(index.path_count(), 0);
    std::vector<int> stamp(index.path_count(), -1), ban(index.path_count(), -1);
    std::vector<int> qstamp(index.path_count(), -1), qpos(index.path_count(), -1);
    std::vector<int> scope;

    for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
        int v = *it;
        detail::gather_nonbad_below(rooted, index, bs.bad, v, stamp, ban, scope);
        int pa = rooted.parent_arc[v];
        for (const ArcHit& hit : index.q_set(rooted, v)) {
            steps::add();
            qstamp[hit.path] = v;
            qpos[hit.path] = hit.pos;
            if (stamp[hit.path] != v) {
                stamp[hit.path] = v;
                scope.push_back(hit.path);
            }
        }
        if (scope.empty()) continue;

        BipartiteMultigraph B = build_star_bipartite(tree, v, scope, index);
        int f_edge = -1;
        for (std::size_t i = 0; i < scope.size(); ++i) {
            if (!fixed[scope[i]]) continue;
            if (f_edge >= 0)
                throw Error(ErrorCode::InternalInvariantViolation,
                            "two fixed dipaths in one star");
            f_edge = static_cast<int>(i);
        }

        if (f_edge >= 0) {
            if (pa < 0 || bs.is_bad(v, scope[f_edge]))
                throw Error(ErrorCode::InternalInvariantViolation, "fixed dipath must be non-bad");
            BipVertex x = B.vertex_for_arc(pa);
            if (!B.incident(f_edge, x))
                throw Error(ErrorCode::InternalInvariantViolation,
                            "fixed dipath misses the father arc");
            Matching M = max_matching(B, f_edge);
            VertexCover cover = min_cover_with_anchor(B, M, x);
            detail::realize_cover(B, cover);
            int added = 0;
            for (const BipVertex& m : cover.members) {
                if (m == x) continue;
                cert.cut.push_back(B.arc_of(m));
                ++added;
            }
            if (added != M.size() - 1 || cover.size() != M.size())
                throw Error(ErrorCode::InternalInvariantViolation, "anchored cover out of balance");
            for (int e : M.edges) {
                if (e == f_edge) continue;
                cert.stable_set.push_back(B.edge(e).path);
                fixed[B.edge(e).path] = 1;
            }
        } else {
            // No fixed dipath. Father-arc edges never enter the matching;
            // the ones that went bad right here stay in the cover graph so
            // the minimum cover cuts them, while paths already bad further
            // down disappear completely (their cut lives below).
            std::vector<char> cover_alive(B.edge_count(), 1);
            std::vector<char> match_alive(B.edge_count(), 1);
            int xl = pa >= 0 ? B.left_for_arc(pa) : -1;
            int xr = pa >= 0 ? B.right_for_arc(pa) : -1;
            if (xl >= 0 || xr >= 0) {
                BipVertex x = xl >= 0 ? BipVertex{Side::left, xl} : BipVertex{Side::right, xr};
                for (int e : B.incidence(x)) {
                    match_alive[e] = 0;
                    int pid = B.edge(e).path;
                    if (qstamp[pid] != v)
                        throw Error(ErrorCode::InternalInvariantViolation,
                                    "father-arc edge without a Q_v hit");
                    int below = detail::vertex_below_on_path(index.paths[pid], qpos[pid], v);
                    bool directly_bad =
                        bs.is_bad(v, pid) && (below < 0 || !bs.is_bad(below, pid));
                    if (!directly_bad) cover_alive[e] = 0;
                }
            }
            Matching M = max_matching(B, -1, &match_alive);
            VertexCover cover = min_vertex_cover(B, M, &cover_alive);
            if (cover.size() != M.size())
                throw Error(ErrorCode::InternalInvariantViolation,
                            "cover and matching sizes differ");
            detail::realize_cover(B, cover);
            for (const BipVertex& m : cover.members) cert.cut.push_back(B.arc_of(m));
            for (int e : M.edges) {
                cert.stable_set.push_back(B.edge(e).path);
                fixed[B.edge(e).path] = 1;
            }
        }
    }

    std::sort(cert.stable_set.begin(), cert.stable_set.end());
    std::sort(cert.cut.begin(), cert.cut.end());
    if (std::adjacent_find(cert.stable_set.begin(), cert.stable_set.end()) !=
            cert.stable_set.end() ||
        std::adjacent_find(cert.cut.begin(), cert.cut.end()) != cert.cut.end())
        throw Error(ErrorCode::InternalInvariantViolation, "certificate repeats an element");
    if (cert.stable_set.size() != cert.cut.size())
        throw Error(ErrorCode::InternalInvariantViolation, "certificate sizes differ");

    std::vector<char> used(tree.arc_count(), 0);
    for (int p : cert.stable_set)
        for (int a : index.paths[p].arcs) {
            if (used[a])
                throw Error(ErrorCode::InternalInvariantViolation, "selected dipaths share an arc");
            used[a] = 1;
        }
    std::vector<char> in_cut(tree.arc_count(), 0);
    for (int a : cert.cut) in_cut[a] = 1;
    for (const Dipath& p : index.paths) {
        bool hit = false;
        for (int a : p.arcs)
            if (in_cut[a]) {
                hit = true;
                break;
            }
        if (!hit)
            throw Error(ErrorCode::InternalInvariantViolation, "a dipath escapes the cut");
    }
    return cert;
}

inline MulticutCertificate multicut(const RootedTree& rooted, const PathIndex& index) {
    return multicut(rooted, index, compute_bad_sets(rooted, index));
}

}  // namespace dipaths

#endif
