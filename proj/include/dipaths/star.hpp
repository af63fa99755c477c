#ifndef DIPATHS_STAR_HPP
#define DIPATHS_STAR_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "dipaths/bipartite.hpp"
#include "dipaths/errors.hpp"
#include "dipaths/steps.hpp"
#include "dipaths/tree.hpp"

namespace dipaths {

// The local encoding at a star: every in-scope dipath, restricted to the
// star around `center`, becomes one edge of a bipartite multigraph. Left
// vertices stand for arcs entering the center, right vertices for arcs
// leaving it. A path that starts (resp. ends) at the center gets a fresh
// dummy left (resp. right) endpoint of its own. Edge i corresponds to
// path_ids[i], and each edge's `path` field carries the dipath id.
inline BipartiteMultigraph build_star_bipartite(const DirectedTree& tree, int center,
                                                const std::vector<int>& path_ids,
                                                const PathIndex& index) {
    if (center < 0 || center >= tree.vertex_count())
        throw Error(ErrorCode::BadVertexId, "star center out of range");
    std::unordered_map<int, int> pos_at_center;
    pos_at_center.reserve(index.by_vertex[center].size());
    for (const VertexHit& hit : index.by_vertex[center]) pos_at_center[hit.path] = hit.pos;

    BipartiteMultigraph B;
    for (int pid : path_ids) {
        steps::add();
        auto it = pos_at_center.find(pid);
        if (it == pos_at_center.end())
            throw Error(ErrorCode::PathNotThroughCenter,
                        "path " + std::to_string(pid) + " misses vertex " + std::to_string(center));
        const Dipath& p = index.paths[pid];
        int pos = it->second;
        int in_arc = pos > 0 ? p.arcs[pos - 1] : -1;
        int out_arc = pos < p.length() ? p.arcs[pos] : -1;
        int l, r;
        if (in_arc >= 0) {
            l = B.left_for_arc(in_arc);
            if (l < 0) l = B.add_left(in_arc);
        } else {
            l = B.add_left();
        }
        if (out_arc >= 0) {
            r = B.right_for_arc(out_arc);
            if (r < 0) r = B.add_right(out_arc);
        } else {
            r = B.add_right();
        }
        B.add_edge(l, r, pid);
    }
    return B;
}

namespace detail {

// The vertex following v on p below v (away from the father reached through
// the arc at arc_pos), or -1 when v is an endpoint of p.
inline int vertex_below_on_path(const Dipath& p, int arc_pos, int v) {
    if (p.vertices[arc_pos] == v) return arc_pos > 0 ? p.vertices[arc_pos - 1] : -1;
    return arc_pos + 2 < static_cast<int>(p.vertices.size()) ? p.vertices[arc_pos + 2] : -1;
}

// Union of Q_w over the children w of v, minus the union of the dropped sets
// of those children: a path dropped under one child is out entirely, even
// where its other leg descends into a clean child. Deduplicated (a path whose
// apex is v shows up under two children). `stamp` and `ban` are reusable
// path-count sized scratch arrays.
inline void gather_nonbad_below(const RootedTree& rooted, const PathIndex& index,
                                const std::vector<std::vector<int>>& dropped, int v,
                                std::vector<int>& stamp, std::vector<int>& ban,
                                std::vector<int>& out) {
    out.clear();
    for (int w : rooted.children[v])
        for (int pid : dropped[w]) {
            ban[pid] = v;
            steps::add();
        }
    for (int w : rooted.children[v]) {
        for (const ArcHit& hit : index.q_set(rooted, w)) {
            steps::add();
            if (ban[hit.path] == v || stamp[hit.path] == v) continue;
            stamp[hit.path] = v;
            out.push_back(hit.path);
        }
    }
}

}  // namespace detail

}  // namespace dipaths

#endif
