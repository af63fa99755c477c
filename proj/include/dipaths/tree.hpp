#ifndef DIPATHS_TREE_HPP
#define DIPATHS_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dipaths/errors.hpp"
#include "dipaths/steps.hpp"

namespace dipaths {

// An arc incident to a vertex, with its direction seen from that vertex.
struct IncidentArc {
    int arc;
    bool outgoing;
};

// A directed tree on n vertices with n-1 arcs. Arc ids are positions in the
// arc list and stay stable for the lifetime of the object. Immutable after
// build().
class DirectedTree {
public:
    DirectedTree() = default;

    static DirectedTree build(int n, const std::vector<std::pair<int, int>>& arcs) {
        if (n <= 0)
            throw Error(ErrorCode::NotATree, "vertex count must be positive");
        if (static_cast<int>(arcs.size()) != n - 1)
            throw Error(ErrorCode::NotATree,
                        "expected " + std::to_string(n - 1) + " arcs, got " +
                            std::to_string(arcs.size()));

        DirectedTree t;
        t.n_ = n;
        t.tails_.reserve(arcs.size());
        t.heads_.reserve(arcs.size());
        t.adjacency_.assign(n, {});

        std::vector<std::vector<int>> seen(n);  // undirected neighbor lists for dup check
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            auto [tail, head] = arcs[i];
            if (tail < 0 || tail >= n || head < 0 || head >= n)
                throw Error(ErrorCode::BadVertexId,
                            "arc " + std::to_string(i) + " references vertex out of range");
            if (tail == head)
                throw Error(ErrorCode::SelfLoop, "arc " + std::to_string(i) + " is a self-loop");
            auto& lo = seen[std::min(tail, head)];
            if (std::find(lo.begin(), lo.end(), std::max(tail, head)) != lo.end())
                throw Error(ErrorCode::DuplicateArc,
                            "vertices " + std::to_string(tail) + " and " + std::to_string(head) +
                                " are joined twice");
            lo.push_back(std::max(tail, head));
            int id = static_cast<int>(i);
            t.tails_.push_back(tail);
            t.heads_.push_back(head);
            t.adjacency_[tail].push_back({id, true});
            t.adjacency_[head].push_back({id, false});
        }

        // n-1 arcs without duplicates: connected iff acyclic.
        std::vector<char> visited(n, 0);
        std::vector<int> stack = {0};
        visited[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const IncidentArc& ia : t.adjacency_[v]) {
                int w = ia.outgoing ? t.heads_[ia.arc] : t.tails_[ia.arc];
                if (!visited[w]) {
                    visited[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != n)
            throw Error(ErrorCode::NotATree, "graph is disconnected (or contains a cycle)");
        return t;
    }

    int vertex_count() const { return n_; }
    int arc_count() const { return n_ - 1; }
    int tail(int a) const { return tails_[a]; }
    int head(int a) const { return heads_[a]; }
    const std::vector<IncidentArc>& incident(int v) const { return adjacency_[v]; }

    // Arc joining u and v in either direction, or -1.
    int arc_between(int u, int v) const {
        for (const IncidentArc& ia : adjacency_[u]) {
            int w = ia.outgoing ? heads_[ia.arc] : tails_[ia.arc];
            if (w == v) return ia.arc;
        }
        return -1;
    }

    // The endpoint of arc a that is not v.
    int other_end(int a, int v) const { return tails_[a] == v ? heads_[a] : tails_[a]; }

private:
    int n_ = 0;
    std::vector<int> tails_, heads_;
    std::vector<std::vector<IncidentArc>> adjacency_;
};

// A direction-respecting path, stored as the visited vertex sequence plus the
// derived arc ids. Always has at least one arc.
struct Dipath {
    int id = -1;
    std::vector<int> vertices;
    std::vector<int> arcs;

    int source() const { return vertices.front(); }
    int sink() const { return vertices.back(); }
    int length() const { return static_cast<int>(arcs.size()); }
};

inline Dipath make_dipath(const DirectedTree& tree, int id, std::vector<int> vertices) {
    if (vertices.size() < 2)
        throw Error(ErrorCode::NotADipath, "a dipath needs at least one arc");
    Dipath p;
    p.id = id;
    std::vector<char> seen(tree.vertex_count(), 0);
    for (int v : vertices) {
        if (v < 0 || v >= tree.vertex_count())
            throw Error(ErrorCode::BadVertexId, "path vertex " + std::to_string(v) + " out of range");
        if (seen[v])
            throw Error(ErrorCode::NotADipath, "path visits vertex " + std::to_string(v) + " twice");
        seen[v] = 1;
    }
    p.arcs.reserve(vertices.size() - 1);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        int a = tree.arc_between(vertices[i], vertices[i + 1]);
        if (a < 0)
            throw Error(ErrorCode::NotADipath,
                        "no tree arc joins " + std::to_string(vertices[i]) + " and " +
                            std::to_string(vertices[i + 1]));
        if (tree.tail(a) != vertices[i])
            throw Error(ErrorCode::NotADipath,
                        "arc between " + std::to_string(vertices[i]) + " and " +
                            std::to_string(vertices[i + 1]) + " points the other way");
        p.arcs.push_back(a);
    }
    p.vertices = std::move(vertices);
    return p;
}

// The unique source->sink tree path, provided every traversed arc points
// forward along it.
inline Dipath resolve_dipath(const DirectedTree& tree, int source, int sink, int id = -1) {
    if (source < 0 || source >= tree.vertex_count() || sink < 0 || sink >= tree.vertex_count())
        throw Error(ErrorCode::BadVertexId, "path endpoint out of range");
    if (source == sink)
        throw Error(ErrorCode::NotADipath, "source and sink coincide");

    std::vector<int> prev(tree.vertex_count(), -1);
    std::vector<int> queue = {source};
    prev[source] = source;
    for (std::size_t qi = 0; qi < queue.size() && prev[sink] == -1; ++qi) {
        int v = queue[qi];
        for (const IncidentArc& ia : tree.incident(v)) {
            int w = tree.other_end(ia.arc, v);
            if (prev[w] == -1) {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> vertices;
    for (int v = sink; v != source; v = prev[v]) vertices.push_back(v);
    vertices.push_back(source);
    std::reverse(vertices.begin(), vertices.end());
    return make_dipath(tree, id, std::move(vertices));
}

// A rooted view of a directed tree: father/children arrays plus a bottom-up
// order (every vertex appears after all of its children).
struct RootedTree {
    DirectedTree tree;
    int root = 0;
    std::vector<int> father;      // -1 at root
    std::vector<int> parent_arc;  // arc joining v and father(v); -1 at root
    std::vector<std::vector<int>> children;
    std::vector<int> order;  // bottom-up
};

inline RootedTree root_tree(const DirectedTree& tree, int r) {
    if (r < 0 || r >= tree.vertex_count())
        throw Error(ErrorCode::BadVertexId, "root " + std::to_string(r) + " out of range");
    RootedTree rt;
    rt.tree = tree;
    rt.root = r;
    int n = tree.vertex_count();
    rt.father.assign(n, -1);
    rt.parent_arc.assign(n, -1);
    rt.children.assign(n, {});
    std::vector<int> bfs = {r};
    std::vector<char> visited(n, 0);
    visited[r] = 1;
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
        int v = bfs[qi];
        for (const IncidentArc& ia : tree.incident(v)) {
            int w = tree.other_end(ia.arc, v);
            if (!visited[w]) {
                visited[w] = 1;
                rt.father[w] = v;
                rt.parent_arc[w] = ia.arc;
                rt.children[v].push_back(w);
                bfs.push_back(w);
            }
        }
    }
    rt.order.assign(bfs.rbegin(), bfs.rend());
    return rt;
}

struct VertexHit {
    int path;
    int pos;  // index of the vertex within the path's vertex sequence
};

struct ArcHit {
    int path;
    int pos;  // index of the arc within the path's arc sequence
};

// Per-vertex and per-arc lookup of the dipaths that use them. Q_v (paths
// through the father arc of v) is exposed through q_set(). Stores its own
// copy of the path collection so the per-star passes are self-contained.
struct PathIndex {
    std::vector<Dipath> paths;
    std::vector<std::vector<VertexHit>> by_vertex;
    std::vector<std::vector<ArcHit>> by_arc;

    int path_count() const { return static_cast<int>(paths.size()); }

    const std::vector<ArcHit>& q_set(const RootedTree& rooted, int v) const {
        static const std::vector<ArcHit> empty;
        int pa = rooted.parent_arc[v];
        return pa < 0 ? empty : by_arc[pa];
    }
};

inline PathIndex index_paths(const RootedTree& rooted, const std::vector<Dipath>& paths) {
    const DirectedTree& tree = rooted.tree;
    PathIndex idx;
    idx.paths = paths;
    idx.by_vertex.assign(tree.vertex_count(), {});
    idx.by_arc.assign(tree.arc_count(), {});
    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
        const Dipath& p = paths[pi];
        if (p.arcs.empty() || p.vertices.size() != p.arcs.size() + 1)
            throw Error(ErrorCode::PathTreeMismatch,
                        "path " + std::to_string(pi) + " is malformed");
        for (std::size_t k = 0; k < p.arcs.size(); ++k) {
            int a = p.arcs[k];
            if (a < 0 || a >= tree.arc_count() || tree.tail(a) != p.vertices[k] ||
                tree.head(a) != p.vertices[k + 1])
                throw Error(ErrorCode::PathTreeMismatch,
                            "path " + std::to_string(pi) + " does not follow the tree arcs");
            idx.by_arc[a].push_back({static_cast<int>(pi), static_cast<int>(k)});
            steps::add();
        }
        for (std::size_t k = 0; k < p.vertices.size(); ++k) {
            idx.by_vertex[p.vertices[k]].push_back({static_cast<int>(pi), static_cast<int>(k)});
            steps::add();
        }
    }
    return idx;
}

}  // namespace dipaths

#endif
