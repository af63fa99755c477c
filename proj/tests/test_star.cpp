#include <catch2/catch_amalgamated.hpp>

#include "dipaths/star.hpp"
#include "dipaths/steps.hpp"
#include "helpers.hpp"

using namespace dipaths;

namespace {

testutil::TestInstance star_instance(const std::vector<std::pair<int, int>>& arcs,
                                     const std::vector<std::vector<int>>& paths, int root = 0) {
    Instance inst;
    inst.n = 0;
    for (auto [t, h] : arcs) inst.n = std::max({inst.n, t + 1, h + 1});
    inst.arcs = arcs;
    inst.path_vertices = paths;
    inst.root = root;
    return testutil::build(inst);
}

}  // namespace

TEST_CASE("parallel dipaths become parallel edges") {
    auto t = star_instance({{1, 0}, {0, 2}}, {{1, 0, 2}, {1, 0, 2}});
    BipartiteMultigraph B = build_star_bipartite(t.tree, 0, {0, 1}, t.index);
    REQUIRE(B.left_count() == 1);
    REQUIRE(B.right_count() == 1);
    REQUIRE(B.edge_count() == 2);
    REQUIRE(B.edge(0).left == B.edge(1).left);
    REQUIRE(B.edge(0).right == B.edge(1).right);
    REQUIRE(B.edge(0).path == 0);
    REQUIRE(B.edge(1).path == 1);
}

TEST_CASE("a dipath ending at the center gets a fresh dummy endpoint") {
    auto t = star_instance({{1, 0}, {0, 2}}, {{1, 0}});
    BipartiteMultigraph B = build_star_bipartite(t.tree, 0, {0}, t.index);
    REQUIRE(B.edge_count() == 1);
    REQUIRE(B.left_arc(B.edge(0).left) == 0);    // keyed by the in-arc
    REQUIRE(B.right_arc(B.edge(0).right) == -1); // dummy sink

    // dummies are never shared
    auto t2 = star_instance({{1, 0}, {0, 2}}, {{1, 0}, {1, 0}});
    BipartiteMultigraph B2 = build_star_bipartite(t2.tree, 0, {0, 1}, t2.index);
    REQUIRE(B2.edge(0).right != B2.edge(1).right);
}

TEST_CASE("paths not through the center are rejected") {
    auto t = star_instance({{0, 1}, {1, 2}}, {{1, 2}});
    REQUIRE_ERROR(build_star_bipartite(t.tree, 0, {0}, t.index), ErrorCode::PathNotThroughCenter);
}

TEST_CASE("vertex degrees equal arc loads on random stars") {
    for (std::uint32_t seed = 1; seed <= 15; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n = 5;
        cfg.p = 5;
        cfg.shape = TreeShape::star;
        auto t = testutil::build(generate_instance(cfg));
        std::vector<int> scope;
        for (const VertexHit& hit : t.index.by_vertex[0]) scope.push_back(hit.path);
        if (scope.empty()) continue;
        BipartiteMultigraph B = build_star_bipartite(t.tree, 0, scope, t.index);

        // count in-scope paths per star arc directly
        std::vector<int> load(t.tree.arc_count(), 0);
        for (int pid : scope)
            for (int a : t.paths[pid].arcs) ++load[a];
        for (int i = 0; i < B.left_count(); ++i)
            if (B.left_arc(i) >= 0)
                REQUIRE(static_cast<int>(B.left_incidence(i).size()) == load[B.left_arc(i)]);
            else
                REQUIRE(B.left_incidence(i).size() == 1);
        for (int j = 0; j < B.right_count(); ++j)
            if (B.right_arc(j) >= 0)
                REQUIRE(static_cast<int>(B.right_incidence(j).size()) == load[B.right_arc(j)]);
            else
                REQUIRE(B.right_incidence(j).size() == 1);

        // two in-scope dipaths share a star arc iff their edges share an endpoint
        for (std::size_t i = 0; i < scope.size(); ++i)
            for (std::size_t j = i + 1; j < scope.size(); ++j) {
                bool share_arc = false;
                for (int a : t.paths[scope[i]].arcs)
                    for (int b : t.paths[scope[j]].arcs)
                        if (a == b) share_arc = true;
                bool share_vertex = B.edge(i).left == B.edge(j).left ||
                                    B.edge(i).right == B.edge(j).right;
                REQUIRE(share_arc == share_vertex);
            }
    }
}

TEST_CASE("star construction is linear in the number of in-scope paths") {
    for (std::uint32_t seed = 30; seed <= 40; ++seed) {
        auto t = testutil::random_instance(seed, 12, 20);
        for (int v = 0; v < t.tree.vertex_count(); ++v) {
            std::vector<int> scope;
            for (const VertexHit& hit : t.index.by_vertex[v]) scope.push_back(hit.path);
            if (scope.empty()) continue;
            steps::reset();
            build_star_bipartite(t.tree, v, scope, t.index);
            REQUIRE(steps::total() <= 8 * scope.size() + 8);
        }
    }
}
