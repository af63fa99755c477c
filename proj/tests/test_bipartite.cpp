#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dipaths/bipartite.hpp"
#include "dipaths/oracle.hpp"
#include "helpers.hpp"

using namespace dipaths;

namespace {

bool coloring_proper(const BipartiteMultigraph& B, const std::vector<int>& colors, int palette) {
    for (int c : colors)
        if (c < 0 || c >= palette) return false;
    for (int i = 0; i < B.left_count(); ++i) {
        const auto& inc = B.left_incidence(i);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                if (colors[inc[a]] == colors[inc[b]]) return false;
    }
    for (int j = 0; j < B.right_count(); ++j) {
        const auto& inc = B.right_incidence(j);
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                if (colors[inc[a]] == colors[inc[b]]) return false;
    }
    return true;
}

BipartiteMultigraph degree_capped_graph(std::mt19937& rng, int nl, int nr, int edges, int cap) {
    BipartiteMultigraph B;
    for (int i = 0; i < nl; ++i) B.add_left();
    for (int j = 0; j < nr; ++j) B.add_right();
    std::vector<int> dl(nl, 0), dr(nr, 0);
    int added = 0, attempts = 0;
    while (added < edges && attempts < edges * 50) {
        ++attempts;
        int u = static_cast<int>(rng() % static_cast<unsigned>(nl));
        int w = static_cast<int>(rng() % static_cast<unsigned>(nr));
        if (dl[u] >= cap || dr[w] >= cap) continue;
        B.add_edge(u, w);
        ++dl[u], ++dr[w], ++added;
    }
    return B;
}

}  // namespace

TEST_CASE("max_matching on tiny graphs") {
    BipartiteMultigraph k22;
    k22.add_left();
    k22.add_left();
    k22.add_right();
    k22.add_right();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) k22.add_edge(i, j);
    REQUIRE(max_matching(k22).size() == 2);

    BipartiteMultigraph single;
    single.add_left();
    single.add_right();
    single.add_edge(0, 0);
    Matching forced = max_matching(single, 0);
    REQUIRE(forced.edges == std::vector<int>{0});

    BipartiteMultigraph empty;
    REQUIRE(max_matching(empty).size() == 0);
}

TEST_CASE("max_matching equals the brute-force maximum") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 150; ++iter) {
        BipartiteMultigraph B = testutil::random_bipartite(rng, 7, 14);
        std::size_t best = 0;
        for (const auto& m : oracle::enumerate_matchings(B)) best = std::max(best, m.size());
        Matching m = max_matching(B);
        REQUIRE(m.edges.size() == best);
        // it is a matching
        std::vector<int> dl(B.left_count(), 0), dr(B.right_count(), 0);
        for (int e : m.edges) {
            REQUIRE(++dl[B.edge(e).left] == 1);
            REQUIRE(++dr[B.edge(e).right] == 1);
        }
    }
}

TEST_CASE("forced matchings are maximum among those containing the edge") {
    std::mt19937 rng(43);
    for (int iter = 0; iter < 100; ++iter) {
        BipartiteMultigraph B = testutil::random_bipartite(rng, 6, 10);
        if (B.edge_count() == 0) continue;
        int f = static_cast<int>(rng() % static_cast<unsigned>(B.edge_count()));
        Matching m = max_matching(B, f);
        REQUIRE(m.contains(f));
        std::size_t best = 0;
        for (const auto& mm : oracle::enumerate_matchings(B))
            if (std::find(mm.begin(), mm.end(), f) != mm.end()) best = std::max(best, mm.size());
        REQUIRE(m.edges.size() == best);
    }
}

TEST_CASE("edge_in_some_max_matching matches enumeration") {
    // middle edge of a three-edge path is in no maximum matching
    BipartiteMultigraph p4;
    p4.add_left();   // b
    p4.add_left();   // d
    p4.add_right();  // a
    p4.add_right();  // c
    int ab = p4.add_edge(0, 0);
    int bc = p4.add_edge(0, 1);
    int cd = p4.add_edge(1, 1);
    Matching m = max_matching(p4);
    REQUIRE(m.size() == 2);
    REQUIRE(edge_in_some_max_matching(p4, m, ab));
    REQUIRE_FALSE(edge_in_some_max_matching(p4, m, bc));
    REQUIRE(edge_in_some_max_matching(p4, m, cd));
    REQUIRE_ERROR(edge_in_some_max_matching(p4, m, 17), ErrorCode::EdgeNotInGraph);

    std::mt19937 rng(44);
    for (int iter = 0; iter < 120; ++iter) {
        BipartiteMultigraph B = testutil::random_bipartite(rng, 5, 12);
        Matching mm = max_matching(B);
        auto maxima = oracle::enumerate_maximum_matchings(B);
        for (int e = 0; e < B.edge_count(); ++e) {
            bool brute = false;
            for (const auto& one : maxima)
                if (std::find(one.begin(), one.end(), e) != one.end()) brute = true;
            REQUIRE(edge_in_some_max_matching(B, mm, e) == brute);
        }
    }
}

TEST_CASE("matching membership agrees with the matching-number recomputation") {
    // second route: e usable iff removing both endpoints drops nu by one
    std::mt19937 rng(440);
    for (int iter = 0; iter < 150; ++iter) {
        BipartiteMultigraph B = testutil::random_bipartite(rng, 6, 14);
        Matching mm = max_matching(B);
        for (int e = 0; e < B.edge_count(); ++e) {
            std::vector<char> alive(B.edge_count(), 1);
            for (int de : B.left_incidence(B.edge(e).left)) alive[de] = 0;
            for (int de : B.right_incidence(B.edge(e).right)) alive[de] = 0;
            int without = max_matching(B, -1, &alive).size();
            bool via_nu = without == mm.size() - 1;
            REQUIRE(edge_in_some_max_matching(B, mm, e) == via_nu);
        }
    }
}

TEST_CASE("anchored cover on hand examples") {
    BipartiteMultigraph single;
    single.add_left();
    single.add_right();
    single.add_edge(0, 0);
    Matching m = max_matching(single);
    VertexCover c = min_cover_with_anchor(single, m, {Side::right, 0});
    REQUIRE(c.size() == 1);
    REQUIRE(c.contains({Side::right, 0}));

    // star at x: three left neighbors, every edge lies in some maximum
    // matching, so property (ii) holds vacuously and C = {x}
    BipartiteMultigraph star;
    star.add_left();
    star.add_left();
    star.add_left();
    star.add_right();
    for (int i = 0; i < 3; ++i) star.add_edge(i, 0);
    Matching ms = max_matching(star);
    REQUIRE(ms.size() == 1);
    VertexCover cs = min_cover_with_anchor(star, ms, {Side::right, 0});
    REQUIRE(cs.size() == 1);
    REQUIRE(cs.contains({Side::right, 0}));
}

TEST_CASE("anchored cover rejects avoidable anchors") {
    BipartiteMultigraph two;
    two.add_left();
    two.add_right();
    two.add_right();
    two.add_edge(0, 0);
    two.add_edge(0, 1);
    Matching m = max_matching(two);
    REQUIRE_ERROR(min_cover_with_anchor(two, m, {Side::right, 0}),
                  ErrorCode::AnchorNotInEveryMaxMatching);
}

TEST_CASE("anchored cover properties against exhaustive matchings") {
    std::mt19937 rng(45);
    int tested = 0;
    for (int iter = 0; iter < 400 && tested < 150; ++iter) {
        BipartiteMultigraph B = testutil::random_bipartite(rng, 6, 12);
        if (B.edge_count() == 0) continue;
        Matching m = max_matching(B);
        auto maxima = oracle::enumerate_maximum_matchings(B);

        // anchors: vertices covered by every maximum matching
        std::vector<BipVertex> anchors;
        for (int side = 0; side < 2; ++side) {
            int count = side == 0 ? B.left_count() : B.right_count();
            for (int i = 0; i < count; ++i) {
                BipVertex v{side == 0 ? Side::left : Side::right, i};
                bool always = !maxima.empty();
                for (const auto& one : maxima) {
                    bool covered = false;
                    for (int e : one)
                        if (B.incident(e, v)) covered = true;
                    if (!covered) always = false;
                }
                if (always && B.degree(v) > 0) anchors.push_back(v);
            }
        }
        if (anchors.empty()) continue;
        ++tested;
        BipVertex x = anchors[rng() % anchors.size()];
        VertexCover cover = min_cover_with_anchor(B, m, x);

        REQUIRE(cover.size() == m.size());
        REQUIRE(cover.contains(x));
        for (int e = 0; e < B.edge_count(); ++e) {
            bool covered = cover.contains(B.endpoint(e, Side::left)) ||
                           cover.contains(B.endpoint(e, Side::right));
            REQUIRE(covered);
        }
        for (int e : B.incidence(x)) {
            bool in_some = false;
            for (const auto& one : maxima)
                if (std::find(one.begin(), one.end(), e) != one.end()) in_some = true;
            if (!in_some) REQUIRE(cover.contains(B.other_endpoint(e, x)));
        }
    }
    REQUIRE(tested >= 100);
}

TEST_CASE("plain Konig cover is minimum and covers") {
    std::mt19937 rng(46);
    for (int iter = 0; iter < 150; ++iter) {
        BipartiteMultigraph B = testutil::random_bipartite(rng, 6, 12);
        Matching m = max_matching(B);
        VertexCover cover = min_vertex_cover(B, m);
        REQUIRE(cover.size() == m.size());
        for (int e = 0; e < B.edge_count(); ++e)
            REQUIRE((cover.contains(B.endpoint(e, Side::left)) ||
                     cover.contains(B.endpoint(e, Side::right))));
    }
}

TEST_CASE("edge coloring on tiny graphs") {
    BipartiteMultigraph parallel;
    parallel.add_left();
    parallel.add_right();
    parallel.add_edge(0, 0);
    parallel.add_edge(0, 0);
    std::vector<int> c = edge_color_extend(parallel, 2, {});
    REQUIRE(c.size() == 2);
    REQUIRE(c[0] != c[1]);
    REQUIRE(std::min(c[0], c[1]) == 0);
    REQUIRE(std::max(c[0], c[1]) == 1);

    BipartiteMultigraph single;
    single.add_left();
    single.add_right();
    single.add_edge(0, 0);
    std::vector<int> kept = edge_color_extend(single, 4, {{0, 3}});
    REQUIRE(kept == std::vector<int>{3});

    REQUIRE_ERROR(edge_color_extend(parallel, 1, {}), ErrorCode::PaletteTooSmall);
}

TEST_CASE("edge coloring validates the precoloring") {
    BipartiteMultigraph B;
    B.add_left();
    B.add_left();
    B.add_right();
    B.add_right();
    int e0 = B.add_edge(0, 0);
    int e1 = B.add_edge(0, 1);
    int e2 = B.add_edge(1, 1);
    REQUIRE_ERROR(edge_color_extend(B, 3, {{e0, 0}, {e2, 1}}),
                  ErrorCode::PrecoloringNotStarShaped);
    REQUIRE_ERROR(edge_color_extend(B, 3, {{e0, 0}, {e1, 0}}), ErrorCode::PrecoloringConflict);
    REQUIRE_ERROR(edge_color_extend(B, 3, {{e0, 0}, {e0, 1}}), ErrorCode::PrecoloringConflict);
    REQUIRE_ERROR(edge_color_extend(B, 3, {{e0, 7}}), ErrorCode::PrecoloringConflict);

    // e0 and e1 share the left vertex: a valid one-vertex precoloring
    std::vector<int> c = edge_color_extend(B, 3, {{e0, 2}, {e1, 0}});
    REQUIRE(c[e0] == 2);
    REQUIRE(c[e1] == 0);
    REQUIRE(coloring_proper(B, c, 3));
}

TEST_CASE("edge coloring with a one-vertex precoloring stays proper") {
    std::mt19937 rng(47);
    BipartiteMultigraph B = degree_capped_graph(rng, 10, 10, 40, 5);
    int delta = B.max_degree();
    REQUIRE(delta <= 5);

    // precolor up to three edges around the busiest left vertex
    int hub = 0;
    for (int i = 0; i < B.left_count(); ++i)
        if (B.left_incidence(i).size() > B.left_incidence(hub).size()) hub = i;
    std::vector<std::pair<int, int>> pre;
    int wanted[] = {4, 1, 3};
    for (std::size_t k = 0; k < 3 && k < B.left_incidence(hub).size(); ++k)
        pre.push_back({B.left_incidence(hub)[k], wanted[k]});

    std::vector<int> colors = edge_color_extend(B, 5, pre);
    REQUIRE(coloring_proper(B, colors, 5));
    for (auto [e, c] : pre) REQUIRE(colors[e] == c);
}

TEST_CASE("edge coloring is proper on random multigraphs") {
    std::mt19937 rng(48);
    for (int iter = 0; iter < 200; ++iter) {
        BipartiteMultigraph B = testutil::random_bipartite(rng, 6, 18);
        int delta = B.max_degree();
        int palette = delta + static_cast<int>(rng() % 3u);
        std::vector<int> colors = edge_color_extend(B, palette, {});
        REQUIRE(coloring_proper(B, colors, std::max(palette, 1)));
        // never more colors than the max degree when starting from scratch
        for (int c : colors) REQUIRE(c < std::max(delta, 1));
    }
}

TEST_CASE("stable matching on tiny graphs") {
    BipartiteMultigraph single;
    single.add_left();
    single.add_right();
    single.add_edge(0, 0);
    EdgePreferences p1{{{0}}, {{0}}};
    REQUIRE(stable_matching(single, p1).edges == std::vector<int>{0});
    REQUIRE(is_stable(single, p1, stable_matching(single, p1)));

    // two left vertices courting one right vertex: the right's favorite wins
    BipartiteMultigraph vee;
    vee.add_left();
    vee.add_left();
    vee.add_right();
    int e0 = vee.add_edge(0, 0);
    int e1 = vee.add_edge(1, 0);
    EdgePreferences p2{{{e0}, {e1}}, {{e1, e0}}};
    Matching m = stable_matching(vee, p2);
    REQUIRE(m.edges == std::vector<int>{e1});

    BipartiteMultigraph empty;
    EdgePreferences p0;
    REQUIRE(is_stable(empty, p0, stable_matching(empty, p0)));

    // a lone edge out of the matching blocks
    Matching none;
    none.left_match.assign(1, -1);
    none.right_match.assign(1, -1);
    REQUIRE_FALSE(is_stable(single, p1, none));
}

TEST_CASE("deferred acceptance is stable and appears among brute-force stable matchings") {
    std::mt19937 rng(49);
    for (int iter = 0; iter < 200; ++iter) {
        BipartiteMultigraph B = testutil::random_bipartite(rng, 5, 10);
        EdgePreferences prefs = testutil::random_preferences(rng, B);
        Matching m = stable_matching(B, prefs);
        REQUIRE(is_stable(B, prefs, m));
        auto all = oracle::enumerate_stable_matchings(B, prefs);
        REQUIRE_FALSE(all.empty());
        bool found = false;
        for (const auto& one : all)
            if (one == m.edges) found = true;
        REQUIRE(found);
    }
}

TEST_CASE("left- and right-proposing runs cover the same vertices") {
    std::mt19937 rng(50);
    for (int iter = 0; iter < 200; ++iter) {
        BipartiteMultigraph B = testutil::random_bipartite(rng, 5, 10);
        EdgePreferences prefs = testutil::random_preferences(rng, B);
        Matching ml = stable_matching(B, prefs, nullptr, Side::left);
        Matching mr = stable_matching(B, prefs, nullptr, Side::right);
        REQUIRE(is_stable(B, prefs, mr));
        for (int i = 0; i < B.left_count(); ++i)
            REQUIRE((ml.left_match[i] >= 0) == (mr.left_match[i] >= 0));
        for (int j = 0; j < B.right_count(); ++j)
            REQUIRE((ml.right_match[j] >= 0) == (mr.right_match[j] >= 0));
    }
}

TEST_CASE("edge survival test on hand examples") {
    BipartiteMultigraph single;
    single.add_left();
    single.add_right();
    single.add_edge(0, 0);
    EdgePreferences p1{{{0}}, {{0}}};
    REQUIRE(edge_survives_test(single, p1, {Side::left, 0}, 0));
    REQUIRE_ERROR(edge_survives_test(single, p1, {Side::right, 7}, 0), ErrorCode::EdgeNotIncident);

    // u--z via e; z--y via g; z prefers g, y prefers g: e dies
    BipartiteMultigraph tri;
    tri.add_left();   // u
    tri.add_left();   // y
    tri.add_right();  // z
    int e = tri.add_edge(0, 0);
    int g = tri.add_edge(1, 0);
    EdgePreferences p2{{{e}, {g}}, {{g, e}}};
    REQUIRE_FALSE(edge_survives_test(tri, p2, {Side::left, 0}, e));
}

TEST_CASE("edge survival test matches exhaustive stable matchings") {
    std::mt19937 rng(51);
    for (int iter = 0; iter < 120; ++iter) {
        BipartiteMultigraph B = testutil::random_bipartite(rng, 5, 9);
        EdgePreferences prefs = testutil::random_preferences(rng, B);
        for (int side = 0; side < 2; ++side) {
            int count = side == 0 ? B.left_count() : B.right_count();
            for (int i = 0; i < count; ++i) {
                BipVertex u{side == 0 ? Side::left : Side::right, i};
                for (int e : B.incidence(u)) {
                    std::vector<char> alive(B.edge_count(), 1);
                    for (int de : B.incidence(u)) alive[de] = 0;
                    alive[e] = 1;
                    bool brute = false;
                    for (const auto& one : oracle::enumerate_stable_matchings(B, prefs, &alive))
                        if (std::find(one.begin(), one.end(), e) != one.end()) brute = true;
                    REQUIRE(edge_survives_test(B, prefs, u, e) == brute);
                }
            }
        }
    }
}

TEST_CASE("surviving edges stay in every stable matching once failures return") {
    std::mt19937 rng(52);
    for (int iter = 0; iter < 60; ++iter) {
        BipartiteMultigraph B = testutil::random_bipartite(rng, 4, 8);
        EdgePreferences prefs = testutil::random_preferences(rng, B);
        for (int side = 0; side < 2; ++side) {
            int count = side == 0 ? B.left_count() : B.right_count();
            for (int i = 0; i < count; ++i) {
                BipVertex u{side == 0 ? Side::left : Side::right, i};
                const auto& du = B.incidence(u);
                if (du.empty()) continue;
                std::vector<int> failing, surviving;
                for (int e : du)
                    (edge_survives_test(B, prefs, u, e) ? surviving : failing).push_back(e);
                for (int f : surviving) {
                    // any subset of failing edges may come back: f stays matched
                    for (std::uint32_t sub = 0; sub < (1u << failing.size()); ++sub) {
                        std::vector<char> alive(B.edge_count(), 1);
                        for (int de : du) alive[de] = 0;
                        alive[f] = 1;
                        for (std::size_t k = 0; k < failing.size(); ++k)
                            if ((sub >> k) & 1u) alive[failing[k]] = 1;
                        for (const auto& one :
                             oracle::enumerate_stable_matchings(B, prefs, &alive))
                            REQUIRE(std::find(one.begin(), one.end(), f) != one.end());
                    }
                }
            }
        }
    }
}
