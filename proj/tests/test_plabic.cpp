#include "doctest.h"

#include "webdimer/plabic.hpp"

#include <set>

using namespace wd;

namespace {

// Face containing the virtual boundary arc from i to i+1.
int gap_face(const PlabicGraph& G, int i) {
    const Web& g = G.graph();
    const Faces& F = G.faces();
    int e = g.ne() + i - 1;
    int a = F.face_of_dart[2 * e], b = F.face_of_dart[2 * e + 1];
    return a == F.outer ? b : a;
}

Subset cyclic_interval(int start, int k, int n) {
    Subset s = 0;
    for (int t = 0; t < k; ++t) s |= bit((start - 1 + t) % n + 1);
    return s;
}

void check_bicolored(const PlabicGraph& G) {
    const Web& g = G.graph();
    for (auto& e : g.edges)
        if (e.u >= 0 && e.v >= 0) CHECK(g.white[e.u] != g.white[e.v]);
}

}  // namespace

TEST_CASE("claw graph") {
    for (int n = 2; n <= 7; ++n) {
        auto G = make_claw_graph(n);
        CHECK(G.type() == 1);
        auto pi = G.trip_permutation();
        for (int i = 1; i <= n; ++i) CHECK(pi[i - 1] == i % n + 1);
        auto& L = G.face_labels();
        for (int i = 1; i <= n; ++i) CHECK(L.at(gap_face(G, i)) == bit(i % n + 1));
        CHECK(make_rectangle_graph(1, n) == G);
    }
}

TEST_CASE("single edge to a degree-one vertex") {
    Web w;
    w.n = 1;
    w.bnd.assign(1, {});
    int v = w.add_vertex(true);
    int e = w.add_edge(v, -1);
    w.rot[v].push_back(e);
    w.bnd[0].push_back(e);
    PlabicGraph G(w);
    CHECK(G.trip_permutation() == std::vector<int>{1});
}

TEST_CASE("rectangle graphs: faces, trips, labels") {
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k < n; ++k) {
            CAPTURE(k);
            CAPTURE(n);
            auto G = make_rectangle_graph(k, n);
            check_bicolored(G);
            CHECK(G.type() == k);
            CHECK(int(G.face_ids().size()) == k * (n - k) + 1);
            auto pi = G.trip_permutation();
            for (int i = 1; i <= n; ++i) CHECK(pi[i - 1] == (i - 1 + k) % n + 1);

            auto& L = G.face_labels();
            CHECK(L.size() == G.face_ids().size());
            for (auto& [f, s] : L) CHECK(popcount(s) == k);
            // Boundary faces carry the cyclic intervals.
            std::set<Subset> gaps, intervals;
            for (int i = 1; i <= n; ++i) gaps.insert(L.at(gap_face(G, i)));
            for (int i = 1; i <= n; ++i) intervals.insert(cyclic_interval(i, k, n));
            CHECK(gaps == intervals);
            // Adjacent faces differ by one exchange.
            const Web& g = G.graph();
            for (int e = 0; e < g.ne(); ++e) {
                int a = G.faces().face_of_dart[2 * e], b = G.faces().face_of_dart[2 * e + 1];
                if (!L.count(a) || !L.count(b)) continue;
                CHECK(popcount(L.at(a) ^ L.at(b)) == 2);
            }
        }
}

TEST_CASE("rectangle (2,4) and (3,12) sizes") {
    auto G = make_rectangle_graph(2, 4);
    CHECK(G.face_ids().size() == 5);
    CHECK(G.trip_permutation() == std::vector<int>{3, 4, 1, 2});
    auto H = make_rectangle_graph(3, 12);
    CHECK(H.face_ids().size() == 28);
    CHECK(H.n() == 12);
    std::set<Subset> gaps;
    for (int i = 1; i <= 6; ++i) gaps.insert(make_rectangle_graph(3, 6).face_labels().at(gap_face(make_rectangle_graph(3, 6), i)));
    CHECK(gaps == std::set<Subset>{subset_of({1, 2, 3}), subset_of({2, 3, 4}), subset_of({3, 4, 5}), subset_of({4, 5, 6}),
                                   subset_of({5, 6, 1}), subset_of({6, 1, 2})});
}

TEST_CASE("json round trip") {
    auto G = make_rectangle_graph(3, 6);
    auto H = plabic_from_json(plabic_to_json(G));
    CHECK(H == G);
    CHECK(H.trip_permutation() == G.trip_permutation());
}

TEST_CASE("invalid graphs are rejected") {
    CHECK_THROWS_AS(make_rectangle_graph(3, 3), Error);
    CHECK_THROWS_AS(make_rectangle_graph(0, 4), Error);
    // Two adjacent white vertices.
    Web w;
    w.n = 2;
    w.bnd.assign(2, {});
    int a = w.add_vertex(true), b = w.add_vertex(true);
    int e0 = w.add_edge(a, -1), e1 = w.add_edge(a, b), e2 = w.add_edge(b, -2);
    w.rot[a] = {e0, e1};
    w.rot[b] = {e1, e2};
    w.bnd[0] = {e0};
    w.bnd[1] = {e2};
    CHECK_THROWS_AS(PlabicGraph{w}, Error);
}
