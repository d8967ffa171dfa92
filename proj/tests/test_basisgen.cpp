#include "doctest.h"
#include "oracles.hpp"

#include "webdimer/basisgen.hpp"

using namespace wd;

namespace {

// SL_3 web on 3 points with a bigon between a white and a black vertex.
Web bigon_web() {
    Web w;
    w.r = 3;
    w.n = 3;
    w.bnd.assign(3, {});
    int u = w.add_vertex(true), v = w.add_vertex(false), x = w.add_vertex(true);
    int l1 = w.add_edge(u, -1), a = w.add_edge(u, v), b = w.add_edge(u, v), c = w.add_edge(v, x);
    int l2 = w.add_edge(x, -2), l3 = w.add_edge(x, -3);
    w.rot[u] = {a, l1, b};
    w.rot[v] = {b, c, a};
    w.rot[x] = {c, l3, l2};
    w.bnd[0] = {l1};
    w.bnd[1] = {l2};
    w.bnd[2] = {l3};
    return w;
}

}  // namespace

TEST_CASE("SL_2 basis is the non-crossing matchings") {
    CHECK(sl2_basis(2).size() == 1);
    CHECK(sl2_basis(4).size() == 2);
    CHECK(sl2_basis(6).size() == 5);
    for (int n : {2, 4, 6, 8, 10}) {
        std::set<std::string> lib, brute;
        for (auto& W : sl2_basis(n)) lib.insert(canonical_key(W));
        for (auto& m : oracle::noncrossing_matchings(n)) brute.insert(canonical_key(make_sl2_arc_web(n, m)));
        CHECK(lib == brute);
    }
}

TEST_CASE("SL_2 webs follow their tableaux") {
    for (int n : {4, 6, 8}) {
        auto Ts = syt_enumerate(2, n / 2);
        auto B = sl2_basis(n);
        for (size_t i = 0; i < B.size(); ++i) CHECK(tableau_of_web(B[i]) == Ts[i]);
    }
}

TEST_CASE("SL_3 basis sizes and small cases") {
    CHECK(sl3_basis(3).size() == 1);
    CHECK(canonical_key(sl3_basis(3)[0]) == canonical_key(make_tripod(3, 1, 2, 3)));
    CHECK(sl3_basis(9).size() == std::size_t(hook_length_count(3, 3)));
    CHECK(sl3_basis(9).size() == 42);
    CHECK(sl3_basis(12).size() == 462);

    // n = 6: three tripod pairs and two trees with a black centre.
    int pairs = 0, trees = 0;
    for (auto& W : sl3_basis(6)) {
        int black = 0;
        for (char c : W.white) black += !c;
        if (W.nv() == 2 && black == 0) ++pairs;
        if (W.nv() == 4 && black == 1) ++trees;
    }
    CHECK(pairs == 3);
    CHECK(trees == 2);
}

TEST_CASE("non-ellipticity") {
    CHECK(is_non_elliptic(make_tripod(3, 1, 2, 3)));
    Web b = bigon_web();
    REQUIRE(embedding_is_planar(b));
    CHECK(!is_non_elliptic(b));
    bool saw_hexagon = false;
    for (auto& W : sl3_basis(9)) {
        CHECK(is_non_elliptic(W));
        int internal = 0;
        for (auto& e : W.edges) internal += e.u >= 0 && e.v >= 0;
        saw_hexagon = saw_hexagon || internal >= W.nv();
    }
    CHECK(saw_hexagon);
    for (auto& W : sl3_basis(12)) CHECK(is_non_elliptic(W));
}

TEST_CASE("growth round trip and rotation") {
    for (int k = 1; k <= 4; ++k)
        for (auto& T : syt_enumerate(3, k)) {
            Web W = sl3_growth(T);
            CHECK(tableau_of_web(W) == T);
            CHECK(canonical_key(rotate(W)) == canonical_key(sl3_growth(promotion(T))));
        }
}

TEST_CASE("evaluation matrix is unitriangular in word order") {
    for (int n : {6, 9}) {
        auto B = sl3_basis(n);
        std::vector<WordSign> ws;
        for (auto& W : B) ws.push_back(word_and_sign(W));
        Matrix A(int(B.size()), int(B.size()));
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t j = 0; j < B.size(); ++j) {
                A(int(i), int(j)) = count_labelings(B[i], ws[j].S);
                if (i == j) CHECK(A(int(i), int(j)) == 1);
                if (ws[j].word < ws[i].word) CHECK(A(int(i), int(j)) == 0);
            }
        CHECK(rank(A) == int(B.size()));
    }
}

TEST_CASE("bad sizes") {
    CHECK_THROWS_AS(sl2_basis(5), Error);
    CHECK_THROWS_AS(sl3_basis(7), Error);
}
