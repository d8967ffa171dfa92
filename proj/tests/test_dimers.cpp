#include "doctest.h"
#include "oracles.hpp"

#include "webdimer/pairing.hpp"

using namespace wd;

namespace {

std::vector<int> ones(int n) { return std::vector<int>(n, 1); }

DimerCover add_covers(const DimerCover& a, const DimerCover& b) {
    DimerCover c = a;
    c.r = a.r + b.r;
    for (size_t i = 0; i < c.mult.size(); ++i) c.mult[i] += b.mult[i];
    for (size_t i = 0; i < c.lambda.size(); ++i) c.lambda[i] += b.lambda[i];
    return c;
}

}  // namespace

TEST_CASE("claw graph covers") {
    auto G = make_claw_graph(5);
    for (int i = 1; i <= 5; ++i) {
        auto cs = enumerate_dimer_covers(G, 1, indicator_lambda(5, bit(i)));
        REQUIRE(cs.size() == 1);
        CHECK(cs[0].mult[G.leg(i)] == 1);
    }
    auto N = unit_network(G);
    for (auto& [I, q] : boundary_measurement(N)) CHECK(q == 1);
}

TEST_CASE("enumeration is complete against brute force") {
    struct Case {
        int k, n, r;
        std::vector<int> lambda;
    };
    std::vector<Case> cases = {{2, 4, 1, {1, 0, 1, 0}}, {2, 4, 2, {1, 1, 1, 1}}, {2, 4, 2, {2, 1, 1, 0}},
                               {2, 5, 1, {0, 1, 1, 0, 0}}, {3, 6, 1, {1, 0, 1, 0, 1, 0}}, {3, 6, 2, ones(6)}};
    for (auto& c : cases) {
        auto G = make_rectangle_graph(c.k, c.n);
        REQUIRE(G.graph().ne() <= 30);
        auto lib = enumerate_dimer_covers(G, c.r, c.lambda);
        auto brute = oracle::covers_brute(G.graph(), c.r, c.lambda);
        std::set<std::vector<int>> got;
        for (auto& D : lib) got.insert(D.mult);
        CHECK(got.size() == lib.size());
        CHECK(got == brute);
        // Output order is sorted by multiplicity vector.
        for (size_t i = 1; i < lib.size(); ++i) CHECK(lib[i - 1].mult < lib[i].mult);
    }
}

TEST_CASE("2-covers of rectangle (3,6) use each leg once") {
    auto G = make_rectangle_graph(3, 6);
    auto cs = enumerate_dimer_covers(G, 2, ones(6));
    CHECK(!cs.empty());
    for (auto& D : cs)
        for (int i = 1; i <= 6; ++i) CHECK(D.mult[G.leg(i)] == 1);
}

TEST_CASE("edge weights") {
    auto G = make_rectangle_graph(2, 4);
    auto D = enumerate_dimer_covers(G, 1, indicator_lambda(4, subset_of({1, 3})))[0];
    CHECK(edge_weight(unit_network(G), D) == 1);

    std::vector<Q> w(G.graph().ne(), Q(1));
    int e = -1;
    for (size_t i = 0; i < D.mult.size(); ++i)
        if (D.mult[i]) e = int(i);
    w[e] = Q(2, 3);
    Network N(G, w);
    CHECK(edge_weight(N, D) == Q(2, 3));
    DimerCover D2 = add_covers(D, D);
    CHECK(edge_weight(N, D2) == Q(4, 9));
}

TEST_CASE("boundary measurement on (2,4)") {
    auto G = make_rectangle_graph(2, 4);
    auto v = boundary_measurement(unit_network(G));
    CHECK(v.at(subset_of({1, 3})) == Q(long(enumerate_dimer_covers(G, 1, indicator_lambda(4, subset_of({1, 3}))).size())));
    auto d = [&](int a, int b) { return v.at(subset_of({a, b})); };
    CHECK(d(1, 3) * d(2, 4) == d(1, 2) * d(3, 4) + d(1, 4) * d(2, 3));
}

TEST_CASE("Plücker relations and nonzero consecutive minors on random networks") {
    RationalRng rng(11);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}, {2, 6}}) {
        auto G = make_rectangle_graph(k, n);
        for (int t = 0; t < 5; ++t) {
            auto v = boundary_measurement(random_network(G, rng));
            CHECK(three_term_violations(v, k, n) == 0);
            for (int i = 1; i <= n; ++i) {
                Subset I = 0;
                for (int s = 0; s < k; ++s) I |= bit((i - 1 + s) % n + 1);
                CHECK(v.at(I) != 0);
            }
        }
    }
}

TEST_CASE("face weights") {
    auto G = make_rectangle_graph(2, 4);
    // Faces with exponent r*W_f - D_f - r = 0 are dropped from the monomial.
    for (auto& D : enumerate_dimer_covers(G, 1, indicator_lambda(4, subset_of({1, 2}))))
        for (auto& [s, e] : face_weight(G, D)) CHECK(e != 0);

    // Doubling squares.
    for (auto& D : enumerate_dimer_covers(make_rectangle_graph(3, 6), 1, indicator_lambda(6, subset_of({1, 3, 5})))) {
        auto G3 = make_rectangle_graph(3, 6);
        auto f = face_weight(G3, D);
        CHECK(face_weight(G3, add_covers(D, D)) == mono_mul(f, f));
    }
}

TEST_CASE("Marsh-Scott sum on (2,4) matches the twist oracle") {
    auto G = make_rectangle_graph(2, 4);
    RationalRng rng(5);
    for (int t = 0; t < 4; ++t) {
        Matrix M = random_matrix(2, 4, rng);
        Matrix T = oracle::twist(M);
        for (Subset I : k_subsets(4, 2)) CHECK(evaluate(marsh_scott(G, I), M) == oracle::minor_of(T, elements(I)));
    }
}

TEST_CASE("splitting: face weights multiply and a(S;D) counts splittings") {
    auto G = make_rectangle_graph(3, 6);
    auto covers2 = enumerate_dimer_covers(G, 2, ones(6));
    auto subs = k_subsets(6, 3);
    std::map<Subset, std::vector<DimerCover>> ones_by_I;
    for (Subset I : subs) ones_by_I[I] = enumerate_dimer_covers(G, 1, indicator_lambda(6, I));

    int checked = 0;
    for (auto& D : covers2) {
        Web W = weblike_subgraph(G, D);
        for (Subset I1 : subs) {
            Subset I2 = subset_of({1, 2, 3, 4, 5, 6}) & ~I1;
            std::int64_t splits = 0;
            for (auto& A : ones_by_I[I1])
                for (auto& B : ones_by_I[I2]) {
                    auto C = add_covers(A, B);
                    if (C.mult != D.mult) continue;
                    ++splits;
                    CHECK(face_weight(G, D) == mono_mul(face_weight(G, A), face_weight(G, B)));
                }
            CHECK(pair_with_monomial(W, {I1, I2}) == splits);
            ++checked;
        }
    }
    CHECK(checked == int(covers2.size() * subs.size()));
}

TEST_CASE("weblike subgraphs") {
    auto G = make_rectangle_graph(3, 6);
    for (auto& D : enumerate_dimer_covers(G, 1, indicator_lambda(6, subset_of({2, 4, 6})))) {
        Web W = weblike_subgraph(G, D);
        CHECK_NOTHROW(W.validate(true));
        // Paths: every internal vertex has degree two before suppression, so
        // whatever survives has exactly one boundary edge per used leg.
        CHECK(W.degree() == std::vector<int>{0, 1, 0, 1, 0, 1});
    }
    for (auto& D : enumerate_dimer_covers(G, 2, ones(6))) CHECK_NOTHROW(weblike_subgraph(G, D).validate(true));

    // A doubled 1-cover: labels are forced to {1,2} on every edge.
    auto D = enumerate_dimer_covers(G, 1, indicator_lambda(6, subset_of({1, 2, 3})))[0];
    Web W2 = weblike_subgraph(G, add_covers(D, D));
    BoundaryCondition S(6, 0);
    for (int i : {1, 2, 3}) S[i - 1] = 3;
    CHECK(count_labelings(W2, S) == 1);
    CHECK(oracle::labelings_brute(W2, S) == 1);
}

TEST_CASE("web_r and its twist pair as f and f∘τ") {
    auto G = make_rectangle_graph(3, 6);
    RationalRng rng(17);
    auto subs = k_subsets(6, 3);

    // r = 1: total coefficient mass is the Plücker coordinate.
    auto N = random_network(G, rng);
    auto X = boundary_measurement(N);
    for (Subset I : {subset_of({1, 2, 4}), subset_of({2, 5, 6})}) {
        auto c = web_r(N, 1, indicator_lambda(6, I));
        Q mass = 0;
        for (auto& [key, t] : c.terms) mass += t.first;
        CHECK(mass == X.at(I));
    }

    for (int t = 0; t < 3; ++t) {
        auto Nt = random_network(G, rng);
        auto Xt = boundary_measurement(Nt);
        Matrix M = matrix_from_plucker(Xt, 3, 6);
        Matrix TM = oracle::twist(M);
        auto W = web_r(Nt, 2, ones(6));
        auto Wt = web_r_twisted(Nt, 2, ones(6));
        for (int s = 0; s < 3; ++s) {
            Subset a = subs[rng.uniform(0, int(subs.size()) - 1)];
            Subset b = subset_of({1, 2, 3, 4, 5, 6}) & ~a;
            PluckerPoly f = PluckerPoly::var(3, 6, a) * PluckerPoly::var(3, 6, b);
            CHECK(pair_with_poly(W, f) == evaluate(f, Xt));
            CHECK(pair_with_poly(Wt, f) == evaluate(f, TM));
        }
    }
}

TEST_CASE("network json round trip and bad weights") {
    RationalRng rng(3);
    auto N = random_network(make_rectangle_graph(2, 5), rng);
    auto N2 = network_from_json(network_to_json(N));
    CHECK(N2.w == N.w);
    CHECK(boundary_measurement(N2) == boundary_measurement(N));
    auto j = network_to_json(N);
    j["weights"]["0"] = "0";
    CHECK_THROWS_AS(network_from_json(j), Error);
}
