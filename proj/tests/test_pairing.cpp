#include "doctest.h"
#include "oracles.hpp"

#include "webdimer/basisgen.hpp"
#include "webdimer/pairing.hpp"

using namespace wd;

namespace {

std::vector<int> ones(int n) { return std::vector<int>(n, 1); }

bool same_function(const PluckerPoly& a, const PluckerPoly& b, const std::vector<BoundaryCondition>& grid) {
    for (auto& S : grid)
        if (poly_on_condition(a, S) != poly_on_condition(b, S)) return false;
    return true;
}

std::vector<PluckerPoly> expansions_of(const std::vector<Web>& B) {
    std::vector<PluckerPoly> out;
    for (auto& X : B) out.push_back(expand_linear(X).poly);
    return out;
}

int binom2(int x) { return x * (x - 1) / 2; }

}  // namespace

TEST_CASE("dual boundary conditions and grids") {
    auto S = dual_condition({subset_of({1, 3, 5}), subset_of({2, 4, 6})}, 6);
    CHECK(S == BoundaryCondition{1, 2, 1, 2, 1, 2});
    CHECK(content_grid(ones(6), 3).size() == 90);
    CHECK(content_grid(ones(9), 3).size() == 1680);
    CHECK(content_grid(ones(6), 2).size() == 20);
}

TEST_CASE("pairing with monomials") {
    // A 1-dimer path web pairs to 1 with its own Plücker coordinate.
    auto G = make_rectangle_graph(3, 6);
    for (Subset I : {subset_of({1, 2, 3}), subset_of({1, 4, 5}), subset_of({2, 4, 6})})
        for (auto& D : enumerate_dimer_covers(G, 1, indicator_lambda(6, I)))
            CHECK(pair_with_monomial(weblike_subgraph(G, D), {I}) == 1);

    Web arcs = make_sl2_arc_web(6, {{1, 2}, {3, 4}, {5, 6}});
    CHECK(pair_with_monomial(arcs, {subset_of({1, 3, 5}), subset_of({2, 4, 6})}) == 1);
    CHECK(pair_with_monomial(arcs, {subset_of({1, 2, 3}), subset_of({4, 5, 6})}) == 0);

    Web tri = disjoint_union(make_tripod(6, 1, 2, 3), make_tripod(6, 4, 5, 6));
    CHECK(pair_with_monomial(tri, {subset_of({1, 4}), subset_of({2, 5}), subset_of({3, 6})}) == 1);
    CHECK_THROWS_AS(pair_with_monomial(tri, {subset_of({1, 4}), subset_of({2, 5})}), Error);
}

TEST_CASE("linear expansion") {
    Web tri = disjoint_union(make_tripod(6, 1, 2, 3), make_tripod(6, 4, 5, 6));
    auto e = expand_linear(tri);
    CHECK(e.full);
    REQUIRE(e.poly.terms.size() == 1);
    CHECK(e.poly.terms.begin()->first == mono_of({subset_of({1, 2, 3}), subset_of({4, 5, 6})}));
    CHECK(abs(e.poly.terms.begin()->second) == 1);
    // Equals sign(S) a(S;W) on every grid point.
    for (auto& S : content_grid(ones(6), 3)) CHECK(poly_on_condition(e.poly, S) == evaluate_invariant(tri, S));

    // Identically zero invariant.
    auto z = expander_for(3, ones(6)).expand([](const BoundaryCondition&) { return Q(0); });
    CHECK(z.poly.is_zero());

    // Pairing against a product of Plücker webs reduces to the monomial pairing.
    for (auto& W : sl2_basis(6))
        CHECK(pair_webs(W, tri) == -pair_with_monomial(W, {subset_of({1, 2, 3}), subset_of({4, 5, 6})}));
}

TEST_CASE("wrench rewriting agrees with the linear solve") {
    auto grid6 = content_grid(ones(6), 3);
    for (auto& W : sl3_basis(6)) {
        auto wr = wrench_expand(W);
        auto fp = expand_linear_fp(W);
        CHECK(same_function(wr.poly, fp.poly, grid6));
        int s = word_and_sign(W).sign;
        auto lin = expand_linear(W);
        for (auto& V : sl2_basis(6)) CHECK(pair_with_poly(V, wr.poly) == s * pair_with_poly(V, lin.poly));
        if (W.nv() == 4) CHECK(wr.poly.terms.size() == 2);
    }
    auto grid9 = content_grid(ones(9), 3);
    for (auto& W : sl3_basis(9)) {
        CHECK(same_function(wrench_expand(W).poly, expand_linear_fp(W).poly, grid9));
        for (auto [i, j] : forks(W)) {
            auto fe = wrench_expand(W, std::make_pair(i, j));
            CHECK(same_function(fe.poly, expand_linear_fp(W).poly, grid9));
            Subset both = bit(i) | bit(j);
            for (auto& [m, c] : fe.poly.terms) {
                bool has = false;
                for (auto& [I, e] : m) has = has || (I & both) == both;
                CHECK(has);
            }
        }
    }
}

TEST_CASE("fork prefilter") {
    Web t1 = make_tripod(3, 1, 2, 3), t2 = make_tripod(3, 1, 2, 3);
    CHECK(fork_prefilter(t1, t2));
    Web W = disjoint_union(make_tripod(6, 1, 2, 4), make_tripod(6, 3, 5, 6));
    Web X = disjoint_union(make_tripod(6, 1, 3, 5), make_tripod(6, 2, 4, 6));
    CHECK(has_fork(W, 1, 2));
    CHECK(has_fork(X, 1, 3));
    CHECK(fork_prefilter(W, X));  // both join 3 and 5
    Web a = make_sl2_arc_web(4, {{1, 2}, {3, 4}}), b = make_sl2_arc_web(4, {{1, 4}, {2, 3}});
    CHECK(!fork_prefilter(a, b));

    auto B = sl3_basis(9);
    auto rep = duality_matrix(B, B);
    int flagged = 0;
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = 0; j < B.size(); ++j)
            if (fork_prefilter(B[i], B[j])) {
                ++flagged;
                CHECK(rep.pairing(int(i), int(j)) == 0);
            }
    CHECK(flagged > 0);
}

TEST_CASE("pairing symmetry holds up to (-1)^(C(r,2)C(k,2))") {
    // Smallest case by hand: arcs (12)(34) = -D12 D34, arcs (14)(23) = +D14 D23.
    Web a = make_sl2_arc_web(4, {{1, 2}, {3, 4}}), b = make_sl2_arc_web(4, {{1, 4}, {2, 3}});
    CHECK(pair_webs(a, b) == 1);
    CHECK(pair_webs(b, a) == -1);

    struct Case {
        std::vector<Web> L, R;
        int r, k;
    };
    std::vector<Case> cases = {{sl3_basis(9), sl3_basis(9), 3, 3}, {sl2_basis(6), sl3_basis(6), 2, 3},
                               {sl2_basis(4), sl2_basis(4), 2, 2}};
    for (auto& c : cases) {
        int eps = (binom2(c.r) * binom2(c.k)) % 2 ? -1 : 1;
        auto eR = expansions_of(c.R), eL = expansions_of(c.L);
        int nonzero = 0;
        for (size_t i = 0; i < c.L.size(); ++i)
            for (size_t j = 0; j < c.R.size(); ++j) {
                Q wx = pair_with_poly(c.L[i], eR[j]), xw = pair_with_poly(c.R[j], eL[i]);
                CHECK(wx == eps * xw);
                nonzero += wx != 0;
            }
        CHECK(nonzero > 0);
    }
}

TEST_CASE("rotation covariance with basis webs") {
    for (auto B : {sl3_basis(9), sl2_basis(4)}) {
        std::vector<Web> RB;
        for (auto& X : B) RB.push_back(rotate(X));
        auto eB = expansions_of(B), eRB = expansions_of(RB);
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t j = 0; j < B.size(); ++j) {
                int sX = word_and_sign(B[j]).sign, sRX = word_and_sign(RB[j]).sign;
                CHECK(sRX * pair_with_poly(B[i], eB[j]) == sX * pair_with_poly(RB[i], eRB[j]));
            }
    }
}

TEST_CASE("bilinearity") {
    auto B3 = sl3_basis(6);
    auto B2 = sl2_basis(6);
    WebCombination W, X;
    W.add(Q(2, 3), B2[0]);
    W.add(-5, B2[3]);
    X.add(7, B3[1]);
    X.add(Q(-1, 4), B3[4]);
    Q expect = 0;
    for (auto& [k1, w] : W.terms)
        for (auto& [k2, x] : X.terms) expect += w.first * x.first * pair_webs(w.second, x.second);
    CHECK(pair_webs(W, X) == expect);
}

TEST_CASE("duality matrices") {
    for (auto rep : {duality_matrix(sl2_basis(6), sl3_basis(6)), duality_matrix(sl3_basis(6), sl2_basis(6)),
                     duality_matrix(sl3_basis(9), sl3_basis(9))}) {
        CHECK(rep.transpose_bijection);
        CHECK(rep.diagonal_pm1);
        CHECK(rep.offdiag_nonzero == 0);
    }
}

TEST_CASE("duality from selected rows") {
    auto B = sl3_basis(9);
    std::vector<WebCombination> rows;
    for (int i : {0, 5, 17, 41}) {
        WebCombination c;
        c.add(1, B[i]);
        rows.push_back(c);
    }
    auto rep = duality_rows(rows, B);
    CHECK(rep.pairing.rows == 4);
    CHECK(rep.pairing.cols == 42);
    CHECK(rep.transpose_bijection);
    CHECK(rep.diagonal_pm1);
    CHECK(rep.offdiag_nonzero == 0);
    auto full = duality_matrix(B, B);
    int r = 0;
    for (int i : {0, 5, 17, 41}) {
        CHECK(rep.partner[r] == full.partner[i]);
        for (int j = 0; j < 42; ++j) CHECK(rep.pairing(r, j) == full.pairing(i, j));
        ++r;
    }
    // A scaled row keeps its partner but loses the ±1 diagonal.
    WebCombination twice;
    twice.add(2, B[3]);
    auto rep2 = duality_rows({twice}, B);
    CHECK(!rep2.diagonal_pm1);

    CHECK_THROWS_AS(duality_rows(rows, {}), Error);
    WebCombination wrong;
    wrong.add(1, sl3_basis(6)[0]);
    CHECK_THROWS_AS(duality_rows({wrong}, B), Error);
}

TEST_CASE("twist expansion") {
    RationalRng rng(21);
    auto G = make_rectangle_graph(3, 6);
    auto subs = k_subsets(6, 3);
    // r = 1 gives the Marsh-Scott sum.
    for (Subset I : {subset_of({1, 3, 5}), subset_of({2, 3, 6})})
        CHECK(twist_expand(PluckerPoly::var(3, 6, I), G) == marsh_scott(G, I));
    for (int t = 0; t < 4; ++t) {
        Subset a = subs[rng.uniform(0, 19)];
        Subset b = subset_of({1, 2, 3, 4, 5, 6}) & ~a;
        PluckerPoly f = PluckerPoly::var(3, 6, a) * PluckerPoly::var(3, 6, b);
        auto lit = twist_expand(f, G, TwistMode::literal);
        CHECK(lit == twist_expand(f, G, TwistMode::factored));
        Matrix M = random_matrix(3, 6, rng);
        CHECK(evaluate(lit, M) == evaluate(f, oracle::twist(M)));
    }
    CHECK_THROWS_AS(twist_expand(PluckerPoly::var(2, 6, subset_of({1, 2})), G), Error);
}

TEST_CASE("expansion in a web basis") {
    auto B2 = sl2_basis(6);
    for (size_t i = 0; i < B2.size(); ++i) {
        auto c = expand_in_web_basis(B2[i], B2);
        for (size_t j = 0; j < c.size(); ++j) CHECK(c[j] == (i == j ? 1 : 0));
    }
    auto G = make_rectangle_graph(3, 6);
    for (auto& D : enumerate_dimer_covers(G, 2, ones(6))) {
        for (auto& q : expand_in_web_basis(weblike_subgraph(G, D), B2)) CHECK(q.get_den() == 1);
    }
}

TEST_CASE("twist of an SL_3 basis invariant through SL_2 duals on Gr(3,6)") {
    auto G = make_rectangle_graph(3, 6);
    auto B3 = sl3_basis(6), B2 = sl2_basis(6);
    auto rep = duality_matrix(B2, B3);
    REQUIRE(rep.diagonal_is_sign);
    auto covers = enumerate_dimer_covers(G, 2, ones(6));
    std::vector<std::vector<Q>> coeff;
    for (auto& D : covers) coeff.push_back(expand_in_web_basis(weblike_subgraph(G, D), B2));
    RationalRng rng(31);
    for (size_t j = 0; j < B3.size(); ++j) {
        int dual = -1;
        for (size_t i = 0; i < B2.size(); ++i)
            if (rep.partner[i] == int(j)) dual = int(i);
        REQUIRE(dual >= 0);
        PluckerPoly rhs(3, 6);
        for (size_t d = 0; d < covers.size(); ++d)
            if (coeff[d][dual] != 0) rhs += face_weight_poly(G, covers[d]) * coeff[d][dual];
        rhs *= Q(word_and_sign(B3[j]).sign);
        PluckerPoly y = expand_linear(B3[j]).poly;
        for (int t = 0; t < 3; ++t) {
            Matrix M = random_matrix(3, 6, rng);
            CHECK(evaluate(rhs, M) == evaluate(y, oracle::twist(M)));
        }
    }
}
