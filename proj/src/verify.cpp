#include "webdimer/verify.hpp"

#include "webdimer/basisgen.hpp"
#include "webdimer/enumeration.hpp"
#include "webdimer/pairing.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace wd {

using nlohmann::json;

namespace {

// Pinned sizes. Every comparison below is exact equality over Q.
constexpr int kNetworksPerShape = 20;   // criterion 1
constexpr int kMarshScottPoints = 10;   // criterion 2
constexpr int kTwistProducts = 25;      // criterion 3
constexpr int kTwistNetworks = 10;      // criterion 3
constexpr int kX28Points = 5;           // criterion 4
constexpr int kSampledPairs = 100;      // criterion 9, nonzero pairs
constexpr std::size_t kMaxDraws = 200000;
constexpr int kTreeDegreeMax = 5;       // criterion 8
constexpr int kLowerBoundMax = 15;      // criterion 8
constexpr std::size_t kSl4Trees = 123;  // criterion 8
constexpr int kCriteria = 10;

// All maximal minors nonzero, so no face coordinate can put a pole at M.
Matrix generic_matrix(int k, int n, RationalRng& rng) {
    for (;;) {
        Matrix M = random_matrix(k, n, rng);
        auto v = plucker_vector(M);
        if (std::all_of(v.begin(), v.end(), [](auto& p) { return p.second != 0; })) return M;
    }
}

Network generic_network(const PlabicGraph& G, RationalRng& rng, PluckerVector& X) {
    for (;;) {
        Network N = random_network(G, rng);
        X = boundary_measurement(N);
        if (std::all_of(X.begin(), X.end(), [](auto& p) { return p.second != 0; })) return N;
    }
}

PluckerPoly random_product(int k, int n, int factors, RationalRng& rng) {
    auto subs = k_subsets(n, k);
    PluckerPoly f = PluckerPoly::constant(k, n, 1);
    for (int t = 0; t < factors; ++t) f = f * PluckerPoly::var(k, n, subs[rng.uniform(0, int(subs.size()) - 1)]);
    return f;
}

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

CriterionResult make(int id, std::string title, bool ok, std::string summary, json detail) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.status = ok ? Status::pass : Status::fail;
    r.summary = std::move(summary);
    r.detail = std::move(detail);
    return r;
}

CriterionResult plucker_relations(const VerifyConfig& cfg) {
    RationalRng rng(cfg.seed + 1);
    json shapes = json::array();
    bool ok = true;
    std::ostringstream sum;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
        PlabicGraph G = make_rectangle_graph(k, n);
        int viol = 0, zero = 0;
        for (int t = 0; t < kNetworksPerShape; ++t) {
            auto v = boundary_measurement(random_network(G, rng));
            viol += three_term_violations(v, k, n);
            zero += std::all_of(v.begin(), v.end(), [](auto& p) { return p.second == 0; });
        }
        ok = ok && viol == 0 && zero == 0;
        shapes.push_back({{"k", k}, {"n", n}, {"networks", kNetworksPerShape}, {"violations", viol}, {"zero_vectors", zero}});
        sum << "(" << k << "," << n << ") " << viol << " violations; ";
    }
    sum << kNetworksPerShape << " networks each";
    return make(1, "Plücker relations of boundary measurements", ok, sum.str(), {{"shapes", shapes}});
}

CriterionResult marsh_scott_check(const VerifyConfig& cfg) {
    RationalRng rng(cfg.seed + 2);
    json shapes = json::array();
    bool ok = true;
    std::ostringstream sum;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}}) {
        PlabicGraph G = make_rectangle_graph(k, n);
        auto subs = k_subsets(n, k);
        std::vector<PluckerPoly> ms(subs.size());
        for (size_t s = 0; s < subs.size(); ++s) ms[s] = marsh_scott(G, subs[s]);
        std::size_t good = 0, total = 0;
        for (int t = 0; t < kMarshScottPoints; ++t) {
            Matrix M = generic_matrix(k, n, rng);
            Matrix T = twist_matrix(M);
            for (size_t s = 0; s < subs.size(); ++s, ++total) good += plucker(T, subs[s]) == evaluate(ms[s], M);
        }
        ok = ok && good == total;
        shapes.push_back({{"k", k}, {"n", n}, {"points", kMarshScottPoints}, {"agree", good}, {"checked", total}});
        sum << "(" << k << "," << n << ") " << ratio(good, total) << "; ";
    }
    sum << "exact";
    return make(2, "Marsh-Scott twist formula", ok, sum.str(), {{"shapes", shapes}});
}

CriterionResult twist_check(const VerifyConfig& cfg) {
    RationalRng rng(cfg.seed + 3);
    PlabicGraph G = make_rectangle_graph(3, 6);
    std::size_t a = 0;
    for (int t = 0; t < kTwistProducts; ++t) {
        PluckerPoly f = random_product(3, 6, 2, rng);
        PluckerPoly te = twist_expand(f, G);
        Matrix M = generic_matrix(3, 6, rng);
        a += evaluate(te, M) == evaluate(f, twist_matrix(M));
    }
    std::size_t b = 0, c = 0;
    for (int t = 0; t < kTwistNetworks; ++t) {
        PluckerVector X;
        Network N = generic_network(G, rng, X);
        PluckerPoly f = random_product(3, 6, 2, rng);
        auto lambda = f.multidegree();
        Matrix Mx = matrix_from_plucker(X, 3, 6);
        b += pair_with_poly(web_r_twisted(N, 2, lambda), f) == evaluate(f, twist_matrix(Mx));
        c += pair_with_poly(web_r(N, 2, lambda), f) == evaluate(f, X);
    }
    bool ok = a == std::size_t(kTwistProducts) && b == std::size_t(kTwistNetworks) && c == std::size_t(kTwistNetworks);
    std::ostringstream sum;
    sum << "twist_expand=f∘τ " << ratio(a, kTwistProducts) << "; twisted web pairing " << ratio(b, kTwistNetworks)
        << "; untwisted web pairing " << ratio(c, kTwistNetworks);
    return make(3, "Twist as a sum of pairings, (3,6), r=2", ok, sum.str(),
                {{"products", kTwistProducts}, {"products_agree", a}, {"networks", kTwistNetworks},
                 {"twisted_agree", b}, {"untwisted_agree", c}});
}

PluckerPoly D12(std::initializer_list<int> I) { return PluckerPoly::var(3, 12, subset_of(I)); }

CriterionResult x28_check(const VerifyConfig& cfg) {
    RationalRng rng(cfg.seed + 4);
    // X_28 in the FP convention, as a polynomial in Plücker coordinates.
    PluckerPoly f = (D12({1, 3, 4}) * D12({2, 7, 8}) - D12({1, 7, 8}) * D12({2, 3, 4})) *
                        (D12({5, 9, 10}) * D12({6, 11, 12}) - D12({5, 11, 12}) * D12({6, 9, 10})) -
                    (D12({1, 3, 4}) * D12({2, 5, 6}) - D12({1, 5, 6}) * D12({2, 3, 4})) *
                        (D12({7, 9, 10}) * D12({8, 11, 12}) - D12({7, 11, 12}) * D12({8, 9, 10}));
    PluckerPoly frozen = D12({1, 2, 12}) * D12({2, 3, 4}) * D12({4, 5, 6}) * D12({6, 7, 8}) * D12({8, 9, 10}) * D12({10, 11, 12});
    PluckerPoly laurent = frozen *
                          (D12({1, 3, 5}) * D12({1, 9, 11}) * D12({5, 7, 9}) + D12({1, 5, 11}) * D12({1, 7, 9}) * D12({3, 5, 9})) *
                          PluckerPoly::monomial(3, 12, {{subset_of({1, 5, 9}), -1}});
    PluckerPoly te = twist_expand(f, make_rectangle_graph(3, 12));
    std::size_t a = 0, b = 0;
    for (int t = 0; t < kX28Points; ++t) {
        Matrix M = generic_matrix(3, 12, rng);
        Q v = evaluate(te, M);
        a += v == evaluate(laurent, M);
        b += v == evaluate(f, twist_matrix(M));
    }
    bool ok = a == std::size_t(kX28Points) && b == std::size_t(kX28Points);
    std::ostringstream sum;
    sum << "rectangle(3,12): " << te.terms.size() << " Laurent terms; equals the closed form at " << ratio(a, kX28Points)
        << " points, f∘τ at " << ratio(b, kX28Points);
    return make(4, "Twist of X_28 over Δ_{1,5,9}", ok, sum.str(),
                {{"terms", te.terms.size()}, {"points", kX28Points}, {"closed_form_agree", a}, {"matrix_twist_agree", b}});
}

json duality_json(const DualityReport& r) {
    return {{"size", r.pairing.rows},
            {"cols", r.pairing.cols},
            {"transpose_bijection", r.transpose_bijection},
            {"diagonal_pm1", r.diagonal_pm1},
            {"diagonal_is_sign", r.diagonal_is_sign},
            {"offdiag_nonzero", r.offdiag_nonzero}};
}

std::vector<WebCombination> load_web_dir(const std::string& dir, int r) {
    std::vector<std::filesystem::path> files;
    for (auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<WebCombination> out;
    for (auto& p : files) {
        std::ifstream in(p);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw Error("bad_json", p.string() + ": " + e.what());
        }
        out.push_back(combination_from_json(j, r));
    }
    if (out.empty()) throw Error("bad_argument", "no .json web files in " + dir);
    return out;
}

// parts: bit 0 = (2,3) on n=6, bit 1 = (3,3) on n=9, bit 2 = supplied SL_4 rows.
CriterionResult duality_check(const VerifyConfig& cfg, int parts) {
    json detail;
    bool ok = true;
    std::vector<std::string> sum;
    auto square = [&](const char* name, const DualityReport& r) {
        bool good = r.transpose_bijection && r.diagonal_pm1 && r.offdiag_nonzero == 0;
        ok = ok && good;
        detail[name] = duality_json(r);
        std::ostringstream os;
        os << name << " " << r.pairing.rows << "x" << r.pairing.cols << (good ? " diagonal ±1" : " NOT diagonal ±1")
           << " (off-diagonal nonzero " << r.offdiag_nonzero << ")";
        sum.push_back(os.str());
    };
    if (parts & 1) square("(2,3)", duality_matrix(sl2_basis(6), sl3_basis(6)));
    if (parts & 2) square("(3,3)", duality_matrix(sl3_basis(9), sl3_basis(9)));
    if (parts & 4) {
        if (cfg.sl4_dir.empty()) {
            detail["sl4"] = "not supplied";
            sum.push_back("SL_4 files not supplied");
        } else {
            auto rows = load_web_dir(cfg.sl4_dir, 4);
            auto r = duality_rows(rows, sl3_basis(12));
            bool good = r.transpose_bijection && r.diagonal_is_sign && r.offdiag_nonzero == 0;
            ok = ok && good;
            detail["sl4"] = duality_json(r);
            sum.push_back("SL_4 rows " + std::to_string(r.pairing.rows) + "x462" + (good ? " diagonal sign(X_j)" : " mismatch"));
        }
    }
    std::string joined;
    for (auto& x : sum) joined += (joined.empty() ? "" : "; ") + x;
    return make(5, "Duality matrices under the transpose matching", ok, joined, detail);
}

CriterionResult basis_check(const VerifyConfig&) {
    json per = json::array();
    bool ok = true;
    std::ostringstream sum;
    const std::map<int, std::size_t> expected = {{3, 1}, {6, 5}, {9, 42}, {12, 462}};
    for (auto [n, want] : expected) {
        auto Ts = syt_enumerate(3, n / 3);
        auto B = sl3_basis(n);
        std::size_t a1 = 0, rot = 0, refl = 0, fork = 0;
        std::set<std::string> keys;
        for (size_t i = 0; i < B.size(); ++i) {
            const Web& W = B[i];
            const Tableau& T = Ts[i];
            keys.insert(canonical_key(W));
            a1 += count_labelings(W, word_and_sign(W).S) == 1;
            rot += tableau_of_web(rotate(W)) == promotion(T);
            refl += tableau_of_web(reflect(W)) == evacuation(T);
            auto ds = descent_set(T);
            bool f = true;
            for (int l = 1; l < n; ++l) f = f && has_fork(W, l, l + 1) == (ds.count(l) > 0);
            fork += f;
        }
        std::size_t N = B.size();
        bool good = N == want && keys.size() == N && a1 == N && rot == N && refl == N && (n > 9 || fork == N);
        ok = ok && good;
        per.push_back({{"n", n}, {"size", N}, {"expected", want}, {"distinct", keys.size()}, {"a_SW_eq_1", a1},
                       {"rotation_promotion", rot}, {"reflection_evacuation", refl}, {"fork_descent", fork},
                       {"fork_descent_required", n <= 9}});
        sum << "n=" << n << ":" << N << " ";
    }
    sum << "(a=1, rotation, reflection, fork/descent " << (ok ? "all hold)" : "FAILED)");
    return make(6, "SL_3 basis integrity", ok, sum.str(), {{"by_n", per}});
}

bool same_on_grid(const PluckerPoly& a, const PluckerPoly& b, const std::vector<BoundaryCondition>& grid) {
    for (auto& S : grid)
        if (poly_on_condition(a, S) != poly_on_condition(b, S)) return false;
    return true;
}

CriterionResult cross_engine_check(const VerifyConfig&) {
    std::size_t webs = 0, agree = 0, prop = 0, forks_total = 0, forks_ok = 0;
    for (int n : {3, 6, 9}) {
        auto B = sl3_basis(n);
        const auto& grid = expander_for(3, B.front().degree()).grid();
        std::vector<char> ag(B.size()), pr(B.size());
        std::vector<std::size_t> ft(B.size()), fo(B.size());
        parallel_for(B.size(), [&](size_t i) {
            const Web& W = B[i];
            auto wr = wrench_expand(W);
            auto fp = expand_linear_fp(W);
            auto lin = expand_linear(W);
            ag[i] = fp.full && same_on_grid(wr.poly, fp.poly, grid);
            pr[i] = same_on_grid(fp.poly, lin.poly * Q(word_and_sign(W).sign), grid);
            for (auto f : forks(W)) {
                ++ft[i];
                auto fe = wrench_expand(W, f);
                bool kept = std::all_of(fe.poly.terms.begin(), fe.poly.terms.end(), [&](auto& t) {
                    return std::any_of(t.first.begin(), t.first.end(),
                                       [&](auto& p) { return contains(p.first, f.first) && contains(p.first, f.second); });
                });
                fo[i] += kept && same_on_grid(fe.poly, wr.poly, grid);
            }
        });
        webs += B.size();
        for (size_t i = 0; i < B.size(); ++i) agree += ag[i], prop += pr[i], forks_total += ft[i], forks_ok += fo[i];
    }
    bool ok = agree == webs && forks_ok == forks_total;
    std::ostringstream sum;
    sum << "wrench = linear on full grids " << ratio(agree, webs) << "; fork-preserving outputs " << ratio(forks_ok, forks_total)
        << "; FP sign relation " << ratio(prop, webs);
    return make(7, "Wrench vs linear expansion", ok, sum.str(),
                {{"webs", webs}, {"agree", agree}, {"fp_sign_relation", prop}, {"forks", forks_total}, {"forks_preserved", forks_ok}});
}

CriterionResult counting_check(const VerifyConfig& cfg) {
    json trees = json::array();
    bool ok = true;
    std::vector<std::int64_t> counted(kTreeDegreeMax + 1, 0);
    std::ostringstream sum;
    sum << "trees";
    for (int d = 1; d <= kTreeDegreeMax; ++d) {
        counted[d] = std::int64_t(enumerate_sl3_tree_webs(d).size());
        std::int64_t cf = tree_count_closed_form(d);
        ok = ok && counted[d] == cf;
        trees.push_back({{"degree", d}, {"enumerated", counted[d]}, {"closed_form", cf}});
        sum << " " << counted[d];
    }
    json bounds = json::array();
    bool lb_ok = true;
    for (int n = 3; n <= kLowerBoundMax; ++n) {
        std::int64_t direct = 0;
        for (int d = 1; 3 * d <= n; ++d) direct += binomial(n, 3 * d) * counted[d];
        std::int64_t formula = tree_lower_bound(n);
        lb_ok = lb_ok && direct == formula;
        bounds.push_back({{"n", n}, {"from_enumeration", direct}, {"formula", formula}});
    }
    ok = ok && lb_ok;
    auto rep = enumerate_sl4_tree_webs(12, cfg.seed);
    ok = ok && rep.distinct == kSl4Trees;
    sum << "; SL_4 n=12 distinct " << rep.distinct << " (expected " << kSl4Trees << ", up to sign, connected trees)"
        << "; lower bounds n<=" << kLowerBoundMax << (lb_ok ? " agree" : " DISAGREE");
    json sl4 = {{"trees", rep.trees},
                {"zero_invariant", rep.zero_invariant},
                {"distinct_up_to_sign", rep.distinct},
                {"distinct_exact", rep.distinct_exact},
                {"collisions_checked", rep.collisions_checked},
                {"collisions_confirmed", rep.collisions_confirmed},
                {"fingerprint_size", rep.fingerprint_size},
                {"seed", rep.seed},
                {"expected", kSl4Trees},
                {"convention", "connected standard trees are indecomposable; invariants compared up to sign"}};
    return make(8, "Tree counts and lower bounds", ok, sum.str(), {{"sl3_trees", trees}, {"lower_bound", bounds}, {"sl4", sl4}});
}

// Distinct weblike subgraphs of r-dimer covers of rectangle(k, n) with nonzero
// invariant: planar, mostly non-basis SL_r webs (bigons, squares, loops).
std::vector<Web> weblike_pool(int k, int n, int r) {
    PlabicGraph G = make_rectangle_graph(k, n);
    std::map<std::string, Web> seen;
    for (auto& D : enumerate_dimer_covers(G, r, std::vector<int>(n, 1))) {
        Web w = weblike_subgraph(G, D);
        seen.emplace(canonical_key(w), w);
    }
    std::vector<Web> out;
    for (auto& [key, w] : seen) {
        try {
            word_and_sign(w);
            out.push_back(w);
        } catch (const Error& e) {
            if (e.code != "zero_invariant") throw;
        }
    }
    return out;
}

CriterionResult pairing_soundness(const VerifyConfig& cfg) {
    auto B9 = sl3_basis(9);
    auto rep = duality_matrix(B9, B9);
    std::size_t flagged = 0, flagged_zero = 0;
    for (size_t i = 0; i < B9.size(); ++i)
        for (size_t j = 0; j < B9.size(); ++j)
            if (fork_prefilter(B9[i], B9[j])) ++flagged, flagged_zero += rep.pairing(int(i), int(j)) == 0;

    // W ranges over basis and non-basis planar webs; X over a basis, where
    // sign(rho X) sign(X) is the uniform covariance sign.
    struct Pool {
        std::string name;
        int r, k;
        std::vector<Web> left, right;  // SL_r webs W, SL_k basis webs X
    };
    std::vector<Pool> pools(2);
    pools[0] = {"(3,3) n=9", 3, 3, sl3_basis(9), sl3_basis(9)};
    for (auto& w : weblike_pool(3, 9, 3)) pools[0].left.push_back(w);
    pools[1] = {"(4,2) n=8", 4, 2, weblike_pool(2, 8, 4), sl2_basis(8)};

    // Pairs are drawn uniformly and kept when <W,X> != 0; zero pairs say nothing about symmetry.
    RationalRng rng(cfg.seed + 9);
    struct Pair {
        int pool;
        const Web *W, *X;
        Q wx;
    };
    std::vector<Pair> pairs;
    std::size_t draws = 0;
    for (size_t p = 0; p < pools.size(); ++p) {
        auto& P = pools[p];
        std::vector<PluckerPoly> ex(P.right.size());
        parallel_for(ex.size(), [&](size_t j) { ex[j] = expand_linear(P.right[j]).poly; });
        std::size_t want = kSampledPairs / pools.size() + (p < kSampledPairs % pools.size());
        for (std::size_t got = 0; got < want && draws < kMaxDraws; ++draws) {
            int i = rng.uniform(0, int(P.left.size()) - 1), j = rng.uniform(0, int(P.right.size()) - 1);
            Q v = pair_with_poly(P.left[i], ex[j]);
            if (v == 0) continue;
            pairs.push_back({int(p), &P.left[i], &P.right[j], v});
            ++got;
        }
    }
    // per pair: <W,X> == <X,W>, == -<X,W>, rotation covariance
    std::vector<std::array<char, 3>> res(pairs.size());
    parallel_for(pairs.size(), [&](size_t t) {
        const Web& W = *pairs[t].W;
        const Web& X = *pairs[t].X;
        const Q& wx = pairs[t].wx;
        Q xw = pair_webs(X, W);
        Web rX = rotate(X);
        bool cov = Q(word_and_sign(rX).sign) * wx == Q(word_and_sign(X).sign) * pair_webs(rotate(W), rX);
        res[t] = {char(wx == xw), char(wx == -xw), char(cov)};
    });
    std::size_t sym = 0, cov = 0;
    json per = json::array();
    std::ostringstream psum;
    for (size_t p = 0; p < pools.size(); ++p) {
        std::size_t cnt = 0, s = 0, a = 0, c = 0;
        for (size_t t = 0; t < pairs.size(); ++t) {
            if (pairs[t].pool != int(p)) continue;
            ++cnt;
            s += res[t][0], a += res[t][1], c += res[t][2];
        }
        sym += s, cov += c;
        int r = pools[p].r, k = pools[p].k;
        int predicted = (binomial(r, 2) * binomial(k, 2)) % 2 ? -1 : 1;
        per.push_back({{"pool", pools[p].name}, {"pairs", cnt}, {"symmetric", s}, {"antisymmetric", a},
                       {"rotation_covariant", c}, {"sign_(-1)^(C(r,2)C(k,2))", predicted}});
        psum << pools[p].name << " symmetric " << ratio(s, cnt) << ", antisymmetric " << ratio(a, cnt) << "; ";
    }
    bool ok = flagged_zero == flagged && pairs.size() == std::size_t(kSampledPairs) && sym == pairs.size() &&
              cov == pairs.size();
    std::ostringstream sum;
    sum << "prefilter-true pairs with pairing 0: " << ratio(flagged_zero, flagged) << "; " << psum.str()
        << "rotation covariance " << ratio(cov, pairs.size()) << " (nonzero pairs only)";
    return make(9, "Pairing soundness, symmetry, rotation covariance", ok, sum.str(),
                {{"prefilter_true", flagged}, {"prefilter_true_and_zero", flagged_zero}, {"sampled_pairs", pairs.size()},
                 {"draws", draws}, {"pools", per}, {"seed", cfg.seed + 9}});
}

CriterionResult excluded_note(const VerifyConfig&) {
    CriterionResult r;
    r.id = 10;
    r.title = "Degree-4 clasped-web coefficients and figure-encoded SL_4 tables";
    r.status = Status::excluded;
    r.summary = "excluded: 264/400/288 need arborization; SL_4 table webs are figures (criteria 5-8 substitute)";
    r.detail = {{"coefficients_carried", {{"9", 288}, {"10", 400}, {"11", 264}, {"12", 52}}},
                {"coefficient_12_reproduced", tree_count_closed_form(4) == 52},
                {"formula_at_12", degree4_count_formula(12)}};
    return r;
}

struct Suite {
    std::string name;
    std::vector<int> ids;
    int duality_parts = 7;
};

const std::vector<Suite>& suites() {
    static const std::vector<Suite> s = {
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
        {"plucker", {1}},
        {"marsh-scott", {2}},
        {"twist", {3}},
        {"x28", {4}},
        {"duality", {5}},
        {"duality-2-3", {5}, 1},
        {"duality-3-3", {5}, 2},
        {"duality-sl4", {5}, 4},
        {"basis", {6}},
        {"cross-engine", {7}},
        {"counting", {8}},
        {"pairing", {9}},
        {"excluded", {10}},
    };
    return s;
}

std::optional<Suite> find_suite(const std::string& name) {
    for (auto& s : suites())
        if (s.name == name) return s;
    for (int i = 1; i <= kCriteria; ++i)
        if (name == std::to_string(i)) return Suite{name, {i}};
    return std::nullopt;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (auto& s : suites()) out.push_back(s.name);
    for (int i = 1; i <= kCriteria; ++i) out.push_back(std::to_string(i));
    return out;
}

bool is_suite(const std::string& name) { return find_suite(name).has_value(); }

std::vector<CriterionResult> run_suite(const std::string& name, const VerifyConfig& cfg) {
    auto s = find_suite(name);
    if (!s) throw Error("unknown_suite", "unknown suite: " + name);
    std::vector<CriterionResult> out;
    for (int id : s->ids) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        switch (id) {
            case 1: r = plucker_relations(cfg); break;
            case 2: r = marsh_scott_check(cfg); break;
            case 3: r = twist_check(cfg); break;
            case 4: r = x28_check(cfg); break;
            case 5: r = duality_check(cfg, s->duality_parts); break;
            case 6: r = basis_check(cfg); break;
            case 7: r = cross_engine_check(cfg); break;
            case 8: r = counting_check(cfg); break;
            case 9: r = pairing_soundness(cfg); break;
            default: r = excluded_note(cfg); break;
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

const char* status_str(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        default: return "EXCLUDED";
    }
}

bool all_passed(const std::vector<CriterionResult>& rs) {
    return std::none_of(rs.begin(), rs.end(), [](auto& r) { return r.status == Status::fail; });
}

json report_json(const std::vector<CriterionResult>& rs, const VerifyConfig& cfg) {
    json out = {{"seed", cfg.seed}, {"passed", all_passed(rs)}, {"criteria", json::array()}};
    for (auto& r : rs)
        out["criteria"].push_back({{"id", r.id}, {"title", r.title}, {"status", status_str(r.status)},
                                   {"summary", r.summary}, {"detail", r.detail}});
    return out;
}

std::string report_table(const std::vector<CriterionResult>& rs) {
    std::ostringstream os;
    for (auto& r : rs)
        os << "criterion " << std::setw(2) << r.id << "  " << std::left << std::setw(8) << status_str(r.status) << std::right
           << " " << r.title << ": " << r.summary << "\n";
    return os.str();
}

}  // namespace wd
