#include "webdimer/pairing.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace wd {

BoundaryCondition dual_condition(const std::vector<Subset>& I, int n) {
    BoundaryCondition S(n, 0);
    for (size_t j = 0; j < I.size(); ++j)
        for (int i : elements(I[j])) {
            if (i > n) throw Error("size_mismatch", "subset element exceeds n");
            S[i - 1] |= bit(int(j) + 1);
        }
    return S;
}

std::vector<Subset> factors_of(const Monomial& m) {
    std::vector<Subset> out;
    for (auto& [I, e] : m) {
        if (e < 0) throw Error("not_polynomial", "negative exponent in a pairing argument");
        for (int t = 0; t < e; ++t) out.push_back(I);
    }
    return out;
}

std::int64_t pair_with_monomial(const Web& W, const std::vector<Subset>& I) {
    if (int(I.size()) != W.r) throw Error("degree_mismatch", "monomial degree differs from r");
    BoundaryCondition S = dual_condition(I, W.n);
    std::vector<int> lam = W.degree();
    for (int i = 0; i < W.n; ++i)
        if (popcount(S[i]) != lam[i]) throw Error("degree_mismatch", "monomial multidegree differs from lambda");
    return count_labelings(W, S);
}

Q pair_with_poly(const Web& W, const PluckerPoly& f) {
    Q s = 0;
    for (auto& [m, c] : f.terms) s += c * pair_with_monomial(W, factors_of(m));
    return s;
}

Q pair_with_poly(const WebCombination& W, const PluckerPoly& f) {
    Q s = 0;
    for (auto& [key, t] : W.terms) s += t.first * pair_with_poly(t.second, f);
    return s;
}

namespace {

int mono_value(const std::vector<Subset>& I, const BoundaryCondition& S, int k) {
    std::vector<int> use(S.size(), 0);
    int sign = 1;
    for (Subset J : I) {
        std::vector<int> w;
        for (int i : elements(J)) {
            if (i > int(S.size())) return 0;
            ++use[i - 1];
            if (popcount(S[i - 1]) != 1) return 0;
            w.push_back(__builtin_ctz(S[i - 1]) + 1);
        }
        std::vector<int> s = w;
        std::sort(s.begin(), s.end());
        for (int t = 0; t < int(s.size()); ++t)
            if (s[t] != t + 1) return 0;
        if (int(s.size()) != k) return 0;
        sign *= perm_sign(w);
    }
    for (size_t i = 0; i < S.size(); ++i) {
        if (popcount(S[i]) > 1) throw Error("unsupported", "E_S evaluation needs |S(i)| <= 1");
        if (use[i] != popcount(S[i])) return 0;
    }
    return sign;
}

}  // namespace

Q poly_on_condition(const PluckerPoly& p, const BoundaryCondition& S) {
    Q s = 0;
    for (auto& [m, c] : p.terms) {
        int v = mono_value(factors_of(m), S, p.k);
        if (v) s += c * v;
    }
    return s;
}

std::vector<BoundaryCondition> content_grid(const std::vector<int>& lambda, int k) {
    std::vector<int> pos;
    for (int i = 0; i < int(lambda.size()); ++i) {
        if (lambda[i] > 1) throw Error("unsupported", "grid needs lambda in {0,1}^n");
        if (lambda[i] == 1) pos.push_back(i);
    }
    if (pos.size() % k) throw Error("degree_mismatch", "|lambda| must be a multiple of k");
    int d = int(pos.size()) / k;
    std::vector<int> word;
    for (int j = 1; j <= k; ++j)
        for (int t = 0; t < d; ++t) word.push_back(j);
    std::vector<BoundaryCondition> out;
    do {
        BoundaryCondition S(lambda.size(), 0);
        for (size_t t = 0; t < pos.size(); ++t) S[pos[t]] = bit(word[t]);
        out.push_back(std::move(S));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

LinearExpander::LinearExpander(int k, std::vector<int> lambda) : k_(k), n_(int(lambda.size())), lambda_(std::move(lambda)) {
    std::vector<int> pos;
    for (int i = 0; i < n_; ++i) {
        if (lambda_[i] > 1) throw Error("unsupported", "linear expansion needs lambda in {0,1}^n");
        if (lambda_[i] == 1) pos.push_back(i + 1);
    }
    if (k < 1 || pos.empty() || pos.size() % k) throw Error("degree_mismatch", "|lambda| must be a positive multiple of k");
    int d = int(pos.size()) / k;
    auto tabs = syt_enumerate(k, d);
    for (auto& T : tabs) {
        std::vector<Subset> I;
        for (int c = 0; c < d; ++c) {
            Subset s = 0;
            for (int i = 0; i < k; ++i) s |= bit(pos[T.at(i, c) - 1]);
            I.push_back(s);
        }
        std::sort(I.begin(), I.end());
        monos_.push_back(I);
        BoundaryCondition S(n_, 0);
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < d; ++c) S[pos[T.at(i, c) - 1] - 1] = bit(i + 1);
        rows_.push_back(S);
    }
    int N = int(tabs.size());
    Matrix A(N, N);
    for (int u = 0; u < N; ++u)
        for (int t = 0; t < N; ++t) A(u, t) = mono_value(monos_[t], rows_[u], k_);
    auto inv = inverse(A);
    if (!inv) throw Error("internal", "standard monomial system is singular");
    inv_ = std::move(*inv);
    grid_ = content_grid(lambda_, k_);
}

Expansion LinearExpander::expand(const Evaluator& X, std::size_t full_limit, std::size_t sample, std::uint64_t seed) const {
    int N = int(rows_.size());
    std::vector<Q> b(N);
    parallel_for(N, [&](size_t u) { b[u] = X(rows_[u]); });
    Expansion ex;
    ex.poly = PluckerPoly(k_, n_);
    for (int t = 0; t < N; ++t) {
        Q c = 0;
        for (int u = 0; u < N; ++u)
            if (inv_(t, u) != 0 && b[u] != 0) c += inv_(t, u) * b[u];
        if (c != 0) ex.poly.add(mono_of(monos_[t]), c);
    }
    std::vector<size_t> idx;
    ex.grid = grid_.size();
    if (grid_.size() <= full_limit) {
        idx.resize(grid_.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        ex.full = true;
    } else {
        std::mt19937_64 g(seed);
        std::uniform_int_distribution<size_t> U(0, grid_.size() - 1);
        for (size_t s = 0; s < sample; ++s) idx.push_back(U(g));
    }
    std::vector<char> bad(idx.size(), 0);
    parallel_for(idx.size(), [&](size_t s) {
        const auto& S = grid_[idx[s]];
        if (poly_on_condition(ex.poly, S) != X(S)) bad[s] = 1;
    });
    for (size_t s = 0; s < idx.size(); ++s)
        if (bad[s]) throw Error("expansion_failed", "expansion disagrees with the invariant at " + bc_str(grid_[idx[s]]));
    ex.checked = idx.size();
    return ex;
}

const LinearExpander& expander_for(int k, const std::vector<int>& lambda) {
    static std::mutex mu;
    static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<LinearExpander>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto& p = cache[{k, lambda}];
    if (!p) p = std::make_unique<LinearExpander>(k, lambda);
    return *p;
}

Expansion expand_linear(const Web& X) {
    if (!X.standard()) throw Error("unsupported", "linear expansion needs a standard web");
    return expander_for(X.r, X.degree()).expand([&](const BoundaryCondition& S) { return Q(evaluate_invariant(X, S)); });
}

Expansion expand_linear_fp(const Web& T) {
    return expander_for(3, T.degree()).expand([&](const BoundaryCondition& S) { return Q(evaluate_fp(T, S)); });
}

namespace {

int fp_vertex(const std::vector<int>& ccw_labels) { return -perm_sign(ccw_labels) * fp_orientation; }

// Drops dead edges and vertices, renumbering the rest.
Web rebuild(const Web& w, const std::vector<char>& dead_e, const std::vector<char>& dead_v) {
    Web out;
    out.r = w.r;
    out.n = w.n;
    out.planar = w.planar;
    std::vector<int> vid(w.nv(), -1), eid(w.ne(), -1);
    for (int v = 0; v < w.nv(); ++v)
        if (!dead_v[v]) vid[v] = out.add_vertex(w.white[v]);
    auto code = [&](int x) { return x >= 0 ? vid[x] : x; };
    for (int e = 0; e < w.ne(); ++e)
        if (!dead_e[e]) eid[e] = out.add_edge(code(w.edges[e].u), code(w.edges[e].v), w.edges[e].mult);
    for (int v = 0; v < w.nv(); ++v)
        if (!dead_v[v])
            for (int e : w.rot[v]) out.rot[vid[v]].push_back(eid[e]);
    out.bnd.assign(w.n, {});
    for (int i = 0; i < w.n; ++i)
        for (int e : w.bnd[i]) out.bnd[i].push_back(eid[e]);
    return out;
}

// Contracts the adjacent pair (w white, b black) into a signed sum of diagrams.
std::vector<std::pair<Q, Web>> contract(const Web& T, int w, int b) {
    auto rot_from = [&](int v) {
        // CCW list starting right after the first shared edge
        const auto& r = T.rot[v];
        int s = 0;
        while (T.other(r[s], v) != (v == w ? b : w)) ++s;
        std::vector<int> out;
        for (int t = 1; t <= int(r.size()); ++t) out.push_back(r[(s + t) % r.size()]);
        return out;
    };
    std::vector<int> rw = rot_from(w), rb = rot_from(b);
    std::vector<int> ext_w, ext_b;
    for (int e : rw)
        if (T.other(e, w) != b) ext_w.push_back(e);
    for (int e : rb)
        if (T.other(e, b) != w) ext_b.push_back(e);
    if (ext_w.size() != ext_b.size()) throw Error("internal", "unbalanced wrench site");
    int m = int(ext_w.size());
    std::vector<int> shared;
    for (int e : T.rot[w])
        if (T.other(e, w) == b) shared.push_back(e);

    // local tensor value with ext_w labelled 1..m and ext_b labelled by perm
    std::vector<int> perm(m);
    for (int t = 0; t < m; ++t) perm[t] = t;
    std::vector<std::pair<Q, Web>> out;
    do {
        std::map<int, int> lab;
        for (int t = 0; t < m; ++t) lab[ext_w[t]] = t + 1;
        std::vector<int> bl(m);
        for (int t = 0; t < m; ++t) bl[perm[t]] = t + 1;  // ext_b[perm[t]] gets label of ext_w[t]
        std::map<int, int> labb;
        for (int t = 0; t < m; ++t) labb[ext_b[t]] = bl[t];
        std::int64_t coeff = 0;
        int s = int(shared.size());
        int combos = 1;
        for (int t = 0; t < s; ++t) combos *= 3;
        for (int c = 0; c < combos; ++c) {
            std::map<int, int> sh;
            int x = c;
            for (int t = 0; t < s; ++t) sh[shared[t]] = x % 3 + 1, x /= 3;
            auto labels_at = [&](int v, const std::map<int, int>& ext) {
                std::vector<int> l;
                for (int e : T.rot[v]) l.push_back(sh.count(e) ? sh.at(e) : ext.at(e));
                return l;
            };
            std::vector<int> lw = labels_at(w, lab), lb = labels_at(b, labb);
            auto is_perm = [](std::vector<int> l) {
                std::sort(l.begin(), l.end());
                return l == std::vector<int>{1, 2, 3};
            };
            if (!is_perm(lw) || !is_perm(lb)) continue;
            coeff += fp_vertex(lw) * fp_vertex(lb);
        }
        if (coeff == 0) continue;
        Web N = T;
        std::vector<char> dead_e(T.ne(), 0), dead_v(T.nv(), 0);
        dead_v[w] = dead_v[b] = 1;
        for (int e : shared) dead_e[e] = 1;
        for (int t = 0; t < m; ++t) {
            int ew = ext_w[t], eb = ext_b[perm[t]];
            int far_b = T.other(eb, b);
            WEdge& E = N.edges[ew];
            (E.u == w ? E.u : E.v) = far_b;
            for (int& e : N.rot[far_b])
                if (e == eb) e = ew;
            dead_e[eb] = 1;
        }
        N.planar = false;
        out.emplace_back(Q(coeff), rebuild(N, dead_e, dead_v));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

Expansion wrench_expand(const Web& T0, std::optional<std::pair<int, int>> fork) {
    if (T0.r != 3 || !T0.standard()) throw Error("unsupported", "wrench rewriting needs a standard SL_3 diagram");
    T0.validate(true);
    if (fork && !has_fork(T0, fork->first, fork->second))
        throw Error("no_fork", "diagram has no fork at the requested pair");
    PluckerPoly poly(3, T0.n);
    std::vector<std::pair<Q, Web>> work = {{Q(1), T0}};
    while (!work.empty()) {
        auto [c, T] = std::move(work.back());
        work.pop_back();
        int b = -1;
        for (int v = 0; v < T.nv() && b < 0; ++v)
            if (!T.white[v]) b = v;
        if (b < 0) {
            // only tripods remain
            std::vector<Subset> I;
            Q coeff = c;
            for (int v = 0; v < T.nv(); ++v) {
                std::vector<int> legs;
                for (int e : T.rot[v]) {
                    int y = T.other(e, v);
                    if (y >= 0) throw Error("internal", "wrench rewriting stalled");
                    legs.push_back(-y);
                }
                std::vector<int> sorted = legs;
                std::sort(sorted.begin(), sorted.end());
                std::vector<int> lab;
                for (int x : legs) lab.push_back(int(std::find(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
                coeff *= fp_vertex(lab);
                I.push_back(subset_of(sorted));
            }
            poly.add(mono_of(I), coeff);
            continue;
        }
        int f = -1;
        if (fork) f = T.other(T.bnd[fork->first - 1][0], -fork->first);
        int w = -1;
        for (int e : T.rot[b]) {
            int y = T.other(e, b);
            if (y != f) {
                w = y;
                break;
            }
        }
        if (w < 0) throw Error("internal", "no admissible wrench site");
        for (auto& [cc, N] : contract(T, w, b)) work.emplace_back(c * cc, std::move(N));
    }
    Expansion ex;
    ex.poly = poly;
    return ex;
}

Q pair_webs(const Web& W, const Web& X) {
    if (W.n != X.n || W.degree() != X.degree()) throw Error("degree_mismatch", "webs have different degrees");
    Expansion ex = expand_linear(X);
    return pair_with_poly(W, ex.poly);
}

Q pair_webs(const WebCombination& W, const WebCombination& X) {
    Q s = 0;
    for (auto& [kx, tx] : X.terms) {
        Expansion ex = expand_linear(tx.second);
        for (auto& [kw, tw] : W.terms) s += tw.first * tx.first * pair_with_poly(tw.second, ex.poly);
    }
    return s;
}

bool fork_prefilter(const Web& W, const Web& X) {
    for (auto& p : forks(W))
        if (has_fork(X, p.first, p.second)) return true;
    return false;
}

namespace {

// Fills partner/sign data and the diagonal summary from a computed pairing block.
void summarize(DualityReport& rep, const std::vector<Tableau>& TA, const std::vector<Web>& B) {
    int R = int(TA.size()), N = int(B.size());
    std::vector<Tableau> TB(N);
    rep.signs.resize(N);
    for (int j = 0; j < N; ++j) {
        TB[j] = tableau_of_web(B[j]);
        rep.signs[j] = word_and_sign(B[j]).sign;
    }
    rep.partner.assign(R, -1);
    std::vector<int> hit(N, 0);
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < N; ++j)
            if (TA[i] == TB[j]) rep.partner[i] = j, ++hit[j];
    rep.transpose_bijection = std::all_of(rep.partner.begin(), rep.partner.end(), [](int j) { return j >= 0; }) &&
                              std::all_of(hit.begin(), hit.end(), [](int h) { return h <= 1; });
    rep.diagonal_pm1 = rep.transpose_bijection;
    rep.diagonal_is_sign = rep.transpose_bijection;
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < N; ++j) {
            const Q& v = rep.pairing(i, j);
            if (j == rep.partner[i]) {
                if (v != 1 && v != -1) rep.diagonal_pm1 = false;
                if (v != rep.signs[j]) rep.diagonal_is_sign = false;
            } else if (v != 0) {
                ++rep.offdiag_nonzero;
            }
        }
}

std::vector<PluckerPoly> expansions(const std::vector<Web>& B) {
    std::vector<PluckerPoly> ex(B.size());
    parallel_for(B.size(), [&](size_t j) { ex[j] = expand_linear(B[j]).poly; });
    return ex;
}

}  // namespace

DualityReport duality_matrix(const std::vector<Web>& A, const std::vector<Web>& B) {
    if (A.size() != B.size()) throw Error("dimension_mismatch", "bases must have equal size");
    int N = int(A.size());
    DualityReport rep;
    rep.pairing = Matrix(N, N);
    auto ex = expansions(B);
    parallel_for(size_t(N) * N, [&](size_t t) {
        int i = int(t / N), j = int(t % N);
        rep.pairing(i, j) = pair_with_poly(A[i], ex[j]);
    });
    std::vector<Tableau> TA(N);
    for (int i = 0; i < N; ++i) TA[i] = transpose(tableau_of_web(A[i]));
    summarize(rep, TA, B);
    return rep;
}

DualityReport duality_rows(const std::vector<WebCombination>& A, const std::vector<Web>& B) {
    if (B.empty()) throw Error("dimension_mismatch", "empty column basis");
    int R = int(A.size()), N = int(B.size());
    DualityReport rep;
    rep.pairing = Matrix(R, N);
    std::vector<Tableau> TA(R);
    for (int i = 0; i < R; ++i) {
        if (A[i].terms.empty()) throw Error("bad_argument", "empty web combination");
        const Web& w = A[i].terms.begin()->second.second;
        if (w.n != B.front().n || w.degree() != B.front().degree())
            throw Error("dimension_mismatch", "row web has a different boundary degree");
        TA[i] = transpose(tableau_of_web(w));
    }
    auto ex = expansions(B);
    parallel_for(size_t(R) * N, [&](size_t t) {
        int i = int(t / N), j = int(t % N);
        rep.pairing(i, j) = pair_with_poly(A[i], ex[j]);
    });
    summarize(rep, TA, B);
    return rep;
}

PluckerPoly twist_expand(const PluckerPoly& f, const PlabicGraph& G, TwistMode mode) {
    int k = G.type(), n = G.n();
    if (f.k != k || f.n != n) throw Error("size_mismatch", "polynomial lives on a different Grassmannian");
    if (f.is_zero()) return PluckerPoly(k, n);
    if (!f.homogeneous()) throw Error("inhomogeneous", "twist expansion needs a homogeneous polynomial");
    std::vector<int> lambda = f.multidegree();
    int r = mono_degree(f.terms.begin()->first);
    for (auto& [m, c] : f.terms) factors_of(m);
    if (mode == TwistMode::factored) {
        std::map<Subset, PluckerPoly> ms;
        PluckerPoly out(k, n);
        for (auto& [m, c] : f.terms) {
            PluckerPoly t = PluckerPoly::constant(k, n, c);
            for (Subset I : factors_of(m)) {
                if (!ms.count(I)) ms.emplace(I, marsh_scott(G, I));
                t = t * ms.at(I);
            }
            out += t;
        }
        return out;
    }
    auto covers = enumerate_dimer_covers(G, r, lambda);
    unsigned W = std::max(1u, std::min<unsigned>(workers(), unsigned(covers.size())));
    std::vector<PluckerPoly> part(W, PluckerPoly(k, n));
    parallel_for(W, [&](size_t t) {
        for (size_t i = t; i < covers.size(); i += W) {
            Web D = weblike_subgraph(G, covers[i]);
            Q c = pair_with_poly(D, f);
            if (c != 0) part[t].add(face_weight(G, covers[i]), c);
        }
    });
    PluckerPoly out(k, n);
    for (auto& p : part) out += p;
    return out;
}

std::vector<Q> expand_in_web_basis(const Web& D, const std::vector<Web>& basis) {
    if (basis.empty()) throw Error("rank_deficient", "empty basis");
    int N = int(basis.size());
    std::vector<int> lam = D.degree();
    for (int x : lam)
        if (x != 1) throw Error("unsupported", "basis expansion needs lambda = (1^n)");
    int r = D.r;
    int k = D.n / r;
    if (k * r != D.n) throw Error("degree_mismatch", "n must be a multiple of r");
    std::vector<BoundaryCondition> rows;
    for (auto& W : basis) {
        if (W.r != r || W.degree() != lam) throw Error("degree_mismatch", "basis web of a different type");
        rows.push_back(word_and_sign(W).S);
    }
    Matrix A(N, N);
    std::vector<Q> b(N);
    parallel_for(size_t(N) * N, [&](size_t t) {
        int u = int(t / N), j = int(t % N);
        A(u, j) = evaluate_invariant(basis[j], rows[u]);
    });
    for (int u = 0; u < N; ++u) b[u] = evaluate_invariant(D, rows[u]);
    auto x = solve(A, b);
    int rk = rank(A);
    if (!x || rk != N) throw Error("rank_deficient", "basis is rank-deficient on the grid");
    auto grid = content_grid(lam, r);
    if (grid.size() > 20000) {
        std::mt19937_64 g(1);
        std::shuffle(grid.begin(), grid.end(), g);
        grid.resize(2000);
    }
    std::vector<char> bad(grid.size(), 0);
    parallel_for(grid.size(), [&](size_t s) {
        Q v = 0;
        for (int j = 0; j < N; ++j)
            if ((*x)[j] != 0) v += (*x)[j] * evaluate_invariant(basis[j], grid[s]);
        if (v != evaluate_invariant(D, grid[s])) bad[s] = 1;
    });
    for (char c : bad)
        if (c) throw Error("rank_deficient", "basis does not span the invariant on the grid");
    return *x;
}

}  // namespace wd
