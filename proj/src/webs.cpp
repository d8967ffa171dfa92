#include "webdimer/webs.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace wd {

BoundaryCondition boundary_from_word(const std::vector<int>& word, const std::vector<int>& lambda) {
    BoundaryCondition S(lambda.size(), 0);
    size_t p = 0;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int t = 0; t < lambda[i]; ++t) {
            if (p >= word.size()) throw Error("size_mismatch", "word shorter than |lambda|");
            LabelSet b = bit(word[p++]);
            if (S[i] & b) throw Error("size_mismatch", "repeated label at one boundary vertex");
            S[i] |= b;
        }
    if (p != word.size()) throw Error("size_mismatch", "word longer than |lambda|");
    return S;
}

std::vector<int> word_of(const BoundaryCondition& S) {
    std::vector<int> w;
    for (LabelSet s : S)
        for (int j : elements(s)) w.push_back(j);
    return w;
}

int sign_of(const BoundaryCondition& S) { return perm_sign(word_of(S)); }

bool content_ok(const BoundaryCondition& S, int r) {
    std::vector<int> c(r + 1, 0);
    for (LabelSet s : S)
        for (int j : elements(s)) {
            if (j > r) return false;
            ++c[j];
        }
    for (int j = 2; j <= r; ++j)
        if (c[j] != c[1]) return false;
    return true;
}

std::string bc_str(const BoundaryCondition& S) {
    std::string out;
    for (size_t i = 0; i < S.size(); ++i) {
        if (i) out += ';';
        out += subset_str(S[i]);
    }
    return out;
}

namespace {

constexpr std::int64_t kFree = -1;

// Edge order: BFS from the boundary in label order, then closed components.
std::vector<int> edge_order(const Web& W) {
    std::vector<int> order;
    std::vector<char> added(W.ne(), 0), seen_int(W.nv(), 0), seen_bnd(W.n + 1, 0);
    auto bfs = [&](int start) {
        std::deque<int> q{start};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int e : W.around(x)) {
                if (added[e]) continue;
                added[e] = 1;
                order.push_back(e);
                int y = W.other(e, x);
                char& s = y >= 0 ? seen_int[y] : seen_bnd[-y];
                if (!s) s = 1, q.push_back(y);
            }
        }
    };
    for (int i = 1; i <= W.n; ++i)
        if (!seen_bnd[i]) seen_bnd[i] = 1, bfs(-i);
    for (int v = 0; v < W.nv(); ++v)
        if (!seen_int[v]) seen_int[v] = 1, bfs(v);
    return order;
}

class Search {
public:
    Search(const Web& W, const std::vector<std::int64_t>& fixed)
        : W_(W), fixed_(fixed), order_(edge_order(W)), full_((LabelSet(1) << W.r) - 1),
          used_(W.nv(), 0), rem_(W.nv(), 0), lab_(W.ne(), 0) {
        for (int v = 0; v < W.nv(); ++v) rem_[v] = int(W.rot[v].size());
        for (int i = 1; i <= W.n; ++i)
            if (fixed_[i - 1] != kFree && W.bnd[i - 1].size() > 1)
                throw Error("not_dual_semistandard", "fixed boundary labels need at most one edge per boundary vertex");
    }

    void run(const std::function<bool(const std::vector<LabelSet>&)>& cb) {
        cb_ = &cb;
        stop_ = false;
        for (int i = 1; i <= W_.n; ++i) {
            std::int64_t f = fixed_[i - 1];
            if (f == kFree) continue;
            int deg = 0;
            for (int e : W_.bnd[i - 1]) deg += W_.edges[e].mult;
            if (popcount(LabelSet(f)) != deg)
                throw Error("size_mismatch", "|S(" + std::to_string(i) + ")| differs from lambda");
        }
        dfs(0);
    }

private:
    void assign(int x, LabelSet l, int delta) {
        if (x < 0) return;
        if (delta > 0) used_[x] |= l, --rem_[x];
        else used_[x] &= ~l, ++rem_[x];
    }

    bool ok_at(int x, LabelSet l) const {
        if (x < 0) return true;
        if (used_[x] & l) return false;
        if (rem_[x] == 1 && (used_[x] | l) != full_) return false;
        return true;
    }

    void dfs(size_t pos) {
        if (stop_) return;
        if (pos == order_.size()) {
            if (!(*cb_)(lab_)) stop_ = true;
            return;
        }
        int e = order_[pos];
        const WEdge& E = W_.edges[e];
        int m = E.mult;
        auto try_label = [&](LabelSet l) {
            if (!ok_at(E.u, l) || !ok_at(E.v, l)) return;
            lab_[e] = l;
            assign(E.u, l, 1);
            assign(E.v, l, 1);
            dfs(pos + 1);
            assign(E.u, l, -1);
            assign(E.v, l, -1);
        };
        // boundary edge with a fixed label
        for (int x : {E.u, E.v})
            if (x < 0 && fixed_[-x - 1] != kFree) {
                try_label(LabelSet(fixed_[-x - 1]));
                return;
            }
        // a forced complement at an endpoint
        for (int x : {E.u, E.v})
            if (x >= 0 && rem_[x] == 1) {
                LabelSet l = full_ & ~used_[x];
                if (popcount(l) == m) try_label(l);
                return;
            }
        LabelSet avail = full_;
        for (int x : {E.u, E.v})
            if (x >= 0) avail &= ~used_[x];
        if (popcount(avail) < m) return;
        // ascending numeric order keeps enumeration deterministic
        std::vector<LabelSet> cands;
        for (LabelSet s = avail;; s = (s - 1) & avail) {
            if (popcount(s) == m) cands.push_back(s);
            if (s == 0) break;
        }
        std::reverse(cands.begin(), cands.end());
        for (LabelSet l : cands) {
            try_label(l);
            if (stop_) return;
        }
    }

    const Web& W_;
    std::vector<std::int64_t> fixed_;
    std::vector<int> order_;
    LabelSet full_;
    std::vector<LabelSet> used_;
    std::vector<int> rem_;
    std::vector<LabelSet> lab_;
    const std::function<bool(const std::vector<LabelSet>&)>* cb_ = nullptr;
    bool stop_ = false;
};

std::vector<std::int64_t> fixed_from(const Web& W, const BoundaryCondition& S) {
    if (S.empty()) return std::vector<std::int64_t>(W.n, kFree);
    if (int(S.size()) != W.n) throw Error("size_mismatch", "boundary condition length differs from n");
    return std::vector<std::int64_t>(S.begin(), S.end());
}

bool feasible(const Web& W, const std::vector<std::int64_t>& fixed) {
    bool found = false;
    Search(W, fixed).run([&](const std::vector<LabelSet>&) {
        found = true;
        return false;
    });
    return found;
}

// Lex-ordered m-subsets of [r].
std::vector<LabelSet> lex_subsets(int r, int m) {
    std::vector<LabelSet> out;
    for (LabelSet s = 0; s < (LabelSet(1) << r); ++s)
        if (popcount(s) == m) out.push_back(s);
    std::sort(out.begin(), out.end(), [](LabelSet a, LabelSet b) { return elements(a) < elements(b); });
    return out;
}

int label_index(LabelSet l) { return __builtin_ctz(l) + 1; }

void require_fp_diagram(const Web& T) {
    if (T.r != 3) throw Error("unsupported", "FP evaluation needs r = 3");
    if (!T.standard()) throw Error("unsupported", "FP evaluation needs a standard diagram");
    for (int v = 0; v < T.nv(); ++v)
        if (T.rot[v].size() != 3) throw Error("unsupported", "FP evaluation needs trivalent internal vertices");
    for (auto& e : T.edges)
        if (e.mult != 1) throw Error("unsupported", "FP evaluation needs multiplicity-one edges");
}

int fp_sign(const Web& T, const std::vector<LabelSet>& lab) {
    int s = 1;
    for (int v = 0; v < T.nv(); ++v) {
        const auto& r = T.rot[v];
        std::vector<int> w = {label_index(lab[r[0]]), label_index(lab[r[1]]), label_index(lab[r[2]])};
        // labels 1,2,3 read clockwise <=> CCW list is an odd permutation
        s *= -perm_sign(w) * fp_orientation;
    }
    return s;
}

BoundaryCondition boundary_of(const Web& W, const std::vector<LabelSet>& lab) {
    BoundaryCondition S(W.n, 0);
    for (int i = 0; i < W.n; ++i)
        for (int e : W.bnd[i]) S[i] |= lab[e];
    return S;
}

}  // namespace

void for_each_labeling(const Web& W, const BoundaryCondition& S,
                       const std::function<bool(const std::vector<LabelSet>&)>& cb) {
    Search(W, fixed_from(W, S)).run(cb);
}

std::int64_t count_labelings(const Web& W, const BoundaryCondition& S) {
    std::int64_t c = 0;
    for_each_labeling(W, S, [&](const std::vector<LabelSet>&) {
        ++c;
        return true;
    });
    return c;
}

std::vector<std::vector<LabelSet>> enumerate_labelings(const Web& W, const BoundaryCondition& S) {
    std::vector<std::vector<LabelSet>> out;
    for_each_labeling(W, S, [&](const std::vector<LabelSet>& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

WordSign word_and_sign(const Web& W0) {
    const Web W = W0.dual_semistandard() ? W0 : unclasp(W0);
    std::vector<std::int64_t> fixed(W.n, kFree);
    if (!feasible(W, fixed)) throw Error("zero_invariant", "no consistent labeling exists");
    std::vector<int> lam = W.degree();
    WordSign ws;
    ws.S.assign(W.n, 0);
    for (int i = 0; i < W.n; ++i) {
        bool done = false;
        for (LabelSet c : lex_subsets(W.r, lam[i])) {
            fixed[i] = c;
            if (feasible(W, fixed)) {
                ws.S[i] = c;
                done = true;
                break;
            }
        }
        if (!done) throw Error("internal", "lex-minimal word search lost feasibility");
    }
    ws.word = word_of(ws.S);
    ws.sign = perm_sign(ws.word);
    return ws;
}

std::int64_t evaluate_invariant(const Web& W, const BoundaryCondition& S) {
    if (!content_ok(S, W.r)) return 0;
    return sign_of(S) * count_labelings(W, S);
}

std::int64_t evaluate_fp(const Web& T, const BoundaryCondition& S) {
    require_fp_diagram(T);
    std::int64_t total = 0;
    for_each_labeling(T, S, [&](const std::vector<LabelSet>& lab) {
        total += fp_sign(T, lab);
        return true;
    });
    return total;
}

Q evaluate_fp_at_point(const Web& T, const Matrix& M) {
    require_fp_diagram(T);
    if (M.rows != 3 || M.cols != T.n) throw Error("size_mismatch", "point must be a 3 x n matrix");
    Q total = 0;
    for_each_labeling(T, {}, [&](const std::vector<LabelSet>& lab) {
        Q term = fp_sign(T, lab);
        for (int i = 0; i < T.n && term != 0; ++i)
            for (int e : T.bnd[i]) term *= M(label_index(lab[e]) - 1, i);
        total += term;
        return true;
    });
    return total;
}

Q evaluate_invariant_at_point(const Web& W, const Matrix& M) {
    if (!W.standard()) throw Error("unsupported", "point evaluation needs a standard web");
    if (M.rows != W.r || M.cols != W.n) throw Error("size_mismatch", "point must be an r x n matrix");
    Q total = 0;
    for_each_labeling(W, {}, [&](const std::vector<LabelSet>& lab) {
        BoundaryCondition S = boundary_of(W, lab);
        Q term = sign_of(S);
        for (int i = 0; i < W.n && term != 0; ++i)
            for (int e : W.bnd[i]) term *= M(label_index(lab[e]) - 1, i);
        total += term;
        return true;
    });
    return total;
}

Web unclasp(const Web& X, std::vector<int>* grouping) {
    Web W = X;
    std::vector<int> off(X.n + 1, 0);
    for (int i = 0; i < X.n; ++i) off[i + 1] = off[i] + int(X.bnd[i].size());
    W.n = off[X.n];
    W.bnd.assign(W.n, {});
    for (int i = 0; i < X.n; ++i)
        for (size_t p = 0; p < X.bnd[i].size(); ++p) {
            int e = X.bnd[i][p], nb = off[i] + int(p) + 1;
            W.bnd[nb - 1] = {e};
            WEdge& E = W.edges[e];
            (E.u == -(i + 1) ? E.u : E.v) = -nb;
        }
    if (grouping) {
        grouping->clear();
        for (int i = 0; i < X.n; ++i) grouping->push_back(int(X.bnd[i].size()));
    }
    return W;
}

Web clasp(const Web& W, const std::vector<int>& grouping) {
    int tot = 0;
    for (int g : grouping) {
        if (g < 0) throw Error("bad_grouping", "negative group size");
        tot += g;
    }
    if (tot != W.n) throw Error("bad_grouping", "grouping does not sum to n");
    Web X = W;
    X.n = int(grouping.size());
    X.bnd.assign(X.n, {});
    int b = 0;
    for (int g = 0; g < X.n; ++g)
        for (int t = 0; t < grouping[g]; ++t, ++b)
            for (int e : W.bnd[b]) {
                X.bnd[g].push_back(e);
                WEdge& E = X.edges[e];
                (E.u == -(b + 1) ? E.u : E.v) = -(g + 1);
            }
    return X;
}

namespace {

Web relabel_boundary(const Web& W, const std::function<int(int)>& f, bool mirror) {
    Web out = W;
    out.bnd.assign(W.n, {});
    for (int i = 1; i <= W.n; ++i) {
        auto lst = W.bnd[i - 1];
        if (mirror) std::reverse(lst.begin(), lst.end());
        out.bnd[f(i) - 1] = lst;
    }
    for (auto& e : out.edges) {
        if (e.u < 0) e.u = -f(-e.u);
        if (e.v < 0) e.v = -f(-e.v);
    }
    if (mirror)
        for (auto& l : out.rot) std::reverse(l.begin(), l.end());
    return out;
}

}  // namespace

Web rotate(const Web& W, int times) {
    int n = W.n;
    if (n == 0) return W;
    int t = ((times % n) + n) % n;
    return relabel_boundary(W, [n, t](int i) { return ((i - 1 - t) % n + n) % n + 1; }, false);
}

Web reflect(const Web& W) {
    int n = W.n;
    return relabel_boundary(W, [n](int i) { return n + 1 - i; }, true);
}

Tableau tableau_of_web(const Web& W) {
    std::vector<int> grouping;
    Web U = W.dual_semistandard() ? W : unclasp(W, &grouping);
    std::vector<int> orig(U.n);
    if (grouping.empty()) std::iota(orig.begin(), orig.end(), 1);
    else {
        int b = 0;
        for (size_t g = 0; g < grouping.size(); ++g)
            for (int t = 0; t < grouping[g]; ++t) orig[b++] = int(g) + 1;
    }
    WordSign ws = word_and_sign(U);
    std::vector<std::vector<int>> rows(W.r);
    for (int i = 0; i < U.n; ++i)
        for (int j : elements(ws.S[i])) rows[j - 1].push_back(orig[i]);
    for (auto& r : rows) std::sort(r.begin(), r.end());
    for (auto& r : rows)
        if (r.size() != rows[0].size()) throw Error("internal", "rows of T(W) have unequal length");
    return Tableau::from_rows(rows);
}

bool has_fork(const Web& W, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > W.n || j > W.n) return false;
    const auto& a = W.bnd[i - 1];
    const auto& b = W.bnd[j - 1];
    if (a.size() != 1 || b.size() != 1) return false;
    int x = W.other(a[0], -i), y = W.other(b[0], -j);
    return x >= 0 && x == y;
}

std::vector<std::pair<int, int>> forks(const Web& W) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= W.n; ++i)
        for (int j = i + 1; j <= W.n; ++j)
            if (has_fork(W, i, j)) out.emplace_back(i, j);
    return out;
}

void WebCombination::add(const Q& c, const Web& w) {
    if (c == 0) return;
    std::string key = canonical_key(w);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, std::make_pair(c, w));
        return;
    }
    it->second.first += c;
    if (it->second.first == 0) terms.erase(it);
}

nlohmann::json combination_to_json(const WebCombination& c) {
    nlohmann::json j = nlohmann::json::array();
    for (auto& [key, t] : c.terms) j.push_back({{"coeff", q_str(t.first)}, {"web", web_to_json(t.second)}});
    return j;
}

WebCombination combination_from_json(const nlohmann::json& j, int default_r) {
    WebCombination c;
    if (j.is_object()) {
        c.add(1, web_from_json(j, default_r));
        return c;
    }
    if (!j.is_array()) throw Error("bad_json", "web combination must be an array or a single web");
    for (auto& t : j) {
        try {
            c.add(parse_q(t.at("coeff").get<std::string>()), web_from_json(t.at("web"), default_r));
        } catch (const nlohmann::json::exception& ex) {
            throw Error("bad_json", ex.what());
        }
    }
    return c;
}

Web make_tripod(int n, int a, int b, int c) {
    std::vector<int> p = {a, b, c};
    std::sort(p.begin(), p.end());
    if (p[0] < 1 || p[2] > n || p[0] == p[1] || p[1] == p[2]) throw Error("bad_graph", "tripod legs must be distinct boundary labels");
    Web w;
    w.r = 3;
    w.n = n;
    w.bnd.assign(n, {});
    int v = w.add_vertex(true);
    for (int t = 2; t >= 0; --t) {
        int e = w.add_edge(v, -p[t]);
        w.rot[v].push_back(e);
        w.bnd[p[t] - 1].push_back(e);
    }
    return w;
}

Web make_sl2_arc_web(int n, const std::vector<std::pair<int, int>>& arcs) {
    Web w;
    w.r = 2;
    w.n = n;
    w.bnd.assign(n, {});
    for (auto [a, b] : arcs) {
        int v = w.add_vertex(true);
        for (int x : {b, a}) {
            if (x < 1 || x > n) throw Error("bad_graph", "arc endpoint out of range");
            int e = w.add_edge(v, -x);
            w.rot[v].push_back(e);
            w.bnd[x - 1].push_back(e);
        }
    }
    return w;
}

Web disjoint_union(const Web& a, const Web& b) {
    if (a.n != b.n || a.r != b.r) throw Error("size_mismatch", "disjoint union needs equal n and r");
    Web w = a;
    int vo = a.nv(), eo = a.ne();
    for (int v = 0; v < b.nv(); ++v) {
        w.add_vertex(b.white[v]);
        for (int e : b.rot[v]) w.rot.back().push_back(e + eo);
    }
    for (auto e : b.edges) {
        if (e.u >= 0) e.u += vo;
        if (e.v >= 0) e.v += vo;
        w.edges.push_back(e);
    }
    for (int i = 0; i < b.n; ++i)
        for (int e : b.bnd[i]) w.bnd[i].push_back(e + eo);
    w.planar = a.planar && b.planar && embedding_is_planar(w);
    return w;
}

}  // namespace wd
