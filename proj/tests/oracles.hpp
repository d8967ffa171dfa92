#pragma once

// Independent brute-force reference implementations for tests. Nothing here
// calls into the library's algorithms; only its data types are shared.

#include "webdimer/dimers.hpp"
#include "webdimer/linalg.hpp"
#include "webdimer/tableaux.hpp"
#include "webdimer/webs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using wd::Q;

// Standard tableaux of shape r x k by filtering all permutations of 1..rk.
inline std::vector<std::vector<int>> syt_by_permutations(int r, int k) {
    std::vector<int> p(r * k);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            for (int j = 0; j < k && ok; ++j) {
                int x = p[i * k + j];
                if (j + 1 < k && p[i * k + j + 1] < x) ok = false;
                if (i + 1 < r && p[(i + 1) * k + j] < x) ok = false;
            }
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Promotion by repeated jeu de taquin: remove 1, slide the hole to the
// outer corner, subtract 1 everywhere, put n in the hole.
inline std::vector<std::vector<int>> promote(std::vector<std::vector<int>> t) {
    int r = int(t.size()), k = int(t[0].size()), n = r * k;
    int i = 0, j = 0;
    for (;;) {
        bool down = i + 1 < r, right = j + 1 < k;
        if (!down && !right) break;
        if (down && (!right || t[i + 1][j] < t[i][j + 1])) {
            t[i][j] = t[i + 1][j];
            ++i;
        } else {
            t[i][j] = t[i][j + 1];
            ++j;
        }
    }
    for (auto& row : t)
        for (int& x : row) --x;
    t[i][j] = n;
    return t;
}

// Leibniz expansion.
inline Q leibniz_det(const std::vector<std::vector<Q>>& m) {
    int n = int(m.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Q s = 0;
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) inv += p[a] > p[b];
        Q term = inv % 2 ? -1 : 1;
        for (int a = 0; a < n; ++a) term *= m[a][p[a]];
        s += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return s;
}

inline Q minor_of(const wd::Matrix& M, const std::vector<int>& cols1) {
    std::vector<std::vector<Q>> m(M.rows, std::vector<Q>(cols1.size()));
    for (int i = 0; i < M.rows; ++i)
        for (size_t j = 0; j < cols1.size(); ++j) m[i][j] = M(i, cols1[j] - 1);
    return leibniz_det(m);
}

// Two-case twist with every cross product obtained as w_j = det(v_1..v_{k-1}, e_j).
inline wd::Matrix twist(const wd::Matrix& M) {
    int k = M.rows, n = M.cols;
    wd::Matrix T(k, n);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> cols;
        int sign = 1;
        if (i <= n - k + 1) {
            for (int j = i + 1; j <= i + k - 1; ++j) cols.push_back(j);
        } else {
            for (int j = 1; j <= i - n + k - 1; ++j) cols.push_back(j);
            for (int j = i + 1; j <= n; ++j) cols.push_back(j);
            sign = (k - n + i - 1) % 2 == 0 ? 1 : -1;
        }
        for (int r = 0; r < k; ++r) {
            std::vector<std::vector<Q>> m(k, std::vector<Q>(k));
            for (int a = 0; a < k; ++a) {
                for (int c = 0; c < k - 1; ++c) m[a][c] = M(a, cols[c] - 1);
                m[a][k - 1] = a == r ? 1 : 0;
            }
            T(r, i - 1) = sign * leibniz_det(m);
        }
    }
    return T;
}

// Non-crossing perfect matchings of 1..n, by checking every perfect matching.
inline std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(int n) {
    std::vector<std::vector<std::pair<int, int>>> all, out;
    std::vector<std::pair<int, int>> cur;
    std::vector<char> used(n + 1, 0);
    auto rec = [&](auto&& self) -> void {
        int a = 1;
        while (a <= n && used[a]) ++a;
        if (a > n) {
            all.push_back(cur);
            return;
        }
        used[a] = 1;
        for (int b = a + 1; b <= n; ++b)
            if (!used[b]) {
                used[b] = 1;
                cur.push_back({a, b});
                self(self);
                cur.pop_back();
                used[b] = 0;
            }
        used[a] = 0;
    };
    rec(rec);
    for (auto& m : all) {
        bool ok = true;
        for (auto [a, b] : m)
            for (auto [c, d] : m)
                if (a < c && c < b && b < d) ok = false;
        if (ok) out.push_back(m);
    }
    return out;
}

// Every multiplicity vector in {0..r}^E, kept when internal vertex sums are r
// and boundary sums equal lambda. Prunes only on sums that already overflow.
inline std::set<std::vector<int>> covers_brute(const wd::Web& g, int r, const std::vector<int>& lambda) {
    int E = g.ne();
    std::vector<int> m(E, 0), vsum(g.nv(), 0), bsum(g.n, 0);
    std::set<std::vector<int>> out;
    auto rec = [&](auto&& self, int e) -> void {
        if (e == E) {
            for (int v = 0; v < g.nv(); ++v)
                if (vsum[v] != r) return;
            for (int i = 0; i < g.n; ++i)
                if (bsum[i] != lambda[i]) return;
            out.insert(m);
            return;
        }
        for (int x = 0; x <= r; ++x) {
            auto bump = [&](int end, int d) {
                if (end >= 0) vsum[end] += d;
                else bsum[-end - 1] += d;
            };
            bump(g.edges[e].u, x);
            bump(g.edges[e].v, x);
            auto over = [&](int end) { return end >= 0 ? vsum[end] > r : bsum[-end - 1] > lambda[-end - 1]; };
            if (!over(g.edges[e].u) && !over(g.edges[e].v)) {
                m[e] = x;
                self(self, e + 1);
            }
            bump(g.edges[e].u, -x);
            bump(g.edges[e].v, -x);
        }
        m[e] = 0;
    };
    rec(rec, 0);
    return out;
}

// a(S; W) by assigning every edge every label set of the right size and
// checking the partition condition at each internal vertex afterwards.
inline std::int64_t labelings_brute(const wd::Web& W, const wd::BoundaryCondition& S) {
    int E = W.ne(), r = W.r;
    std::vector<std::vector<wd::LabelSet>> choices(E);
    for (int e = 0; e < E; ++e)
        for (wd::LabelSet s = 0; s < (1u << r); ++s)
            if (__builtin_popcount(s) == W.edges[e].mult) choices[e].push_back(s);
    std::vector<wd::LabelSet> lab(E);
    std::int64_t count = 0;
    wd::LabelSet full = (1u << r) - 1;
    auto rec = [&](auto&& self, int e) -> void {
        if (e == E) {
            for (int v = 0; v < W.nv(); ++v) {
                wd::LabelSet u = 0;
                int tot = 0;
                for (int x : W.rot[v]) u |= lab[x], tot += W.edges[x].mult;
                if (u != full || tot != r) return;
            }
            for (int i = 0; i < W.n; ++i) {
                wd::LabelSet u = 0;
                for (int x : W.bnd[i]) u |= lab[x];
                if (u != S[i]) return;
            }
            ++count;
            return;
        }
        for (auto s : choices[e]) {
            lab[e] = s;
            self(self, e + 1);
        }
    };
    rec(rec, 0);
    return count;
}

// Number of full ordered 4-ary trees with m internal nodes, by the
// decomposition of the root into four subtrees.
inline std::int64_t quaternary_count(int m) {
    std::vector<std::int64_t> c(m + 1, 0);
    c[0] = 1;
    for (int t = 1; t <= m; ++t)
        for (int a = 0; a < t; ++a)
            for (int b = 0; a + b < t; ++b)
                for (int d = 0; a + b + d < t; ++d) c[t] += c[a] * c[b] * c[d] * c[t - 1 - a - b - d];
    return c[m];
}

}  // namespace oracle
