#include "webdimer/basisgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wd {

Web sl2_web(const Tableau& T) {
    if (T.rows != 2 || !T.is_standard()) throw Error("bad_tableau", "need a standard 2-row tableau");
    std::vector<int> w = yamanouchi_word(T), stack;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= int(w.size()); ++i) {
        if (w[i - 1] == 1) stack.push_back(i);
        else {
            arcs.emplace_back(stack.back(), i);
            stack.pop_back();
        }
    }
    return make_sl2_arc_web(int(w.size()), arcs);
}

std::vector<Web> sl2_basis(int n) {
    if (n < 2 || n % 2) throw Error("bad_argument", "SL_2 basis needs even n >= 2");
    if (n > 16) throw Error("size_guard", "n <= 16 for the SL_2 basis");
    std::vector<Web> out;
    for (auto& T : syt_enumerate(2, n / 2)) out.push_back(sl2_web(T));
    return out;
}

namespace {

struct Vec {
    double x, y;
};
Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec operator-(Vec a) { return {-a.x, -a.y}; }

struct Arc {
    int left, right;  // boundary labels
    bool lower_type;  // true: 1-2 arc (1-point on the left), false: 2-3 arc
    double c, R;
};

// Incidences with directions; rotation = CCW by angle.
struct Builder {
    Web w;
    std::vector<std::vector<std::pair<double, int>>> arms;  // per internal vertex
    std::vector<std::vector<int>> bnd_edges;

    int vertex(bool white) {
        arms.emplace_back();
        return w.add_vertex(white);
    }
    // `du`, `dv`: directions of the edge leaving u and v (internal ends only)
    void edge(int u, Vec du, int v, Vec dv) {
        int e = w.add_edge(u, v);
        if (u >= 0) arms[u].emplace_back(std::atan2(du.y, du.x), e);
        else w.bnd[-u - 1].push_back(e);
        if (v >= 0) arms[v].emplace_back(std::atan2(dv.y, dv.x), e);
        else w.bnd[-v - 1].push_back(e);
    }
    void finish() {
        for (int v = 0; v < w.nv(); ++v) {
            std::sort(arms[v].begin(), arms[v].end());
            for (auto& [a, e] : arms[v]) w.rot[v].push_back(e);
        }
    }
};

double xpos(int i) {
    // generic positions: no three arcs through one point, distinct crossing abscissae
    return i + 0.001 * std::sin(1.7 * i + 0.3) + 0.0007 * std::cos(3.1 * i * i);
}

}  // namespace

Web sl3_growth(const Tableau& T) {
    if (T.rows != 3 || !T.is_standard()) throw Error("bad_tableau", "need a standard 3-row tableau");
    std::vector<int> w = yamanouchi_word(T);
    int n = int(w.size());
    std::vector<int> open1, open2, partner_left(n + 1, 0), partner_right(n + 1, 0);
    std::vector<Arc> arcs;
    for (int i = 1; i <= n; ++i) {
        if (w[i - 1] == 1) open1.push_back(i);
        else if (w[i - 1] == 2) {
            int a = open1.back();
            open1.pop_back();
            arcs.push_back({a, i, true, 0, 0});
            open2.push_back(i);
        } else {
            int a = open2.back();
            open2.pop_back();
            arcs.push_back({a, i, false, 0, 0});
        }
    }
    for (auto& A : arcs) {
        double xl = xpos(A.left), xr = xpos(A.right);
        A.c = (xl + xr) / 2;
        A.R = (xr - xl) / 2;
    }

    Builder b;
    b.w.r = 3;
    b.w.n = n;
    b.w.bnd.assign(n, {});
    // white vertex under each row-2 point; its leg goes straight up
    std::vector<int> vmid(n + 1, -1);
    for (int i = 1; i <= n; ++i)
        if (w[i - 1] == 2) {
            vmid[i] = b.vertex(true);
            b.edge(vmid[i], {0, 1}, -i, {0, 0});
        }

    // crossings: per arc, list of (x, vertex on the incoming side, vertex on the outgoing side, dirs)
    struct Hit {
        double x;
        int in_v, out_v;  // vertex receiving the left half, the right half
        Vec in_dir, out_dir;
    };
    std::vector<std::vector<Hit>> hits(arcs.size());
    for (size_t a = 0; a < arcs.size(); ++a)
        for (size_t c = 0; c < arcs.size(); ++c) {
            if (!arcs[a].lower_type || arcs[c].lower_type) continue;
            const Arc& A = arcs[a];
            const Arc& B = arcs[c];
            bool inter = (A.left < B.left && B.left < A.right && A.right < B.right) ||
                         (B.left < A.left && A.left < B.right && B.right < A.right);
            if (!inter) continue;
            double x = (A.R * A.R - B.R * B.R + B.c * B.c - A.c * A.c) / (2 * (B.c - A.c));
            double y = -std::sqrt(std::max(0.0, A.R * A.R - (x - A.c) * (x - A.c)));
            Vec tA{-y, x - A.c};  // along A toward its right end (the row-2 side)
            Vec tB{y, B.c - x};   // along B toward its left end (the row-2 side)
            int p = b.vertex(true), q = b.vertex(false);
            Vec s = tA + tB;
            // p: the row-1 half of A and the row-3 half of B; q: the two row-2 halves
            int e = b.w.add_edge(p, q);
            b.arms[p].emplace_back(std::atan2(s.y, s.x), e);
            b.arms[q].emplace_back(std::atan2(-s.y, -s.x), e);
            hits[a].push_back({x, p, q, -tA, tA});
            hits[c].push_back({x, q, p, tB, -tB});
        }
    for (size_t a = 0; a < arcs.size(); ++a) {
        const Arc& A = arcs[a];
        auto& H = hits[a];
        std::sort(H.begin(), H.end(), [](const Hit& u, const Hit& v) { return u.x < v.x; });
        // left endpoint
        int prev;
        Vec prev_dir;
        if (A.lower_type) prev = -A.left, prev_dir = {0, 0};
        else prev = vmid[A.left], prev_dir = {0.001, -1};
        for (auto& h : H) {
            b.edge(prev, prev_dir, h.in_v, h.in_dir);
            prev = h.out_v;
            prev_dir = h.out_dir;
        }
        if (A.lower_type) b.edge(prev, prev_dir, vmid[A.right], {-0.001, -1});
        else b.edge(prev, prev_dir, -A.right, {0, 0});
    }
    b.finish();
    b.w.validate(true);
    if (!embedding_is_planar(b.w)) throw Error("internal", "growth produced a non-planar rotation system");
    return b.w;
}

bool is_non_elliptic(const Web& W) {
    Faces F = compute_faces(W);
    for (size_t f = 0; f < F.cycles.size(); ++f) {
        if (int(f) == F.outer || F.touches_boundary[f]) continue;
        if (F.cycles[f].size() < 6) return false;
    }
    return true;
}

std::vector<Web> sl3_basis(const std::vector<int>& lambda) {
    for (int x : lambda)
        if (x != 1) throw Error("unsupported", "sl3_basis supports lambda = (1^n) only");
    return sl3_basis(int(lambda.size()));
}

std::vector<Web> sl3_basis(int n) {
    if (n < 3 || n % 3 || n > 12) throw Error("unsupported", "sl3_basis supports n in {3,6,9,12}");
    std::vector<Web> out;
    for (auto& T : syt_enumerate(3, n / 3)) out.push_back(sl3_growth(T));
    return out;
}

}  // namespace wd
