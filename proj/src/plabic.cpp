#include "webdimer/plabic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <set>

namespace wd {

PlabicGraph::PlabicGraph(Web g) : g_(std::move(g)) {
    g_.r = 1;
    g_.validate(false);
    for (auto& e : g_.edges)
        if (e.mult != 1) throw Error("bad_graph", "plabic graph edges have multiplicity 1");
    for (int i = 1; i <= g_.n; ++i)
        if (g_.bnd[i - 1].size() != 1) throw Error("bad_graph", "boundary vertex " + std::to_string(i) + " needs exactly one edge");

    faces_ = compute_faces(g_);
    for (int f = 0; f < int(faces_.cycles.size()); ++f)
        if (f != faces_.outer) face_ids_.push_back(f);
    face_edges_.assign(faces_.cycles.size(), {});
    white_count_.assign(faces_.cycles.size(), 0);
    for (int f = 0; f < int(faces_.cycles.size()); ++f) {
        std::set<int> es, ws;
        for (int d : faces_.cycles[f]) {
            int e = d / 2;
            if (e < g_.ne() && !is_leg(e)) es.insert(e);
            int t = dart_tail(g_, d);
            if (g_.is_white(t)) ws.insert(t);
        }
        face_edges_[f].assign(es.begin(), es.end());
        white_count_[f] = int(ws.size());
    }

    // trips
    for (int i = 1; i <= g_.n; ++i) {
        Trip t;
        t.start = i;
        int e = leg(i);
        int x = -i;
        int guard = 4 * (g_.ne() + 1);
        for (;;) {
            int d = (g_.edges[e].u == x) ? 2 * e : 2 * e + 1;
            t.darts.push_back(d);
            x = g_.other(e, x);
            if (x < 0) break;
            const auto& lst = g_.rot[x];
            int m = int(lst.size());
            int p = int(std::find(lst.begin(), lst.end(), e) - lst.begin());
            e = g_.white[x] ? lst[(p + m - 1) % m] : lst[(p + 1) % m];
            if (--guard < 0) throw Error("internal", "trip does not terminate");
        }
        t.end = -x;
        trips_.push_back(std::move(t));
    }

    // face labels: i in I_f iff f lies left of the trip ending at i
    std::map<int, Subset> lab;
    for (int f : face_ids_) lab[f] = 0;
    try {
        for (const Trip& t : trips_) {
            std::set<int> on_trip;
            std::vector<char> left(faces_.cycles.size(), 0), right(faces_.cycles.size(), 0);
            for (int d : t.darts) {
                on_trip.insert(d / 2);
                left[faces_.face_of_dart[d]] = 1;
                right[faces_.face_of_dart[d ^ 1]] = 1;
            }
            std::deque<int> q;
            for (int f = 0; f < int(left.size()); ++f) {
                if (left[f] && right[f]) throw Error("not_reduced", "trip from " + std::to_string(t.start) + " has a face on both sides");
                if (left[f] && f != faces_.outer) q.push_back(f);
            }
            std::vector<char> seen(left.size(), 0);
            for (int f : q) seen[f] = 1;
            while (!q.empty()) {
                int f = q.front();
                q.pop_front();
                if (right[f]) throw Error("not_reduced", "trip from " + std::to_string(t.start) + " self-intersects");
                lab[f] |= bit(t.end);
                for (int d : faces_.cycles[f]) {
                    int e = d / 2;
                    if (e >= g_.ne() || on_trip.count(e)) continue;
                    int h = faces_.face_of_dart[d ^ 1];
                    if (h == faces_.outer || seen[h]) continue;
                    seen[h] = 1;
                    q.push_back(h);
                }
            }
        }
        labels_ = std::move(lab);
    } catch (const Error& e) {
        label_error_ = e.what();
    }
}

int PlabicGraph::type() const {
    int w = 0;
    for (char c : g_.white) w += c ? 1 : -1;
    return w;
}

std::vector<int> PlabicGraph::trip_permutation() const {
    std::vector<int> p;
    for (auto& t : trips_) p.push_back(t.end);
    return p;
}

const std::map<int, Subset>& PlabicGraph::face_labels() const {
    if (!labels_) throw Error("not_reduced", label_error_);
    return *labels_;
}

int PlabicGraph::white_count(int face) const { return white_count_[face]; }

PlabicGraph make_claw_graph(int n) {
    if (n < 1) throw Error("bad_shape", "claw graph needs n >= 1");
    Web w;
    w.n = n;
    int v = w.add_vertex(true);
    w.bnd.assign(n, {});
    for (int i = 1; i <= n; ++i) w.bnd[i - 1].push_back(w.add_edge(-i, v));
    for (int i = n; i >= 1; --i) w.rot[v].push_back(i - 1);
    return PlabicGraph(std::move(w));
}

namespace {

struct Pt {
    double x, y;
};

// Grid construction on the k x (n-k) rectangle: one vertex per box, with
// four-valent boxes split into a black north-east and a white south-west
// vertex; same-colored neighbours are separated by a bivalent vertex.
Web rectangle_web(int k, int n) {
    int m = n - k;
    std::vector<Pt> pos;
    std::vector<char> col;
    std::vector<std::pair<int, int>> E;
    auto newv = [&](double x, double y, bool white) {
        pos.push_back({x, y});
        col.push_back(white);
        return int(pos.size()) - 1;
    };
    std::vector<Pt> bpos(n + 1);
    for (int a = 1; a <= k; ++a) bpos[a] = {double(m + 1), double(-a)};
    for (int b = 1; b <= m; ++b) bpos[k + (m - b + 1)] = {double(b), double(-(k + 1))};
    // arm[a][b][dir] with dir 0=N 1=E 2=S 3=W
    std::vector<std::vector<std::array<int, 4>>> arm(k + 1, std::vector<std::array<int, 4>>(m + 1));
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= m; ++b) {
            double x = b, y = -a;
            bool hasN = a > 1, hasW = b > 1;
            auto& A = arm[a][b];
            if (hasN && hasW) {
                int ne = newv(x + 0.125, y + 0.125, false);
                int sw = newv(x - 0.125, y - 0.125, true);
                E.push_back({ne, sw});
                A = {ne, ne, sw, sw};
            } else if (hasN || hasW) {
                bool white = (a == 1);  // top row white, left column black
                int v = newv(x, y, white);
                A = {v, v, v, v};
            } else {
                int v = newv(x, y, true);
                A = {v, v, v, v};
            }
        }
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= m; ++b) {
            E.push_back({arm[a][b][1], b < m ? arm[a][b + 1][3] : -a});
            E.push_back({arm[a][b][2], a < k ? arm[a + 1][b][0] : -(k + (m - b + 1))});
        }
    // bipartize
    Web w;
    w.n = n;
    for (size_t v = 0; v < pos.size(); ++v) w.add_vertex(col[v]);
    auto P = [&](int v) { return v >= 0 ? pos[v] : bpos[-v]; };
    auto white = [&](int v) { return v >= 0 && col[v]; };
    for (auto [u, v] : E) {
        if (white(u) == white(v)) {
            Pt a = P(u), b = P(v);
            int mid = newv((a.x + b.x) / 2, (a.y + b.y) / 2, !white(u));
            w.add_vertex(col[mid]);
            w.add_edge(u, mid);
            w.add_edge(mid, v);
        } else {
            w.add_edge(u, v);
        }
    }
    w.bnd.assign(n, {});
    std::vector<std::vector<std::pair<double, int>>> around(w.nv());
    for (int e = 0; e < w.ne(); ++e) {
        int u = w.edges[e].u, v = w.edges[e].v;
        for (auto [s, t] : {std::pair{u, v}, std::pair{v, u}}) {
            if (s < 0) {
                w.bnd[-s - 1].push_back(e);
                continue;
            }
            Pt a = P(s), b = P(t);
            around[s].push_back({std::atan2(b.y - a.y, b.x - a.x), e});
        }
    }
    for (int v = 0; v < w.nv(); ++v) {
        std::sort(around[v].begin(), around[v].end());
        for (auto& pr : around[v]) w.rot[v].push_back(pr.second);
    }
    return w;
}

}  // namespace

PlabicGraph make_rectangle_graph(int k, int n) {
    if (k < 1 || k >= n) throw Error("bad_shape", "rectangle graph needs 1 <= k < n");
    if (k == 1) return make_claw_graph(n);
    PlabicGraph G(rectangle_web(k, n));
    // certify: type, top-cell trip permutation, face count
    if (G.type() != k) throw Error("internal", "rectangle graph has wrong type");
    auto pi = G.trip_permutation();
    for (int i = 1; i <= n; ++i)
        if (pi[i - 1] != (i + k - 1) % n + 1) throw Error("internal", "rectangle graph is not top cell");
    if (int(G.face_ids().size()) != k * (n - k) + 1) throw Error("internal", "rectangle graph face count");
    G.face_labels();
    return G;
}

nlohmann::json plabic_to_json(const PlabicGraph& G) { return web_to_json(G.graph(), false); }

PlabicGraph plabic_from_json(const nlohmann::json& j) { return PlabicGraph(web_from_json(j, 1)); }

}  // namespace wd
