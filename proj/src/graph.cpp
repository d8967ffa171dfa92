#include "webdimer/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace wd {

int Web::add_vertex(bool is_white) {
    white.push_back(is_white ? 1 : 0);
    rot.emplace_back();
    return nv() - 1;
}

int Web::add_edge(int u, int v, int mult) {
    edges.push_back({u, v, mult});
    return ne() - 1;
}

std::vector<int> Web::degree() const {
    std::vector<int> d(n, 0);
    for (int i = 0; i < n; ++i)
        for (int e : bnd[i]) d[i] += edges[e].mult;
    return d;
}

bool Web::semistandard() const {
    for (auto& b : bnd)
        for (int e : b)
            if (edges[e].mult != 1) return false;
    return true;
}

bool Web::dual_semistandard() const {
    for (auto& b : bnd)
        if (b.size() > 1) return false;
    return true;
}

bool Web::standard() const { return semistandard() && dual_semistandard(); }

void Web::validate(bool sums) const {
    if (int(bnd.size()) != n) throw Error("bad_graph", "boundary list length differs from n");
    if (rot.size() != white.size()) throw Error("bad_graph", "rotation missing for some vertex");
    std::vector<int> seen(ne(), 0);
    auto note = [&](int v, const std::vector<int>& lst) {
        for (int e : lst) {
            if (e < 0 || e >= ne()) throw Error("bad_graph", "rotation refers to unknown edge");
            const WEdge& E = edges[e];
            if (E.u != v && E.v != v) throw Error("bad_graph", "rotation lists an edge not incident to the vertex");
            ++seen[e];
        }
    };
    for (int v = 0; v < nv(); ++v) note(v, rot[v]);
    for (int i = 1; i <= n; ++i) note(-i, bnd[i - 1]);
    for (int e = 0; e < ne(); ++e) {
        const WEdge& E = edges[e];
        for (int x : {E.u, E.v})
            if (x >= nv() || x < -n) throw Error("bad_graph", "edge endpoint out of range");
        if (E.mult < 1) throw Error("bad_graph", "edge multiplicity must be positive");
        if (E.u == E.v) throw Error("bad_graph", "loops are not allowed");
        if (is_white(E.u) == is_white(E.v)) throw Error("bad_coloring", "edge " + std::to_string(e) + " joins two vertices of the same color");
        if (seen[e] != 2) throw Error("bad_graph", "edge " + std::to_string(e) + " must appear once at each endpoint");
    }
    for (int v = 0; v < nv(); ++v) {
        if (rot[v].empty()) throw Error("dangling_vertex", "internal vertex " + std::to_string(v) + " has degree 0");
        if (sums) {
            int s = 0;
            for (int e : rot[v]) s += edges[e].mult;
            if (s != r) throw Error("bad_multiplicity", "multiplicities at vertex " + std::to_string(v) + " sum to " + std::to_string(s));
        }
    }
}

int dart_tail(const Web& w, int d) {
    int e = d / 2;
    if (e < w.ne()) return (d & 1) ? w.edges[e].v : w.edges[e].u;
    int i = e - w.ne() + 1;
    int j = i % w.n + 1;
    return (d & 1) ? -j : -i;
}

int dart_head(const Web& w, int d) { return dart_tail(w, d ^ 1); }

namespace {

int vindex(const Web& w, int x) { return x >= 0 ? x : w.nv() + (-x) - 1; }

// Outgoing darts per vertex in CCW order.
std::vector<std::vector<int>> out_darts(const Web& w) {
    std::vector<std::vector<int>> out(w.nv() + w.n);
    auto outd = [&](int e, int x) { return (w.edges[e].u == x) ? 2 * e : 2 * e + 1; };
    for (int v = 0; v < w.nv(); ++v)
        for (int e : w.rot[v]) out[v].push_back(outd(e, v));
    for (int i = 1; i <= w.n; ++i) {
        auto& o = out[w.nv() + i - 1];
        for (int e : w.bnd[i - 1]) o.push_back(outd(e, -i));
        int a = w.ne() + i - 1;
        int b = w.ne() + (i + w.n - 2) % w.n;
        o.push_back(2 * a);
        o.push_back(2 * b + 1);
    }
    return out;
}

}  // namespace

Faces compute_faces(const Web& w) {
    auto out = out_darts(w);
    int ndarts = 2 * (w.ne() + w.n);
    std::vector<int> pos(ndarts, -1);
    for (auto& o : out)
        for (int i = 0; i < int(o.size()); ++i) pos[o[i]] = i;
    Faces F;
    F.face_of_dart.assign(ndarts, -1);
    for (int d0 = 0; d0 < ndarts; ++d0) {
        if (F.face_of_dart[d0] >= 0 || pos[d0] < 0) continue;
        int f = int(F.cycles.size());
        F.cycles.emplace_back();
        bool arc = false;
        int d = d0;
        while (F.face_of_dart[d] < 0) {
            F.face_of_dart[d] = f;
            F.cycles[f].push_back(d);
            if (d / 2 >= w.ne()) arc = true;
            int v = dart_head(w, d);
            auto& o = out[vindex(w, v)];
            int p = pos[d ^ 1];
            d = o[(p + int(o.size()) - 1) % int(o.size())];
        }
        F.touches_boundary.push_back(arc);
    }
    if (w.n > 0) F.outer = F.face_of_dart[2 * w.ne()];
    // components
    int N = w.nv() + w.n;
    std::vector<int> par(N);
    std::iota(par.begin(), par.end(), 0);
    std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
    for (int e = 0; e < w.ne(); ++e) par[find(vindex(w, w.edges[e].u))] = find(vindex(w, w.edges[e].v));
    for (int i = 1; i < w.n; ++i) par[find(w.nv() + i - 1)] = find(w.nv() + i);
    for (int x = 0; x < N; ++x)
        if (find(x) == x) ++F.components;
    return F;
}

bool embedding_is_planar(const Web& w) {
    Faces F = compute_faces(w);
    int V = w.nv() + w.n, E = w.ne() + w.n;
    return V - E + int(F.cycles.size()) == 1 + F.components;
}

Web compact(const Web& w) {
    std::vector<int> keep(w.nv(), -1);
    Web out;
    out.r = w.r;
    out.n = w.n;
    out.planar = w.planar;
    for (int v = 0; v < w.nv(); ++v)
        if (!w.rot[v].empty()) keep[v] = out.add_vertex(w.white[v]);
    auto code = [&](int x) { return x >= 0 ? keep[x] : x; };
    out.edges = w.edges;
    for (auto& e : out.edges) e.u = code(e.u), e.v = code(e.v);
    for (int v = 0; v < w.nv(); ++v)
        if (keep[v] >= 0) out.rot[keep[v]] = w.rot[v];
    out.bnd = w.bnd;
    return out;
}

Web suppress_bivalent_pairs(const Web& w0) {
    Web w = w0;
    std::vector<char> dead_edge(w.ne(), 0), dead_vertex(w.nv(), 0);
    bool changed = true;
    auto replace_in = [&](int x, int olde, int newe) {
        auto& lst = x >= 0 ? w.rot[x] : w.bnd[-x - 1];
        for (int& e : lst)
            if (e == olde) e = newe;
    };
    while (changed) {
        changed = false;
        for (int u = 0; u < w.nv() && !changed; ++u) {
            if (dead_vertex[u] || w.rot[u].size() != 2) continue;
            for (int t = 0; t < 2 && !changed; ++t) {
                int c = w.rot[u][t], a = w.rot[u][1 - t];
                int v = w.other(c, u);
                if (v < 0 || v == u || w.rot[v].size() != 2) continue;
                int b = w.rot[v][0] == c ? w.rot[v][1] : w.rot[v][0];
                int x = w.other(a, u), y = w.other(b, v);
                if (x == v || y == u) continue;  // closed bigon
                int ne = w.add_edge(x, y, w.edges[a].mult);
                dead_edge.push_back(0);
                replace_in(x, a, ne);
                replace_in(y, b, ne);
                dead_edge[a] = dead_edge[b] = dead_edge[c] = 1;
                dead_vertex[u] = dead_vertex[v] = 1;
                w.rot[u].clear();
                w.rot[v].clear();
                changed = true;
            }
        }
    }
    // rebuild without dead edges
    std::vector<int> emap(w.ne(), -1);
    Web out;
    out.r = w.r;
    out.n = w.n;
    out.planar = w.planar;
    out.white = w.white;
    out.rot = w.rot;
    out.bnd = w.bnd;
    for (int e = 0; e < w.ne(); ++e)
        if (!dead_edge[e]) emap[e] = out.add_edge(w.edges[e].u, w.edges[e].v, w.edges[e].mult);
    for (auto& l : out.rot)
        for (int& e : l) e = emap[e];
    for (auto& l : out.bnd)
        for (int& e : l) e = emap[e];
    return compact(out);
}

namespace {

struct KeyBuilder {
    const Web& w;
    std::vector<int> id;
    int next = 0;
    std::ostringstream os;

    explicit KeyBuilder(const Web& w_) : w(w_), id(w_.nv(), -1) {}

    void run(std::deque<std::pair<int, int>> q) {
        while (!q.empty()) {
            auto [x, d] = q.front();
            q.pop_front();
            const auto& lst = w.rot[x];
            int s = int(std::find(lst.begin(), lst.end(), d) - lst.begin());
            int m = int(lst.size());
            os << (w.white[x] ? 'w' : 'b') << '[';
            for (int t = 0; t < m; ++t) {
                int e = lst[(s + t) % m];
                int y = w.other(e, x);
                if (y >= 0 && id[y] < 0) {
                    id[y] = next++;
                    q.emplace_back(y, e);
                }
                os << (y >= 0 ? id[y] : y) << ':' << w.edges[e].mult << ' ';
            }
            os << ']';
        }
    }
};

}  // namespace

std::string canonical_key(const Web& w0) {
    Web w = suppress_bivalent_pairs(w0);
    KeyBuilder kb(w);
    kb.os << "r" << w.r << "n" << w.n << (w.planar ? "" : "np") << "|";
    std::deque<std::pair<int, int>> q;
    for (int i = 1; i <= w.n; ++i) {
        kb.os << '(';
        for (int e : w.bnd[i - 1]) {
            int y = w.other(e, -i);
            if (y >= 0 && kb.id[y] < 0) {
                kb.id[y] = kb.next++;
                q.emplace_back(y, e);
            }
            kb.os << (y >= 0 ? kb.id[y] : y) << ':' << w.edges[e].mult << ' ';
        }
        kb.os << ')';
        // process eagerly so ids follow boundary order
        kb.run(std::move(q));
        q.clear();
    }
    std::string key = kb.os.str();
    // closed components
    std::vector<std::string> closed;
    std::vector<char> done(w.nv(), 0);
    for (int v = 0; v < w.nv(); ++v) done[v] = kb.id[v] >= 0;
    for (int v = 0; v < w.nv(); ++v) {
        if (done[v]) continue;
        std::vector<int> comp;
        std::deque<int> dq{v};
        done[v] = 1;
        while (!dq.empty()) {
            int x = dq.front();
            dq.pop_front();
            comp.push_back(x);
            for (int e : w.rot[x]) {
                int y = w.other(e, x);
                if (y >= 0 && !done[y]) done[y] = 1, dq.push_back(y);
            }
        }
        std::string best;
        for (int s : comp)
            for (int e : w.rot[s]) {
                KeyBuilder b(w);
                b.id[s] = b.next++;
                b.run({{s, e}});
                std::string str = b.os.str();
                if (best.empty() || str < best) best = str;
            }
        closed.push_back(best);
    }
    std::sort(closed.begin(), closed.end());
    for (auto& c : closed) key += "|" + c;
    return key;
}

nlohmann::json web_to_json(const Web& w, bool with_mult) {
    nlohmann::json j;
    j["n"] = w.n;
    if (with_mult) j["r"] = w.r;
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < w.nv(); ++v) j["vertices"].push_back({{"id", v}, {"color", w.white[v] ? "w" : "b"}});
    j["edges"] = nlohmann::json::array();
    for (int e = 0; e < w.ne(); ++e) {
        nlohmann::json ej = {{"id", e}, {"ends", {w.edges[e].u, w.edges[e].v}}};
        if (with_mult) ej["mult"] = w.edges[e].mult;
        j["edges"].push_back(ej);
    }
    j["boundary"] = nlohmann::json::array();
    for (auto& b : w.bnd) {
        if (b.size() == 1) j["boundary"].push_back(b[0]);
        else j["boundary"].push_back(b);
    }
    j["rotation"] = nlohmann::json::object();
    for (int v = 0; v < w.nv(); ++v) j["rotation"][std::to_string(v)] = w.rot[v];
    if (!w.planar) j["planar"] = false;
    return j;
}

Web web_from_json(const nlohmann::json& j, int default_r) {
    try {
        Web w;
        w.n = j.at("n").get<int>();
        w.r = j.contains("r") ? j["r"].get<int>() : default_r;
        if (j.contains("planar")) w.planar = j["planar"].get<bool>();
        std::map<int, int> vid, eid;
        for (auto& v : j.at("vertices")) {
            int id = v.at("id").get<int>();
            if (id < 0) throw Error("bad_graph", "internal vertex ids must be non-negative");
            std::string c = v.at("color").get<std::string>();
            if (c != "b" && c != "w") throw Error("bad_graph", "vertex color must be b or w");
            if (vid.count(id)) throw Error("bad_graph", "duplicate vertex id");
            vid[id] = w.add_vertex(c == "w");
        }
        auto code = [&](int x) {
            if (x < 0) {
                if (-x > w.n) throw Error("bad_graph", "boundary vertex out of range");
                return x;
            }
            auto it = vid.find(x);
            if (it == vid.end()) throw Error("bad_graph", "edge refers to unknown vertex " + std::to_string(x));
            return it->second;
        };
        for (auto& e : j.at("edges")) {
            int id = e.at("id").get<int>();
            auto ends = e.at("ends");
            int m = e.contains("mult") ? e["mult"].get<int>() : 1;
            if (eid.count(id)) throw Error("bad_graph", "duplicate edge id");
            eid[id] = w.add_edge(code(ends.at(0).get<int>()), code(ends.at(1).get<int>()), m);
        }
        auto ecode = [&](int e) {
            auto it = eid.find(e);
            if (it == eid.end()) throw Error("bad_graph", "unknown edge id " + std::to_string(e));
            return it->second;
        };
        w.bnd.assign(w.n, {});
        auto& B = j.at("boundary");
        if (int(B.size()) != w.n) throw Error("bad_graph", "boundary list must have n entries");
        for (int i = 0; i < w.n; ++i) {
            if (B[i].is_array())
                for (auto& e : B[i]) w.bnd[i].push_back(ecode(e.get<int>()));
            else if (!B[i].is_null())
                w.bnd[i].push_back(ecode(B[i].get<int>()));
        }
        for (auto& [key, lst] : j.at("rotation").items()) {
            int id = std::stoi(key);
            auto it = vid.find(id);
            if (it == vid.end()) throw Error("bad_graph", "rotation for unknown vertex " + key);
            for (auto& e : lst) w.rot[it->second].push_back(ecode(e.get<int>()));
        }
        return w;
    } catch (const nlohmann::json::exception& ex) {
        throw Error("bad_json", ex.what());
    }
}

}  // namespace wd
