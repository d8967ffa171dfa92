#include "webdimer/dimers.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace wd {

Network::Network(PlabicGraph g, std::vector<Q> weights) : G(std::move(g)), w(std::move(weights)) {
    if (int(w.size()) != G.graph().ne()) throw Error("bad_network", "one weight per edge required");
    for (auto& x : w)
        if (x == 0) throw Error("bad_network", "edge weights must be nonzero");
}

Network unit_network(const PlabicGraph& G) { return Network(G, std::vector<Q>(G.graph().ne(), Q(1))); }

Network random_network(const PlabicGraph& G, RationalRng& rng) {
    std::vector<Q> w;
    for (int e = 0; e < G.graph().ne(); ++e) w.push_back(rng.next_nonzero());
    return Network(G, std::move(w));
}

std::vector<int> indicator_lambda(int n, Subset I) {
    std::vector<int> l(n, 0);
    for (int i : elements(I)) l[i - 1] = 1;
    return l;
}

namespace {

class CoverSearch {
public:
    CoverSearch(const Web& g, int r, const std::vector<int>& lambda)
        : g_(g), r_(r), mult_(g.ne(), 0), cap_(g.nv(), r), rem_(g.nv(), 0) {
        for (int v = 0; v < g.nv(); ++v) rem_[v] = int(g.rot[v].size());
        // eliminate vertices in BFS order from the boundary so vertices close early
        std::vector<char> vis(g.nv(), 0), added(g.ne(), 0);
        std::deque<int> q;
        for (int i = 1; i <= g.n; ++i)
            for (int e : g.bnd[i - 1]) {
                int v = g.other(e, -i);
                if (!vis[v]) vis[v] = 1, q.push_back(v);
            }
        for (int s = 0; s <= g.nv(); ++s) {
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                for (int e : g.rot[v]) {
                    int y = g.other(e, v);
                    if (y >= 0 && !added[e]) added[e] = 1, order_.push_back(e);
                    if (y >= 0 && !vis[y]) vis[y] = 1, q.push_back(y);
                }
            }
            if (s < g.nv() && !vis[s]) vis[s] = 1, q.push_back(s);
        }
        ok_ = true;
        for (int i = 1; i <= g.n; ++i)
            for (int e : g.bnd[i - 1]) {
                int v = g.other(e, -i);
                mult_[e] = lambda[i - 1];
                cap_[v] -= lambda[i - 1];
                --rem_[v];
                if (cap_[v] < 0 || (rem_[v] == 0 && cap_[v] != 0)) ok_ = false;
            }
    }

    void run(std::vector<std::vector<int>>& out) {
        if (ok_) dfs(0, out);
    }

private:
    void dfs(size_t pos, std::vector<std::vector<int>>& out) {
        if (pos == order_.size()) {
            out.push_back(mult_);
            return;
        }
        int e = order_[pos];
        int u = g_.edges[e].u, v = g_.edges[e].v;
        int lo = 0, hi = std::min(cap_[u], cap_[v]);
        if (rem_[u] == 1) lo = std::max(lo, cap_[u]);
        if (rem_[v] == 1) lo = std::max(lo, cap_[v]);
        if (rem_[u] == 1 && cap_[u] > hi) return;
        if (rem_[v] == 1 && cap_[v] > hi) return;
        if (rem_[u] == 1) hi = std::min(hi, cap_[u]);
        if (rem_[v] == 1) hi = std::min(hi, cap_[v]);
        --rem_[u], --rem_[v];
        for (int m = lo; m <= hi; ++m) {
            mult_[e] = m;
            cap_[u] -= m, cap_[v] -= m;
            dfs(pos + 1, out);
            cap_[u] += m, cap_[v] += m;
        }
        mult_[e] = 0;
        ++rem_[u], ++rem_[v];
    }

    const Web& g_;
    int r_;
    std::vector<int> order_;
    std::vector<int> mult_, cap_, rem_;
    bool ok_ = true;
};

}  // namespace

std::vector<DimerCover> enumerate_dimer_covers(const PlabicGraph& G, int r, const std::vector<int>& lambda) {
    const Web& g = G.graph();
    if (int(lambda.size()) != g.n) throw Error("size_mismatch", "lambda must have n entries");
    if (r < 1) throw Error("bad_argument", "r must be positive");
    for (int x : lambda)
        if (x < 0 || x > r) return {};
    std::vector<std::vector<int>> raw;
    CoverSearch(g, r, lambda).run(raw);
    std::sort(raw.begin(), raw.end());
    std::vector<DimerCover> out;
    out.reserve(raw.size());
    for (auto& m : raw) out.push_back({r, lambda, std::move(m)});
    return out;
}

Q edge_weight(const Network& N, const DimerCover& D) {
    if (D.mult.size() != N.w.size()) throw Error("size_mismatch", "cover does not belong to this network");
    Q p = 1;
    for (size_t e = 0; e < D.mult.size(); ++e)
        for (int t = 0; t < D.mult[e]; ++t) p *= N.w[e];
    return p;
}

PluckerVector boundary_measurement(const Network& N) {
    int k = N.G.type(), n = N.G.n();
    if (k < 1 || k >= n) throw Error("not_top_cell", "graph type out of range");
    PluckerVector out;
    for (Subset I : k_subsets(n, k)) {
        Q s = 0;
        for (auto& D : enumerate_dimer_covers(N.G, 1, indicator_lambda(n, I))) s += edge_weight(N, D);
        out[I] = s;
    }
    return out;
}

Monomial face_weight(const PlabicGraph& G, const DimerCover& D) {
    const auto& labels = G.face_labels();
    std::map<Subset, int> ex;
    for (int f : G.face_ids()) {
        int Df = 0;
        for (int e : G.face_edges(f)) Df += D.mult[e];
        int x = D.r * G.white_count(f) - Df - D.r;
        if (x) ex[labels.at(f)] += x;
    }
    Monomial m;
    for (auto& [I, x] : ex)
        if (x) m.emplace_back(I, x);
    return m;
}

PluckerPoly face_weight_poly(const PlabicGraph& G, const DimerCover& D) {
    return PluckerPoly::monomial(G.type(), G.n(), face_weight(G, D));
}

PluckerPoly marsh_scott(const PlabicGraph& G, Subset I) {
    PluckerPoly p(G.type(), G.n());
    for (auto& D : enumerate_dimer_covers(G, 1, indicator_lambda(G.n(), I))) p.add(face_weight(G, D), 1);
    return p;
}

Web weblike_subgraph(const PlabicGraph& G, const DimerCover& D) {
    const Web& g = G.graph();
    Web w;
    w.r = D.r;
    w.n = g.n;
    w.white = g.white;
    w.rot.assign(g.nv(), {});
    w.bnd.assign(g.n, {});
    std::vector<int> id(g.ne(), -1);
    for (int e = 0; e < g.ne(); ++e)
        if (D.mult[e] > 0) id[e] = w.add_edge(g.edges[e].u, g.edges[e].v, D.mult[e]);
    for (int v = 0; v < g.nv(); ++v)
        for (int e : g.rot[v])
            if (id[e] >= 0) w.rot[v].push_back(id[e]);
    for (int i = 0; i < g.n; ++i)
        for (int e : g.bnd[i])
            if (id[e] >= 0) w.bnd[i].push_back(id[e]);
    return compact(w);
}

WebCombination web_r(const Network& N, int r, const std::vector<int>& lambda) {
    WebCombination c;
    for (auto& D : enumerate_dimer_covers(N.G, r, lambda)) c.add(edge_weight(N, D), weblike_subgraph(N.G, D));
    return c;
}

WebCombination web_r_twisted(const Network& N, int r, const std::vector<int>& lambda) {
    PluckerVector X = boundary_measurement(N);
    WebCombination c;
    for (auto& D : enumerate_dimer_covers(N.G, r, lambda)) {
        Q coeff;
        try {
            coeff = evaluate(face_weight_poly(N.G, D), X);
        } catch (const Error& e) {
            if (e.code == "pole_at_point") throw Error("twist_undefined", "twist undefined at this network: a face coordinate vanishes");
            throw;
        }
        c.add(coeff, weblike_subgraph(N.G, D));
    }
    return c;
}

nlohmann::json cover_to_json(const DimerCover& D) {
    return {{"r", D.r}, {"lambda", D.lambda}, {"mult", D.mult}};
}

nlohmann::json network_to_json(const Network& N) {
    nlohmann::json j = plabic_to_json(N.G);
    nlohmann::json w = nlohmann::json::object();
    for (size_t e = 0; e < N.w.size(); ++e) w[std::to_string(e)] = q_str(N.w[e]);
    j["weights"] = w;
    return j;
}

Network network_from_json(const nlohmann::json& j) {
    PlabicGraph G = plabic_from_json(j);
    int E = G.graph().ne();
    if (!j.contains("weights")) throw Error("bad_network", "network needs \"weights\"");
    const auto& W = j["weights"];
    std::vector<Q> w(E);
    if (W.is_array()) {
        if (int(W.size()) != E) throw Error("bad_network", "weights array must have one entry per edge");
        for (int e = 0; e < E; ++e) w[e] = W[e].is_string() ? parse_q(W[e].get<std::string>()) : Q(W[e].get<long>());
    } else {
        // edge ids are renumbered in file order on load
        std::map<int, int> pos;
        int p = 0;
        for (auto& e : j.at("edges")) pos[e.at("id").get<int>()] = p++;
        std::vector<char> have(E, 0);
        for (auto& [key, val] : W.items()) {
            auto it = pos.find(std::stoi(key));
            if (it == pos.end()) throw Error("bad_network", "weight for unknown edge " + key);
            w[it->second] = val.is_string() ? parse_q(val.get<std::string>()) : Q(val.get<long>());
            have[it->second] = 1;
        }
        for (int e = 0; e < E; ++e)
            if (!have[e]) throw Error("bad_network", "missing weight for edge " + std::to_string(e));
    }
    return Network(std::move(G), std::move(w));
}

}  // namespace wd
