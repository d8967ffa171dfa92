#include "webdimer/plucker.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace wd {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0) out.emplace_back(a[i].first, e);
            ++i, ++j;
        }
    }
    return out;
}

Monomial mono_of(const std::vector<Subset>& factors) {
    Monomial m;
    for (Subset s : factors) m = mono_mul(m, Monomial{{s, 1}});
    return m;
}

int mono_degree(const Monomial& m) {
    int d = 0;
    for (auto& [s, e] : m) d += e;
    return d;
}

std::string mono_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (auto& [s, e] : m) {
        if (!out.empty()) out += '*';
        out += "D[" + subset_str(s) + "]";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

PluckerPoly PluckerPoly::constant(int k, int n, const Q& c) {
    PluckerPoly p(k, n);
    p.add({}, c);
    return p;
}

PluckerPoly PluckerPoly::var(int k, int n, Subset I) { return monomial(k, n, Monomial{{I, 1}}); }

PluckerPoly PluckerPoly::monomial(int k, int n, const Monomial& m, const Q& c) {
    PluckerPoly p(k, n);
    p.add(m, c);
    return p;
}

void PluckerPoly::add(const Monomial& m, const Q& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

PluckerPoly& PluckerPoly::operator+=(const PluckerPoly& o) {
    if (k == 0) k = o.k, n = o.n;
    for (auto& [m, c] : o.terms) add(m, c);
    return *this;
}

PluckerPoly& PluckerPoly::operator-=(const PluckerPoly& o) {
    if (k == 0) k = o.k, n = o.n;
    for (auto& [m, c] : o.terms) add(m, -c);
    return *this;
}

PluckerPoly& PluckerPoly::operator*=(const Q& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, x] : terms) x *= c;
    return *this;
}

PluckerPoly operator*(const PluckerPoly& a, const PluckerPoly& b) {
    PluckerPoly out(a.k ? a.k : b.k, std::max(a.n, b.n));
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) out.add(mono_mul(ma, mb), ca * cb);
    return out;
}

static std::vector<int> mdeg(const Monomial& m, int n) {
    std::vector<int> d(n, 0);
    for (auto& [s, e] : m)
        for (int i : elements(s)) d[i - 1] += e;
    return d;
}

std::vector<int> PluckerPoly::multidegree() const {
    if (terms.empty()) return std::vector<int>(n, 0);
    return mdeg(terms.begin()->first, n);
}

bool PluckerPoly::homogeneous() const {
    if (terms.empty()) return true;
    auto d = multidegree();
    for (auto& [m, c] : terms)
        if (mdeg(m, n) != d) return false;
    return true;
}

std::string PluckerPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Q a = abs(c);
        if (a != 1 || m.empty()) os << a.get_str() << (m.empty() ? "" : "*");
        if (!m.empty()) os << mono_str(m);
    }
    return os.str();
}

Q evaluate(const PluckerPoly& p, const std::function<Q(Subset)>& delta) {
    std::unordered_map<Subset, Q> cache;
    auto get = [&](Subset s) -> const Q& {
        auto it = cache.find(s);
        if (it != cache.end()) return it->second;
        return cache.emplace(s, delta(s)).first->second;
    };
    Q total = 0;
    for (auto& [m, c] : p.terms) {
        Q t = c;
        for (auto& [s, e] : m) {
            const Q& d = get(s);
            if (d == 0) {
                if (e < 0) throw Error("pole_at_point", "D[" + subset_str(s) + "] vanishes under a negative exponent");
                t = 0;
                break;
            }
            int a = e < 0 ? -e : e;
            Q pw = 1;
            for (int i = 0; i < a; ++i) pw *= d;
            if (e < 0) t /= pw;
            else t *= pw;
        }
        total += t;
    }
    return total;
}

Q plucker(const Matrix& M, Subset I) {
    std::vector<int> cols;
    for (int i : elements(I)) cols.push_back(i - 1);
    return minor(M, cols);
}

Q evaluate(const PluckerPoly& p, const Matrix& M) {
    return evaluate(p, [&](Subset s) { return plucker(M, s); });
}

Q evaluate(const PluckerPoly& p, const PluckerVector& v) {
    return evaluate(p, [&](Subset s) {
        auto it = v.find(s);
        return it == v.end() ? Q(0) : it->second;
    });
}

std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i + 1;
    if (k > n) return out;
    for (;;) {
        out.push_back(subset_of(c));
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

PluckerVector plucker_vector(const Matrix& M) {
    PluckerVector v;
    for (Subset s : k_subsets(M.cols, M.rows)) v[s] = plucker(M, s);
    return v;
}

Q signed_plucker(const PluckerVector& v, const std::vector<int>& cols) {
    Subset s = 0;
    for (int c : cols) {
        if (contains(s, c)) return 0;
        s |= bit(c);
    }
    auto it = v.find(s);
    if (it == v.end()) return 0;
    return perm_sign(cols) * it->second;
}

int three_term_violations(const PluckerVector& v, int k, int n) {
    if (k < 2) return 0;
    int bad = 0;
    for (Subset S : k_subsets(n, k - 2)) {
        std::vector<int> base = elements(S);
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i)
            if (!contains(S, i)) rest.push_back(i);
        auto D = [&](int x, int y) {
            auto c = base;
            c.push_back(x);
            c.push_back(y);
            return signed_plucker(v, c);
        };
        int m = int(rest.size());
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c)
                    for (int d = c + 1; d < m; ++d) {
                        int A = rest[a], B = rest[b], C = rest[c], E = rest[d];
                        if (D(A, C) * D(B, E) != D(A, B) * D(C, E) + D(A, E) * D(B, C)) ++bad;
                    }
    }
    return bad;
}

Matrix matrix_from_plucker(const PluckerVector& v, int k, int n) {
    Subset I0 = 0;
    Q d0 = 0;
    for (auto& [s, x] : v)
        if (x != 0) {
            I0 = s;
            d0 = x;
            break;
        }
    if (d0 == 0) throw Error("zero_vector", "all Plücker coordinates vanish");
    auto base = elements(I0);
    Matrix M(k, n);
    for (int a = 0; a < k; ++a)
        for (int j = 1; j <= n; ++j) {
            auto cols = base;
            cols[a] = j;
            M(a, j - 1) = signed_plucker(v, cols) / d0;
        }
    for (int j = 0; j < n; ++j) M(0, j) *= d0;
    return M;
}

std::vector<Q> cross_product(const std::vector<std::vector<Q>>& vs, int k) {
    if (int(vs.size()) != k - 1) throw Error("dimension_mismatch", "cross product needs k-1 vectors");
    for (auto& v : vs)
        if (int(v.size()) != k) throw Error("dimension_mismatch", "cross product vector length");
    std::vector<Q> out(k);
    if (k == 1) {
        out[0] = 1;
        return out;
    }
    for (int j = 0; j < k; ++j) {
        Matrix m(k - 1, k - 1);
        for (int r = 0, rr = 0; r < k; ++r) {
            if (r == j) continue;
            for (int c = 0; c < k - 1; ++c) m(rr, c) = vs[c][r];
            ++rr;
        }
        Q d = det(std::move(m));
        // (-1)^{k+j} with 1-based j
        out[j] = ((k + j + 1) % 2 == 0) ? d : Q(-d);
    }
    return out;
}

int twist_sign(int k, int n, int i) {
    if (i <= n - k + 1) return 1;
    return (((k - 1) * (n - i + 1)) % 2 == 0) ? 1 : -1;
}

static void check_twist_input(const Matrix& M) {
    int k = M.rows, n = M.cols;
    if (k < 1 || k >= n) throw Error("bad_shape", "twist needs 1 <= k < n");
    for (int i = 1; i <= n; ++i) {
        std::vector<int> cols;
        for (int t = 0; t < k; ++t) cols.push_back((i - 1 + t) % n);
        if (minor(M, cols) == 0)
            throw Error("rank_loss", "cyclically consecutive minor at column " + std::to_string(i) + " vanishes");
    }
}

static Matrix assemble(const Matrix& M, const std::vector<std::vector<int>>& lists, const std::vector<int>& signs) {
    int k = M.rows, n = M.cols;
    Matrix T(k, n);
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<Q>> vs;
        for (int c : lists[i]) vs.push_back(M.column(c - 1));
        auto col = cross_product(vs, k);
        for (int r = 0; r < k; ++r) T(r, i) = signs[i] * col[r];
    }
    if (rank(T) != k) throw Error("rank_loss", "twisted matrix is not of full rank");
    return T;
}

Matrix twist_matrix(const Matrix& M) {
    check_twist_input(M);
    int k = M.rows, n = M.cols;
    std::vector<std::vector<int>> lists(n);
    std::vector<int> signs(n, 1);
    for (int i = 1; i <= n; ++i) {
        auto& l = lists[i - 1];
        if (i <= n - k + 1) {
            for (int j = i + 1; j <= i + k - 1; ++j) l.push_back(j);
        } else {
            for (int j = 1; j <= i - n + k - 1; ++j) l.push_back(j);
            for (int j = i + 1; j <= n; ++j) l.push_back(j);
            signs[i - 1] = ((k - n + i - 1) % 2 == 0) ? 1 : -1;
        }
    }
    return assemble(M, lists, signs);
}

Matrix twist_matrix_cyclic(const Matrix& M) {
    check_twist_input(M);
    int k = M.rows, n = M.cols;
    std::vector<std::vector<int>> lists(n);
    std::vector<int> signs(n);
    for (int i = 1; i <= n; ++i) {
        for (int t = 1; t <= k - 1; ++t) lists[i - 1].push_back((i + t - 1) % n + 1);
        signs[i - 1] = twist_sign(k, n, i);
    }
    return assemble(M, lists, signs);
}

nlohmann::json poly_to_json(const PluckerPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& [m, c] : p.terms) {
        nlohmann::json mono = nlohmann::json::object();
        for (auto& [s, e] : m) mono[subset_str(s)] = e;
        out.push_back({{"coeff", q_str(c)}, {"mono", mono}});
    }
    return out;
}

PluckerPoly poly_from_json(const nlohmann::json& j, int n) {
    if (!j.is_array()) throw Error("bad_poly", "polynomial must be a JSON array of terms");
    PluckerPoly p;
    int k = 0, maxe = 0;
    for (auto& t : j) {
        if (!t.contains("coeff") || !t.contains("mono")) throw Error("bad_poly", "term needs coeff and mono");
        Q c = t["coeff"].is_string() ? parse_q(t["coeff"].get<std::string>()) : Q(t["coeff"].get<long>());
        Monomial m;
        for (auto& [key, e] : t["mono"].items()) {
            Subset s = parse_subset(key);
            if (k == 0) k = popcount(s);
            if (popcount(s) != k) throw Error("bad_poly", "mixed subset sizes in polynomial");
            for (int i : elements(s)) maxe = std::max(maxe, i);
            m = mono_mul(m, Monomial{{s, e.get<int>()}});
        }
        p.add(m, c);
    }
    p.k = k;
    p.n = n ? n : maxe;
    return p;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(q_str(m(i, j)));
        out.push_back(row);
    }
    return out;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw Error("bad_matrix", "matrix must be nested arrays");
    Matrix m(int(j.size()), int(j[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (int(j[i].size()) != m.cols) throw Error("bad_matrix", "ragged matrix rows");
        for (int c = 0; c < m.cols; ++c) {
            auto& x = j[i][c];
            m(i, c) = x.is_string() ? parse_q(x.get<std::string>()) : Q(x.get<long>());
        }
    }
    return m;
}

}  // namespace wd
