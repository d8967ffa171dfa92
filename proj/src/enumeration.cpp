#include "webdimer/enumeration.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "webdimer/pairing.hpp"

namespace wd {

namespace {

// Plane-tree descriptors: "L" for a boundary leaf, otherwise a colour letter and
// a parenthesised child list, each child prefixed by its edge multiplicity.
class TreeGen {
public:
    explicit TreeGen(int r) : r_(r) {}

    const std::vector<std::string>& sub(bool white, int m, int leaves) {
        auto key = std::make_tuple(white, m, leaves);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<std::string> out;
        if (leaves == 1 && !white && m == 1) out.push_back("L");
        if (leaves >= 2) {
            std::vector<std::string> acc;
            children(white, r_ - m, leaves, 0, "", acc);
            for (auto& c : acc) out.push_back(std::string(white ? "w" : "b") + "(" + c + ")");
        }
        return memo_[key] = out;
    }

private:
    void children(bool white, int mult_left, int leaves_left, int count, const std::string& prefix,
                  std::vector<std::string>& acc) {
        if (mult_left == 0 && leaves_left == 0) {
            if (count >= 2) acc.push_back(prefix);
            return;
        }
        if (mult_left <= 0 || leaves_left <= 0) return;
        for (int m = 1; m <= mult_left; ++m)
            for (int L = 1; L <= leaves_left - (count == 0 ? 1 : 0); ++L) {
                // copy: sub() may rehash the memo
                std::vector<std::string> opts = sub(!white, m, L);
                for (auto& s : opts)
                    children(white, mult_left - m, leaves_left - L, count + 1, prefix + std::to_string(m) + s, acc);
            }
    }

    int r_;
    std::map<std::tuple<bool, int, int>, std::vector<std::string>> memo_;
};

struct TreeBuilder {
    Web w;
    const std::string& s;
    size_t pos = 0;
    int next_leaf = 1;

    explicit TreeBuilder(const std::string& str, int r, int n) : s(str) {
        w.r = r;
        w.n = n;
        w.bnd.assign(n, {});
    }

    // Parses the subtree at pos, attached to `parent` through a new edge of multiplicity m.
    void node(int parent, int m) {
        if (s[pos] == 'L') {
            ++pos;
            int leaf = next_leaf++;
            int e = w.add_edge(parent, -leaf, m);
            w.rot[parent].push_back(e);
            w.bnd[leaf - 1].push_back(e);
            return;
        }
        bool white = s[pos] == 'w';
        pos += 2;  // colour and '('
        int v = w.add_vertex(white);
        int e = w.add_edge(parent, v, m);
        if (parent >= 0) w.rot[parent].push_back(e);
        else w.bnd[-parent - 1].push_back(e);
        std::vector<int> kids;
        while (s[pos] != ')') {
            int mm = 0;
            while (std::isdigit(static_cast<unsigned char>(s[pos]))) mm = mm * 10 + (s[pos++] - '0');
            size_t before = w.rot[v].size();
            node(v, mm);
            kids.push_back(w.rot[v].back());
            w.rot[v].resize(before);
        }
        ++pos;
        // clockwise from the parent edge the children come in leaf order
        w.rot[v].push_back(e);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) w.rot[v].push_back(*it);
    }
};

Web build_tree(const std::string& desc, int r, int n) {
    TreeBuilder b(desc, r, n);
    b.next_leaf = 1;
    b.node(-n, 1);
    return b.w;
}

}  // namespace

std::vector<Web> enumerate_tree_webs(int r, int n) {
    if (r < 2 || n < 2) throw Error("bad_argument", "need r >= 2 and n >= 2");
    TreeGen g(r);
    std::vector<Web> out;
    for (auto& d : g.sub(true, 1, n - 1)) {
        Web w = build_tree(d, r, n);
        w.validate(true);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Web> enumerate_sl3_tree_webs(int d) {
    if (d < 1 || d > 6) throw Error("bad_argument", "degree must be in 1..6");
    if (d == 1) return {make_tripod(3, 1, 2, 3)};
    return enumerate_tree_webs(3, 3 * d);
}

bool is_tree_web(const Web& W) {
    if (!W.standard()) return false;
    int V = W.nv() + W.n, E = W.ne();
    if (E != V - 1) return false;
    for (int v = 0; v < W.nv(); ++v)
        if (W.rot[v].size() < 3) return false;
    // connectivity
    std::vector<char> seen_i(W.nv(), 0), seen_b(W.n, 0);
    std::vector<int> st = {-1};
    seen_b[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int e : W.around(x)) {
            int y = W.other(e, x);
            char& s = y >= 0 ? seen_i[y] : seen_b[-y - 1];
            if (!s) s = 1, ++cnt, st.push_back(y);
        }
    }
    return cnt == V;
}

namespace {

// Subtree below vertex v entered through edge `from`, children in leaf order.
std::string binary_code(const Web& W, int v, int from) {
    if (v < 0) return "L";
    const auto& r = W.rot[v];
    int p = int(std::find(r.begin(), r.end(), from) - r.begin());
    int m = int(r.size());
    std::string s = std::string(W.white[v] ? "w" : "b") + "(";
    // children clockwise from the parent edge = reverse CCW order
    for (int t = 1; t < m; ++t) {
        int e = r[((p - t) % m + m) % m];
        s += binary_code(W, W.other(e, v), e);
    }
    return s + ")";
}

// Parses a binary code into (is_leaf, white, children) recursively and emits the 4-ary form.
struct BNode {
    bool leaf = true, white = false;
    std::vector<BNode> kids;
};

BNode parse_binary(const std::string& s, size_t& p) {
    BNode b;
    if (s[p] == 'L') {
        ++p;
        return b;
    }
    b.leaf = false;
    b.white = s[p] == 'w';
    p += 2;
    while (s[p] != ')') b.kids.push_back(parse_binary(s, p));
    ++p;
    return b;
}

std::string quaternary_of(const BNode& b) {
    // b is a leaf or a black vertex with two white children
    if (b.leaf) return "L";
    if (b.white || b.kids.size() != 2) throw Error("not_tree", "unexpected vertex in binary tree");
    std::string s = "(";
    for (auto& w : b.kids) {
        if (w.leaf || !w.white || w.kids.size() != 2) throw Error("not_tree", "black vertex needs two white children");
        for (auto& c : w.kids) s += quaternary_of(c);
    }
    return s + ")";
}

std::string binary_of_quaternary(const std::string& q, size_t& p) {
    if (q[p] == 'L') {
        ++p;
        return "L";
    }
    if (q[p] != '(') throw Error("bad_argument", "malformed 4-ary tree");
    ++p;
    std::string c[4];
    for (auto& x : c) x = binary_of_quaternary(q, p);
    if (q[p] != ')') throw Error("bad_argument", "4-ary nodes need four children");
    ++p;
    return "b(w(" + c[0] + c[1] + ")w(" + c[2] + c[3] + "))";
}

std::string descriptor_of(const BNode& b) {
    if (b.leaf) return "L";
    std::string s = std::string(b.white ? "w" : "b") + "(";
    for (auto& c : b.kids) s += "1" + descriptor_of(c);
    return s + ")";
}

int count_leaves(const std::string& s) { return int(std::count(s.begin(), s.end(), 'L')); }

}  // namespace

TreeCode tree_bijection(const Web& W) {
    if (W.r != 3 || !is_tree_web(W)) throw Error("not_tree", "input is not an SL_3 tree web");
    int n = W.n;
    int e = W.bnd[n - 1][0];
    int root = W.other(e, -n);
    TreeCode tc;
    tc.binary = binary_code(W, root, e);
    size_t p = 0;
    BNode b = parse_binary(tc.binary, p);
    if (!b.white || b.kids.size() != 2) throw Error("not_tree", "root must be white with two children");
    tc.first = quaternary_of(b.kids[0]);
    tc.second = quaternary_of(b.kids[1]);
    return tc;
}

Web tree_from_quaternary(const std::string& first, const std::string& second) {
    size_t p = 0, q = 0;
    std::string a = binary_of_quaternary(first, p), b = binary_of_quaternary(second, q);
    if (p != first.size() || q != second.size()) throw Error("bad_argument", "trailing characters in 4-ary tree");
    std::string bin = "w(" + a + b + ")";
    size_t t = 0;
    BNode root = parse_binary(bin, t);
    Web w = build_tree(descriptor_of(root), 3, count_leaves(bin) + 1);
    w.validate(true);
    return w;
}

std::vector<std::string> quaternary_trees(int m) {
    static std::map<int, std::vector<std::string>> memo;
    if (m < 0) return {};
    if (m == 0) return {"L"};
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::vector<std::string> out;
    for (int a = 0; a <= m - 1; ++a)
        for (int b = 0; a + b <= m - 1; ++b)
            for (int c = 0; a + b + c <= m - 1; ++c) {
                int d = m - 1 - a - b - c;
                for (auto& x : quaternary_trees(a))
                    for (auto& y : quaternary_trees(b))
                        for (auto& z : quaternary_trees(c))
                            for (auto& t : quaternary_trees(d)) out.push_back("(" + x + y + z + t + ")");
            }
    return memo[m] = out;
}

std::int64_t tree_count_closed_form(int d) {
    if (d < 1) throw Error("bad_argument", "degree must be positive");
    std::int64_t num = binomial(4 * d - 3, d - 1) * 2;
    if (num % (3 * d - 1)) throw Error("internal", "closed form is not an integer");
    return num / (3 * d - 1);
}

std::int64_t tree_lower_bound(int n) {
    std::int64_t s = 0;
    for (int d = 1; 3 * d <= n; ++d) s += binomial(n, 3 * d) * tree_count_closed_form(d);
    return s;
}

std::int64_t degree4_count_formula(int n) {
    return 288 * binomial(n, 9) + 400 * binomial(n, 10) + 264 * binomial(n, 11) + 52 * binomial(n, 12);
}

Sl4TreeReport enumerate_sl4_tree_webs(int n, std::uint64_t seed, std::size_t samples) {
    if (n % 4) throw Error("bad_argument", "n must be a multiple of 4");
    Sl4TreeReport rep;
    rep.seed = seed;
    rep.fingerprint_size = samples;
    std::vector<Web> trees = enumerate_tree_webs(4, n);
    rep.trees = trees.size();

    std::vector<int> word;
    for (int j = 1; j <= 4; ++j)
        for (int t = 0; t < n / 4; ++t) word.push_back(j);
    std::mt19937_64 g(seed);
    std::vector<BoundaryCondition> sample;
    std::vector<int> ones(n, 1);
    for (size_t s = 0; s < samples; ++s) {
        std::shuffle(word.begin(), word.end(), g);
        sample.push_back(boundary_from_word(word, ones));
    }
    std::vector<std::vector<std::int64_t>> fp(trees.size());
    std::vector<char> zero(trees.size(), 0);
    parallel_for(trees.size(), [&](size_t i) {
        const Web& W = trees[i];
        for (auto& S : sample) fp[i].push_back(evaluate_invariant(W, S));
        // a vanishing sample is only conclusive together with the lex-minimal word
        try {
            word_and_sign(W);
        } catch (const Error& e) {
            if (e.code != "zero_invariant") throw;
            zero[i] = 1;
        }
    });
    std::map<std::vector<std::int64_t>, std::vector<size_t>> groups;
    for (size_t i = 0; i < trees.size(); ++i) {
        if (zero[i]) {
            ++rep.zero_invariant;
            continue;
        }
        auto v = fp[i];
        auto nz = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
        if (nz != v.end() && *nz < 0)
            for (auto& x : v) x = -x;
        groups[v].push_back(i);
    }
    // fingerprint collisions are settled on the full grid
    auto grid = content_grid(ones, 4);
    for (auto& [key, members] : groups) {
        std::vector<std::vector<size_t>> cls;  // up to sign; each entry lists sign-exact representatives
        for (size_t i : members) {
            bool placed = false;
            for (auto& c : cls) {
                size_t j = c.front();
                std::vector<char> same(grid.size(), 1), neg(grid.size(), 1);
                parallel_for(grid.size(), [&](size_t t) {
                    auto a = evaluate_invariant(trees[i], grid[t]), b = evaluate_invariant(trees[j], grid[t]);
                    same[t] = a == b;
                    neg[t] = a == -b;
                });
                ++rep.collisions_checked;
                bool eq = std::all_of(same.begin(), same.end(), [](char x) { return x; });
                bool opp = std::all_of(neg.begin(), neg.end(), [](char x) { return x; });
                if (!eq && !opp) continue;
                ++rep.collisions_confirmed;
                placed = true;
                // c holds at most one representative per sign
                if (opp && c.size() == 1) c.push_back(i);
                break;
            }
            if (!placed) cls.push_back({i});
        }
        rep.distinct += cls.size();
        for (auto& c : cls) rep.distinct_exact += c.size();
    }
    return rep;
}

}  // namespace wd
