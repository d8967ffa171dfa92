#include "webdimer/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wd {

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rs) {
    if (rs.empty() || rs[0].empty()) throw Error("bad_tableau", "empty tableau");
    Tableau t(int(rs.size()), int(rs[0].size()));
    for (int i = 0; i < t.rows; ++i) {
        if (int(rs[i].size()) != t.cols) throw Error("bad_tableau", "tableau is not rectangular");
        for (int j = 0; j < t.cols; ++j) t.at(i, j) = rs[i][j];
    }
    return t;
}

std::vector<std::vector<int>> Tableau::to_rows() const {
    std::vector<std::vector<int>> out(rows, std::vector<int>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out[i][j] = at(i, j);
    return out;
}

bool Tableau::operator<(const Tableau& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return e < o.e;
}

bool Tableau::is_semistandard() const {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (at(i, j) < 1) return false;
            if (j + 1 < cols && at(i, j) > at(i, j + 1)) return false;
            if (i + 1 < rows && at(i, j) >= at(i + 1, j)) return false;
        }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    std::vector<int> s = e;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < int(s.size()); ++i)
        if (s[i] != i + 1) return false;
    return true;
}

std::string Tableau::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows; ++i) {
        if (i) os << '/';
        for (int j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j);
    }
    return os.str();
}

std::vector<Tableau> syt_enumerate(int r, int k) {
    if (r < 1 || k < 1) throw Error("bad_shape", "tableau shape needs r,k >= 1");
    if (r * k > 16) throw Error("size_guard", "syt_enumerate limited to rk <= 16");
    std::vector<Tableau> out;
    Tableau t(r, k);
    std::vector<int> len(r, 0);
    int n = r * k;
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            out.push_back(t);
            return;
        }
        for (int i = 0; i < r; ++i) {
            if (len[i] == k) continue;
            if (i > 0 && len[i - 1] <= len[i]) continue;
            t.at(i, len[i]++) = v;
            rec(v + 1);
            --len[i];
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t hook_length_count(int r, int k) {
    // n! / prod hooks, computed with exact big integers
    mpz_class num = 1, den = 1;
    for (int i = 2; i <= r * k; ++i) num *= i;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < k; ++j) den *= (r - 1 - i) + (k - 1 - j) + 1;
    mpz_class q = num / den;
    return q.get_si();
}

// Remove the smallest entry, slide the hole out by jeu de taquin. Returns the
// vacated cell; the remaining entries keep their values.
static std::pair<int, int> delete_min_and_slide(Tableau& t, std::vector<int>& len) {
    int i = 0, j = 0;
    for (;;) {
        bool down = i + 1 < t.rows && j < len[i + 1];
        bool right = j + 1 < len[i];
        if (!down && !right) break;
        if (down && (!right || t.at(i + 1, j) < t.at(i, j + 1))) {
            t.at(i, j) = t.at(i + 1, j);
            ++i;
        } else {
            t.at(i, j) = t.at(i, j + 1);
            ++j;
        }
    }
    t.at(i, j) = 0;
    --len[i];
    return {i, j};
}

static void require_standard(const Tableau& T) {
    if (!T.is_standard()) throw Error("not_standard", "operation needs a standard tableau");
}

Tableau promotion(const Tableau& T) {
    require_standard(T);
    Tableau t = T;
    std::vector<int> len(t.rows, t.cols);
    auto [i, j] = delete_min_and_slide(t, len);
    for (auto& x : t.e)
        if (x) --x;
    t.at(i, j) = t.size();
    return t;
}

Tableau evacuation(const Tableau& T) {
    require_standard(T);
    Tableau t = T, out(T.rows, T.cols);
    std::vector<int> len(t.rows, t.cols);
    int n = t.size();
    for (int s = 0; s < n; ++s) {
        auto [i, j] = delete_min_and_slide(t, len);
        for (auto& x : t.e)
            if (x) --x;
        out.at(i, j) = n - s;
    }
    return out;
}

Tableau transpose(const Tableau& T) {
    Tableau t(T.cols, T.rows);
    for (int i = 0; i < T.rows; ++i)
        for (int j = 0; j < T.cols; ++j) t.at(j, i) = T.at(i, j);
    return t;
}

std::vector<int> yamanouchi_word(const Tableau& T) {
    int maxv = 0;
    for (int x : T.e) maxv = std::max(maxv, x);
    std::vector<int> w;
    for (int v = 1; v <= maxv; ++v)
        for (int i = 0; i < T.rows; ++i)
            for (int j = 0; j < T.cols; ++j)
                if (T.at(i, j) == v) w.push_back(i + 1);
    return w;
}

Tableau tableau_from_word(const std::vector<int>& word, int rows) {
    int n = int(word.size());
    if (rows < 1 || n % rows) throw Error("bad_word", "word length not divisible by row count");
    Tableau t(rows, n / rows);
    std::vector<int> len(rows, 0);
    for (int v = 1; v <= n; ++v) {
        int r = word[v - 1] - 1;
        if (r < 0 || r >= rows || len[r] == t.cols) throw Error("bad_word", "row index out of range");
        t.at(r, len[r]++) = v;
    }
    if (!t.is_standard()) throw Error("bad_word", "word is not a lattice word");
    return t;
}

std::set<int> descent_set(const Tableau& T) {
    int n = T.size();
    std::vector<int> row(n + 2, -1);
    for (int i = 0; i < T.rows; ++i)
        for (int j = 0; j < T.cols; ++j)
            if (T.at(i, j) >= 1 && T.at(i, j) <= n) row[T.at(i, j)] = i;
    std::set<int> d;
    for (int l = 1; l < n; ++l)
        if (row[l] >= 0 && row[l + 1] > row[l]) d.insert(l);
    return d;
}

nlohmann::json tableau_to_json(const Tableau& T) { return T.to_rows(); }

Tableau tableau_from_json(const nlohmann::json& j) {
    return Tableau::from_rows(j.get<std::vector<std::vector<int>>>());
}

}  // namespace wd
