#include "webdimer/core.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace wd {

Subset subset_of(const std::vector<int>& elems) {
    Subset s = 0;
    for (int i : elems) {
        if (i < 1 || i > 32) throw Error("bad_subset", "element out of range: " + std::to_string(i));
        if (contains(s, i)) throw Error("bad_subset", "repeated element " + std::to_string(i));
        s |= bit(i);
    }
    return s;
}

std::vector<int> elements(Subset s) {
    std::vector<int> out;
    for (int i = 1; s; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

std::string subset_str(Subset s) {
    std::string out;
    for (int i : elements(s)) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

Subset parse_subset(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            v.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error("bad_subset", "cannot parse subset '" + s + "'");
        }
    }
    return subset_of(v);
}

std::string q_str(const Q& q) { return q.get_str(); }

Q parse_q(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw Error("bad_rational", "cannot parse rational '" + s + "'");
    if (q.get_den() == 0) throw Error("bad_rational", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

int perm_sign(const std::vector<int>& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int RationalRng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

Q RationalRng::next() {
    Q q(uniform(-bound_, bound_), uniform(1, bound_));
    q.canonicalize();
    return q;
}

Q RationalRng::next_nonzero() {
    for (;;) {
        Q q = next();
        if (q != 0) return q;
    }
}

namespace {
std::atomic<unsigned> g_workers{0};
}

void set_workers(unsigned w) { g_workers = w; }

unsigned workers() {
    unsigned w = g_workers;
    if (w == 0) w = std::max(1u, std::thread::hardware_concurrency());
    return w;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f) {
    unsigned w = unsigned(std::min<std::size_t>(workers(), count));
    if (w <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto body = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= count) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!err) err = std::current_exception();
                next = count;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < w; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace wd
