#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace wd {

using Q = mpq_class;

// Subsets of [n] (n <= 32) as bitmasks; element i lives in bit i-1.
using Subset = std::uint32_t;

struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
};

inline Subset bit(int i) { return Subset(1) << (i - 1); }
inline int popcount(Subset s) { return __builtin_popcount(s); }
inline bool contains(Subset s, int i) { return (s >> (i - 1)) & 1u; }

Subset subset_of(const std::vector<int>& elems);
std::vector<int> elements(Subset s);
// "1,2,4"
std::string subset_str(Subset s);
Subset parse_subset(const std::string& s);

std::string q_str(const Q& q);
Q parse_q(const std::string& s);

// Parity of the inversion count of a sequence: +1 or -1.
int perm_sign(const std::vector<int>& w);

std::int64_t binomial(int n, int k);

// Seeded generator for random rationals p/q with |p| <= bound, 1 <= q <= bound.
class RationalRng {
public:
    explicit RationalRng(std::uint64_t seed, int bound = 9) : gen_(seed), bound_(bound) {}
    Q next();
    Q next_nonzero();
    int uniform(int lo, int hi);
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
    int bound_;
};

// Worker cap for parallel_for; 0 means hardware concurrency.
void set_workers(unsigned w);
unsigned workers();
// Runs f(0..count-1) across workers; the first exception is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f);

}  // namespace wd
