#pragma once

#include "webdimer/webs.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wd {

// Standard SL_r tree webs on n boundary points: planar trees whose leaves are
// the boundary in order, internal multiplicity sums r, no 2-valent vertices.
// Generated as planted plane trees rooted at the neighbour of boundary n.
std::vector<Web> enumerate_tree_webs(int r, int n);

// SL_3 tree webs of Plücker degree d on 3d points (1 <= d <= 6).
std::vector<Web> enumerate_sl3_tree_webs(int d);

// Web is connected, acyclic, standard, without 2-valent internal vertices.
bool is_tree_web(const Web& W);

// Binary tree (leaf "L", internal "w(..)"/"b(..)") and the pair of 4-ary trees
// (leaf "L", node "(abcd)") attached to an SL_3 tree web.
struct TreeCode {
    std::string binary;
    std::string first, second;
};
TreeCode tree_bijection(const Web& W);
Web tree_from_quaternary(const std::string& first, const std::string& second);

// All full ordered 4-ary trees with m internal nodes, in the string encoding above.
std::vector<std::string> quaternary_trees(int m);

// C(4d-3, d-1) * 2 / (3d-1); throws if the division is not exact.
std::int64_t tree_count_closed_form(int d);

// sum_{d >= 1} C(n, 3d) T_d.
std::int64_t tree_lower_bound(int n);

// 288 C(n,9) + 400 C(n,10) + 264 C(n,11) + 52 C(n,12).
std::int64_t degree4_count_formula(int n);

struct Sl4TreeReport {
    std::size_t trees = 0;            // generated tree webs
    std::size_t zero_invariant = 0;   // trees whose invariant vanishes
    std::size_t distinct = 0;         // distinct invariants up to sign
    std::size_t distinct_exact = 0;   // distinct invariants, sign kept
    std::size_t collisions_checked = 0;    // fingerprint collisions re-evaluated on the full grid
    std::size_t collisions_confirmed = 0;  // of those, genuinely equal up to sign
    std::size_t fingerprint_size = 0;
    std::uint64_t seed = 0;
};

// Standard SL_4 tree webs on 12 points deduplicated by invariant fingerprints.
Sl4TreeReport enumerate_sl4_tree_webs(int n = 12, std::uint64_t seed = 2024, std::size_t samples = 64);

}  // namespace wd
