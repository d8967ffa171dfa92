#pragma once

#include "webdimer/graph.hpp"
#include "webdimer/linalg.hpp"
#include "webdimer/tableaux.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wd {

// Subset of [r]: label j is bit j-1.
using LabelSet = std::uint32_t;
using BoundaryCondition = std::vector<LabelSet>;

// Orientation for the FP vertex sign: +1 means labels 1,2,3 read clockwise
// around a vertex count as positive. Flip to -1 to reverse the convention.
inline int fp_orientation = 1;

BoundaryCondition boundary_from_word(const std::vector<int>& word, const std::vector<int>& lambda);
std::vector<int> word_of(const BoundaryCondition& S);
int sign_of(const BoundaryCondition& S);
// Each label 1..r appears exactly k times.
bool content_ok(const BoundaryCondition& S, int r);
std::string bc_str(const BoundaryCondition& S);

// Enumerates consistent labelings. With `S` empty the boundary labels are free
// (no content condition). The callback receives one label set per edge and
// returns false to stop early.
void for_each_labeling(const Web& W, const BoundaryCondition& S,
                       const std::function<bool(const std::vector<LabelSet>&)>& cb);

std::int64_t count_labelings(const Web& W, const BoundaryCondition& S);
std::vector<std::vector<LabelSet>> enumerate_labelings(const Web& W, const BoundaryCondition& S);

struct WordSign {
    std::vector<int> word;
    BoundaryCondition S;
    int sign = 1;
};

// Lexicographically minimal word with a(S;W) > 0. Semistandard webs are
// unclasped first; S then refers to the unclasped boundary.
WordSign word_and_sign(const Web& W);

// sign(S) a(S;W); zero when the content condition fails.
std::int64_t evaluate_invariant(const Web& W, const BoundaryCondition& S);

// FP-convention values for standard SL_3 tensor diagrams.
std::int64_t evaluate_fp(const Web& T, const BoundaryCondition& S);
Q evaluate_fp_at_point(const Web& T, const Matrix& M);
// Signed state sum at a point: sum_S sign(S) a(S;W) prod_i M[S(i)][i] (standard webs).
Q evaluate_invariant_at_point(const Web& W, const Matrix& M);

// Unclasp: every boundary edge gets its own boundary vertex. `grouping` receives
// the number of copies per original vertex.
Web unclasp(const Web& X, std::vector<int>* grouping = nullptr);
Web clasp(const Web& W, const std::vector<int>& grouping);

// Counterclockwise rotation by 2pi/n: boundary j+1 becomes j.
Web rotate(const Web& W, int times = 1);
// Reflection fixing the gap between n and 1: i -> n+1-i.
Web reflect(const Web& W);

Tableau tableau_of_web(const Web& W);
bool has_fork(const Web& W, int i, int j);
std::vector<std::pair<int, int>> forks(const Web& W);

// Formal rational combination of webs, merged by canonical key.
struct WebCombination {
    std::map<std::string, std::pair<Q, Web>> terms;
    void add(const Q& c, const Web& w);
    size_t size() const { return terms.size(); }
};

nlohmann::json combination_to_json(const WebCombination& c);
WebCombination combination_from_json(const nlohmann::json& j, int default_r);

// Small named diagrams used across tests and tools.
Web make_tripod(int n, int a, int b, int c);           // SL_3, one white vertex
Web make_sl2_arc_web(int n, const std::vector<std::pair<int, int>>& arcs);
Web disjoint_union(const Web& a, const Web& b);        // same n, same r

}  // namespace wd
