#pragma once

#include "webdimer/dimers.hpp"
#include "webdimer/plucker.hpp"
#include "webdimer/webs.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace wd {

// S(i) = { j : i in I_j }.
BoundaryCondition dual_condition(const std::vector<Subset>& I, int n);
// Factors with multiplicity; negative exponents rejected.
std::vector<Subset> factors_of(const Monomial& m);

// <W, Delta_{I_1} ... Delta_{I_r}> = a(S; W), S dual to the list.
std::int64_t pair_with_monomial(const Web& W, const std::vector<Subset>& I);
Q pair_with_poly(const Web& W, const PluckerPoly& f);
Q pair_with_poly(const WebCombination& W, const PluckerPoly& f);

// Value of p on the basis tensor E_S (entries of S at most singletons).
Q poly_on_condition(const PluckerPoly& p, const BoundaryCondition& S);

// All S supported on {i : lambda_i = 1} using each label 1..k equally often.
std::vector<BoundaryCondition> content_grid(const std::vector<int>& lambda, int k);

using Evaluator = std::function<Q(const BoundaryCondition&)>;

struct Expansion {
    PluckerPoly poly;
    std::size_t checked = 0;  // grid points verified
    std::size_t grid = 0;     // grid size
    bool full = false;        // every grid point verified
};

// Standard-monomial solve for invariants of degree lambda in {0,1}^n on Gr(k,n).
// The square system uses the row words of k x d tableaux; the result is then
// verified on the whole grid, or on `sample` seeded points when the grid exceeds
// `full_limit`.
class LinearExpander {
public:
    LinearExpander(int k, std::vector<int> lambda);
    Expansion expand(const Evaluator& X, std::size_t full_limit = 20000, std::size_t sample = 2000,
                     std::uint64_t seed = 1) const;
    int k() const { return k_; }
    const std::vector<std::vector<Subset>>& monomials() const { return monos_; }
    const std::vector<BoundaryCondition>& grid() const { return grid_; }

private:
    int k_, n_;
    std::vector<int> lambda_;
    std::vector<std::vector<Subset>> monos_;
    std::vector<BoundaryCondition> rows_;
    std::vector<BoundaryCondition> grid_;
    Matrix inv_;
};

// Shared expander per (k, lambda).
const LinearExpander& expander_for(int k, const std::vector<int>& lambda);

// Expansion of the web invariant as a sum over labelings: sign(S) a(S;X).
Expansion expand_linear(const Web& X);
// Expansion of the FP-convention invariant of a standard SL_3 diagram.
Expansion expand_linear_fp(const Web& T);

// Wrench rewriting of a standard SL_3 tensor diagram (FP convention) down to
// tripods. With `fork`, the fork at (i, j) is never contracted.
Expansion wrench_expand(const Web& T, std::optional<std::pair<int, int>> fork = std::nullopt);

// <W, X>: X (standard SL_k webs) is expanded, W is paired monomial by monomial.
Q pair_webs(const Web& W, const Web& X);
Q pair_webs(const WebCombination& W, const WebCombination& X);

// True when W and X share a fork (i, j); the pairing is then zero.
bool fork_prefilter(const Web& W, const Web& X);

struct DualityReport {
    Matrix pairing;              // [<A_i, B_j>]
    std::vector<int> partner;    // per row: j with T(B_j) = T(A_i)^t, or -1
    std::vector<int> signs;      // sign(B_j)
    int offdiag_nonzero = 0;
    bool transpose_bijection = false;
    bool diagonal_pm1 = false;       // partner entries are +-1
    bool diagonal_is_sign = false;   // partner entries equal sign(B_j)
};

DualityReport duality_matrix(const std::vector<Web>& A, const std::vector<Web>& B);
// Selected rows only (e.g. one representative per orbit). Each row's tableau is
// read from its first term; partners must be distinct but need not cover B.
DualityReport duality_rows(const std::vector<WebCombination>& A, const std::vector<Web>& B);

enum class TwistMode { literal, factored };

// sum_{D in D_{r,lambda}(G)} <D, f> fwt_G(D). `factored` multiplies Marsh-Scott
// sums of the factors instead (the same Laurent polynomial).
PluckerPoly twist_expand(const PluckerPoly& f, const PlabicGraph& G, TwistMode mode = TwistMode::literal);

// Coefficients of D in the given basis (same r, lambda = (1^n)), certified on the grid.
std::vector<Q> expand_in_web_basis(const Web& D, const std::vector<Web>& basis);

}  // namespace wd
