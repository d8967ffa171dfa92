#pragma once

#include "webdimer/core.hpp"
#include "webdimer/linalg.hpp"

#include <functional>
#include <map>
#include "json.hpp"
#include <vector>

namespace wd {

// Laurent monomial: sorted (subset, nonzero exponent) pairs.
using Monomial = std::vector<std::pair<Subset, int>>;
using PluckerVector = std::map<Subset, Q>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_of(const std::vector<Subset>& factors);
int mono_degree(const Monomial& m);
std::string mono_str(const Monomial& m);

class PluckerPoly {
public:
    int k = 0, n = 0;
    std::map<Monomial, Q> terms;

    PluckerPoly() = default;
    PluckerPoly(int k_, int n_) : k(k_), n(n_) {}
    static PluckerPoly constant(int k, int n, const Q& c);
    static PluckerPoly var(int k, int n, Subset I);
    static PluckerPoly monomial(int k, int n, const Monomial& m, const Q& c = 1);

    void add(const Monomial& m, const Q& c);
    bool is_zero() const { return terms.empty(); }
    PluckerPoly& operator+=(const PluckerPoly& o);
    PluckerPoly& operator-=(const PluckerPoly& o);
    PluckerPoly& operator*=(const Q& c);
    friend PluckerPoly operator+(PluckerPoly a, const PluckerPoly& b) { return a += b; }
    friend PluckerPoly operator-(PluckerPoly a, const PluckerPoly& b) { return a -= b; }
    friend PluckerPoly operator*(PluckerPoly a, const Q& c) { return a *= c; }
    friend PluckerPoly operator*(const PluckerPoly& a, const PluckerPoly& b);
    bool operator==(const PluckerPoly& o) const { return terms == o.terms; }

    // Every monomial has the same multidegree (negative exponents allowed).
    bool homogeneous() const;
    std::vector<int> multidegree() const;  // of the first term; empty poly -> zeros
    std::string str() const;
};

// Evaluation given a Plücker lookup. Throws "pole_at_point" when a vanishing
// coordinate carries a negative exponent.
Q evaluate(const PluckerPoly& p, const std::function<Q(Subset)>& delta);
Q evaluate(const PluckerPoly& p, const Matrix& M);
Q evaluate(const PluckerPoly& p, const PluckerVector& v);

Q plucker(const Matrix& M, Subset I);
PluckerVector plucker_vector(const Matrix& M);
std::vector<Subset> k_subsets(int n, int k);

// Alternating coordinate: the minor on columns in the given order (0 on repeats).
Q signed_plucker(const PluckerVector& v, const std::vector<int>& cols);

// Number of violated three-term relations
//   D(S,a,c)D(S,b,d) = D(S,a,b)D(S,c,d) + D(S,a,d)D(S,b,c).
int three_term_violations(const PluckerVector& v, int k, int n);

// A k x n matrix whose maximal minors equal v (v must be a nonzero decomposable vector).
Matrix matrix_from_plucker(const PluckerVector& v, int k, int n);

std::vector<Q> cross_product(const std::vector<std::vector<Q>>& vs, int k);

// The twist, from the explicit two-case column formula.
Matrix twist_matrix(const Matrix& M);
// The same twist through the cyclic-index form with the epsilon' signs.
Matrix twist_matrix_cyclic(const Matrix& M);
int twist_sign(int k, int n, int i);

nlohmann::json poly_to_json(const PluckerPoly& p);
PluckerPoly poly_from_json(const nlohmann::json& j, int n = 0);
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace wd
