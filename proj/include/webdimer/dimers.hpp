#pragma once

#include "webdimer/plabic.hpp"
#include "webdimer/plucker.hpp"
#include "webdimer/webs.hpp"

#include <vector>

namespace wd {

struct DimerCover {
    int r = 1;
    std::vector<int> lambda;
    std::vector<int> mult;  // per edge of the plabic graph
    bool operator<(const DimerCover& o) const { return mult < o.mult; }
    bool operator==(const DimerCover& o) const { return mult == o.mult && r == o.r; }
};

struct Network {
    PlabicGraph G;
    std::vector<Q> w;  // per edge, nonzero
    Network(PlabicGraph g, std::vector<Q> weights);
};

Network unit_network(const PlabicGraph& G);
Network random_network(const PlabicGraph& G, RationalRng& rng);

// All r-dimer covers with boundary condition lambda, sorted by multiplicity vector.
std::vector<DimerCover> enumerate_dimer_covers(const PlabicGraph& G, int r, const std::vector<int>& lambda);
std::vector<int> indicator_lambda(int n, Subset I);

Q edge_weight(const Network& N, const DimerCover& D);

// Delta_I(N) for every k-subset I.
PluckerVector boundary_measurement(const Network& N);

// prod_f Delta_{I_f}^{r W_f - D_f - r}; D_f counts non-leg edges with multiplicity.
Monomial face_weight(const PlabicGraph& G, const DimerCover& D);
PluckerPoly face_weight_poly(const PlabicGraph& G, const DimerCover& D);

// Marsh-Scott sum of face weights over D_{1, delta^I}.
PluckerPoly marsh_scott(const PlabicGraph& G, Subset I);

Web weblike_subgraph(const PlabicGraph& G, const DimerCover& D);

WebCombination web_r(const Network& N, int r, const std::vector<int>& lambda);
// Throws "twist_undefined" when a face coordinate with negative exponent vanishes at X(N).
WebCombination web_r_twisted(const Network& N, int r, const std::vector<int>& lambda);

nlohmann::json cover_to_json(const DimerCover& D);
nlohmann::json network_to_json(const Network& N);
// Plabic JSON with "weights": object keyed by edge id, or an array in edge order.
Network network_from_json(const nlohmann::json& j);

}  // namespace wd
