#pragma once

#include "webdimer/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wd {

struct Trip {
    int start = 0, end = 0;
    std::vector<int> darts;
};

// Plabic graph: every edge multiplicity 1, one edge per boundary vertex.
// Faces, trips and face labels are computed at construction.
class PlabicGraph {
public:
    explicit PlabicGraph(Web g);

    const Web& graph() const { return g_; }
    int n() const { return g_.n; }
    int type() const;  // #white - #black internal
    int leg(int i) const { return g_.bnd[i - 1][0]; }
    bool is_leg(int e) const { return g_.edges[e].u < 0 || g_.edges[e].v < 0; }

    const Faces& faces() const { return faces_; }
    // Faces of the graph: every face of the rotation system except the outer region.
    const std::vector<int>& face_ids() const { return face_ids_; }
    const std::vector<Trip>& trips() const { return trips_; }
    std::vector<int> trip_permutation() const;

    bool has_face_labels() const { return labels_.has_value(); }
    // Throws "not_reduced" if trips self-intersect.
    const std::map<int, Subset>& face_labels() const;

    // Number of distinct white vertices on a face boundary.
    int white_count(int face) const;
    // Distinct non-leg edges on a face boundary.
    const std::vector<int>& face_edges(int face) const { return face_edges_[face]; }

    bool operator==(const PlabicGraph& o) const { return canonical_key(g_) == canonical_key(o.g_); }

private:
    Web g_;
    Faces faces_;
    std::vector<int> face_ids_;
    std::vector<Trip> trips_;
    std::optional<std::map<int, Subset>> labels_;
    std::string label_error_;
    std::vector<std::vector<int>> face_edges_;
    std::vector<int> white_count_;
};

PlabicGraph make_claw_graph(int n);
PlabicGraph make_rectangle_graph(int k, int n);

nlohmann::json plabic_to_json(const PlabicGraph& G);
PlabicGraph plabic_from_json(const nlohmann::json& j);

}  // namespace wd
