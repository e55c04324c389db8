#pragma once

#include <string>
#include <vector>

#include "matpaint/linrep.hpp"
#include "matpaint/matroid.hpp"
#include "matpaint/painting.hpp"

namespace matpaint {

// Finite directed multigraph; parallel edges and self-loops allowed.
// Edge labels are the matroid elements, sorted lexicographically.
class DirectedGraph {
public:
    struct Edge {
        std::string label;
        int source;
        int target;
    };

    DirectedGraph(std::vector<std::string> vertices,
                  std::vector<std::tuple<std::string, std::string, std::string>> edges);

    int vertex_count() const { return int(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex(int i) const { return vertices_[size_t(i)]; }
    int edge_count() const { return int(edges_.size()); }
    const Edge& edge(int i) const { return edges_[size_t(i)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    DirectedGraph with_edge_flipped(const std::string& label) const;

private:
    std::vector<std::string> vertices_;  // sorted
    std::vector<Edge> edges_;            // sorted by label
};

// Edge sets of the simple cycles, via path DFS with edge-mask deduplication.
std::vector<Mask> simple_cycles(const DirectedGraph& g, long long cycle_budget = 1 << 16);

Matroid cycle_matroid(const DirectedGraph& g);

// Columns chi_target - chi_source over the given field; rows = vertices.
Representation incidence_family(const DirectedGraph& g, Domain field);

struct GraphSigning {
    Matroid matroid;
    Painting signing;  // Regular domain, verified
    // per circuit: edge indices in traversal order (self-loop: just itself)
    std::vector<std::vector<int>> cycle_orders;
    // per cocircuit: the two vertex sides of the bond; side 1 holds the least vertex
    std::vector<std::pair<std::vector<int>, std::vector<int>>> bond_sides;
};

// The orientation signing: c follows each cycle's traversal direction,
// d marks which side of the bond an edge points into.
GraphSigning graph_signing(const DirectedGraph& g);

}  // namespace matpaint
