#pragma once

#include "vz/types.hpp"

namespace vz {

// Interaction graph: n qubits on vertices, couplings allowed along edges.
struct Graph {
    int n = 0;
    EdgeList edges;  // normalized (a < b), sorted, unique

    static Graph chain(int n);
    static Graph complete(int n);

    bool has_edge(const Edge& e) const;
    int degree(int v) const;
    int max_degree() const;

    // Throws std::invalid_argument on self loops, duplicates or out-of-range endpoints.
    void validate() const;
};

// Partitions `edges` into classes such that edges within a class are vertex-disjoint.
// Greedy over lexicographically sorted edges; class count is bounded by Delta+1 in
// practice (Vizing guarantees an optimal coloring of that size exists).
std::vector<EdgeList> edge_color(const Graph& g, const EdgeList& edges);

// True when no vertex appears in more than one edge of `edges`.
bool is_pairwise(const EdgeList& edges, int n);

}  // namespace vz
