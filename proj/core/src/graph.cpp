#include "vz/graph.hpp"

#include <algorithm>
#include <set>

namespace vz {

Graph Graph::chain(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

Graph Graph::complete(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

bool Graph::has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

int Graph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges) d += e.touches(v);
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n; ++v) best = std::max(best, degree(v));
    return best;
}

void Graph::validate() const {
    if (n <= 0) throw std::invalid_argument("graph must have at least one vertex");
    std::set<Edge> seen;
    for (const Edge& e : edges) {
        if (e.a == e.b) throw std::invalid_argument("self loop on vertex " + std::to_string(e.a));
        if (e.a < 0 || e.b >= n) throw std::invalid_argument("edge endpoint out of range");
        if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge");
    }
    if (!std::is_sorted(edges.begin(), edges.end()))
        throw std::invalid_argument("edge list must be sorted");
}

std::vector<EdgeList> edge_color(const Graph& g, const EdgeList& edges) {
    EdgeList sorted = edges;
    std::sort(sorted.begin(), sorted.end());

    std::vector<EdgeList> classes;
    std::vector<Mask> used;  // per class, vertices already covered
    for (const Edge& e : sorted) {
        bool placed = false;
        for (size_t c = 0; c < classes.size(); ++c) {
            if (!used[c][static_cast<size_t>(e.a)] && !used[c][static_cast<size_t>(e.b)]) {
                classes[c].push_back(e);
                used[c][static_cast<size_t>(e.a)] = 1;
                used[c][static_cast<size_t>(e.b)] = 1;
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({e});
            used.push_back(mask_none(g.n));
            used.back()[static_cast<size_t>(e.a)] = 1;
            used.back()[static_cast<size_t>(e.b)] = 1;
        }
    }
    return classes;
}

bool is_pairwise(const EdgeList& edges, int n) {
    Mask seen = mask_none(n);
    for (const Edge& e : edges) {
        if (seen[static_cast<size_t>(e.a)] || seen[static_cast<size_t>(e.b)]) return false;
        seen[static_cast<size_t>(e.a)] = 1;
        seen[static_cast<size_t>(e.b)] = 1;
    }
    return true;
}

}  // namespace vz
