#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pasting {

// Directed multigraph on vertices 0..n-1.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(std::size_t vertices) : out_(vertices), in_(vertices) {}

    std::size_t vertex_count() const { return out_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    int add_vertex();
    void add_edge(int from, int to);
    bool has_edge(int from, int to) const;

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& successors(int v) const { return out_[v]; }
    const std::vector<int>& predecessors(int v) const { return in_[v]; }

    // Edge set without multiplicity, sorted.
    std::vector<std::pair<int, int>> edge_set() const;

private:
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<std::pair<int, int>> edges_;
};

bool is_acyclic(const DiGraph& g);

// Induced subgraph on `vertices` (relabelled 0..k-1 in the given order).
DiGraph induced_subgraph(const DiGraph& g, const std::vector<int>& vertices);

// Connectivity of the underlying undirected graph restricted to `vertices`.
bool is_weakly_connected(const DiGraph& g, const std::vector<int>& vertices);

// Backtracking enumerator of topological sorts, lexicographic in vertex ids.
class TopologicalSorts {
public:
    explicit TopologicalSorts(const DiGraph& g);
    std::optional<std::vector<int>> next();

private:
    bool complete();

    const DiGraph* g_;
    std::vector<int> indegree_;
    std::vector<bool> placed_;
    std::vector<int> sequence_;
    bool started_ = false;
    bool finished_ = false;
};

std::vector<std::vector<int>> all_topological_sorts(const DiGraph& g, std::size_t limit = 0);
std::size_t count_topological_sorts(const DiGraph& g);

struct Contraction {
    DiGraph graph;
    int contracted = -1;     // the vertex x_W
    std::vector<int> origin; // base vertex -> vertex of graph
};

// Contracts the weakly connected set W to a single vertex placed at the
// position of W's least vertex. Throws if W is empty or not connected.
Contraction contract(const DiGraph& g, const std::vector<int>& w);

// W is path-induced iff the contraction is acyclic (g acyclic, W connected).
bool is_path_induced(const DiGraph& g, const std::vector<int>& w);

// Graphviz output; names[v] labels vertex v.
std::string to_dot(const DiGraph& g, const std::vector<std::string>& names,
                   const std::string& graph_name = "G");

} // namespace pasting
