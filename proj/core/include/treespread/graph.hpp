#ifndef TREESPREAD_GRAPH_HPP
#define TREESPREAD_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "treespread/vertex_set.hpp"

namespace treespread {

// Simple undirected graph on dense vertex ids [0, n). Adjacency is a
// symmetric bit matrix; no loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int degree(int u) const { return degrees_[static_cast<std::size_t>(u)]; }
    const VertexSet& row(int u) const { return adj_[static_cast<std::size_t>(u)]; }

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    void check(int u) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<int> degrees_;
};

// Minimum degree over all vertices. Throws on the empty graph.
int min_degree(const Graph& g);

// Number of neighbors of u inside s (u itself never counted).
int degree_into(const Graph& g, int u, const VertexSet& s);
int degree_into(const Graph& g, int u, const std::vector<int>& s);

// Minimum degree of the induced subgraph G[s]. Throws on empty s.
int induced_min_degree(const Graph& g, const VertexSet& s);
int induced_min_degree(const Graph& g, const std::vector<int>& s);

// Minimum degree of G[s + v], i.e. s with one extra vertex adjoined.
int induced_min_degree_with(const Graph& g, const VertexSet& s, int v);

bool is_connected(const Graph& g);

// File format: header "n m" then m lines "u v" with 0 <= u < v < n.
void save_graph(const Graph& g, std::ostream& out);
Graph load_graph(std::istream& in);
void save_graph_file(const Graph& g, const std::string& path);
Graph load_graph_file(const std::string& path);

}  // namespace treespread

#endif  // TREESPREAD_GRAPH_HPP
