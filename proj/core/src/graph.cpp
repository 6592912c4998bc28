#include "treespread/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace treespread {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    degrees_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::check(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("Graph: vertex id out of range");
}

void Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("Graph: loops not allowed");
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
    ++degrees_[static_cast<std::size_t>(u)];
    ++degrees_[static_cast<std::size_t>(v)];
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check(u);
    check(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u) {
        row(u).for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

int min_degree(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("min_degree: empty graph");
    int best = std::numeric_limits<int>::max();
    for (int u = 0; u < g.n(); ++u) best = std::min(best, g.degree(u));
    return best;
}

int degree_into(const Graph& g, int u, const VertexSet& s) {
    if (u < 0 || u >= g.n()) throw std::out_of_range("degree_into: u out of range");
    if (s.universe() != g.n())
        throw std::invalid_argument("degree_into: set universe mismatch");
    return g.row(u).intersection_count(s);
}

int degree_into(const Graph& g, int u, const std::vector<int>& s) {
    return degree_into(g, u, VertexSet::of(g.n(), s));
}

int induced_min_degree(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("induced_min_degree: empty set");
    int best = std::numeric_limits<int>::max();
    s.for_each([&](int u) { best = std::min(best, g.row(u).intersection_count(s)); });
    return best;
}

int induced_min_degree(const Graph& g, const std::vector<int>& s) {
    return induced_min_degree(g, VertexSet::of(g.n(), s));
}

int induced_min_degree_with(const Graph& g, const VertexSet& s, int v) {
    int best = degree_into(g, v, s);
    s.for_each([&](int u) {
        const int d = g.row(u).intersection_count(s) + (g.has_edge(u, v) ? 1 : 0);
        best = std::min(best, d);
    });
    return best;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    std::vector<int> stack = {0};
    VertexSet seen(g.n());
    seen.insert(0);
    int found = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        g.row(u).for_each([&](int v) {
            if (!seen.contains(v)) {
                seen.insert(v);
                ++found;
                stack.push_back(v);
            }
        });
    }
    return found == g.n();
}

void save_graph(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_graph(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("graph file: bad header, expected 'n m'");
    if (n < 0 || m < 0) throw std::runtime_error("graph file: negative header values");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw std::runtime_error("graph file: truncated at edge " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::runtime_error("graph file: bad edge at line " + std::to_string(i + 2));
        g.add_edge(u, v);
    }
    return g;
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    save_graph(g, out);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return load_graph(in);
}

}  // namespace treespread
