#include "treespread/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "treespread/rng.hpp"

namespace treespread {

Graph gen_dirac_graph(int n, double delta_frac, double alpha, std::uint64_t seed) {
    if (n < 10) throw std::invalid_argument("gen_dirac_graph: n must be at least 10");
    if (delta_frac <= 0 || alpha < 0)
        throw std::invalid_argument("gen_dirac_graph: fractions must be positive");
    if (delta_frac + alpha >= 1.0)
        throw std::invalid_argument("gen_dirac_graph: infeasible, delta_frac + alpha >= 1");
    const int target = static_cast<int>(std::ceil((delta_frac + alpha) * n));
    if (target > n - 1)
        throw std::invalid_argument("gen_dirac_graph: infeasible, degree target exceeds n-1");

    Rng rng(seed);
    const double p = std::min(1.0, delta_frac + alpha + 0.05);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);

    // Degrees only grow during repair, so one pass in id order suffices.
    for (int u = 0; u < n; ++u) {
        while (g.degree(u) < target) {
            std::vector<int> non_neighbors;
            for (int v = 0; v < n; ++v)
                if (v != u && !g.has_edge(u, v)) non_neighbors.push_back(v);
            g.add_edge(u, rng.pick(non_neighbors));
        }
    }
    return g;
}

Tree gen_bounded_tree(int n, int max_deg, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_bounded_tree: n must be positive");
    if (n >= 3 && max_deg < 2)
        throw std::invalid_argument("gen_bounded_tree: max_deg < 2 is infeasible for n >= 3");
    if (n >= 2 && max_deg < 1)
        throw std::invalid_argument("gen_bounded_tree: max_deg < 1 is infeasible for n >= 2");

    Rng rng(seed);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<int> open;  // vertices with spare degree
    if (n >= 2) open.push_back(0);
    for (int v = 1; v < n; ++v) {
        const int p = rng.pick(open);
        parent[static_cast<std::size_t>(v)] = p;
        if (++degree[static_cast<std::size_t>(p)] == max_deg)
            open.erase(std::find(open.begin(), open.end(), p));
        degree[static_cast<std::size_t>(v)] = 1;
        if (max_deg >= 2) open.push_back(v);
    }
    return Tree(n, 0, std::move(parent));
}

}  // namespace treespread
