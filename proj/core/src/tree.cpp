#include "treespread/tree.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace treespread {

Tree::Tree(int n, int root, std::vector<int> parent)
    : n_(n), root_(root), parent_(std::move(parent)) {
    if (n <= 0) throw std::invalid_argument("Tree: vertex count must be positive");
    if (root < 0 || root >= n) throw std::invalid_argument("Tree: root out of range");
    if (static_cast<int>(parent_.size()) != n)
        throw std::invalid_argument("Tree: parent array size mismatch");
    if (parent_[static_cast<std::size_t>(root)] != -1)
        throw std::invalid_argument("Tree: root must have parent -1");

    children_.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        const int p = parent_[static_cast<std::size_t>(v)];
        if (p < 0 || p >= n || p == v)
            throw std::invalid_argument("Tree: bad parent for vertex " + std::to_string(v));
        children_[static_cast<std::size_t>(p)].push_back(v);
    }
    // Reject parent cycles: every vertex must reach the root.
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    depth[static_cast<std::size_t>(root)] = 0;
    for (int v = 0; v < n; ++v) {
        std::vector<int> chain;
        int u = v;
        while (depth[static_cast<std::size_t>(u)] == -1) {
            chain.push_back(u);
            u = parent_[static_cast<std::size_t>(u)];
            if (static_cast<int>(chain.size()) > n)
                throw std::invalid_argument("Tree: parent array contains a cycle");
        }
        int d = depth[static_cast<std::size_t>(u)];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            depth[static_cast<std::size_t>(*it)] = ++d;
    }
}

Tree Tree::path(int n) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    parent[0] = -1;
    for (int v = 1; v < n; ++v) parent[static_cast<std::size_t>(v)] = v - 1;
    return Tree(n, 0, std::move(parent));
}

Tree Tree::star(int leaves) {
    const int n = leaves + 1;
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    parent[0] = -1;
    return Tree(n, 0, std::move(parent));
}

int Tree::degree(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Tree: vertex out of range");
    return static_cast<int>(children_[static_cast<std::size_t>(v)].size()) +
           (v == root_ ? 0 : 1);
}

int Tree::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

bool Tree::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return parent_[static_cast<std::size_t>(u)] == v ||
           parent_[static_cast<std::size_t>(v)] == u;
}

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n_ - 1));
    for (int v = 0; v < n_; ++v)
        if (v != root_) out.emplace_back(v, parent_[static_cast<std::size_t>(v)]);
    return out;
}

std::vector<int> Tree::bfs_order() const {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    order.push_back(root_);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : children(order[i])) order.push_back(c);
    return order;
}

Tree Tree::rerooted(int new_root) const {
    if (new_root < 0 || new_root >= n_)
        throw std::out_of_range("Tree::rerooted: vertex out of range");
    if (new_root == root_) return *this;
    std::vector<int> parent(static_cast<std::size_t>(n_), -2);
    // Flip parent pointers along the new_root -> old root chain.
    int u = new_root, prev = -1;
    while (u != -1) {
        parent[static_cast<std::size_t>(u)] = prev;
        prev = u;
        u = parent_[static_cast<std::size_t>(u)];
    }
    for (int v = 0; v < n_; ++v)
        if (parent[static_cast<std::size_t>(v)] == -2)
            parent[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(v)];
    return Tree(n_, new_root, std::move(parent));
}

void save_tree(const Tree& t, std::ostream& out) {
    out << t.n() << ' ' << t.root() << '\n';
    for (const auto& [child, parent] : t.edges()) out << child << ' ' << parent << '\n';
}

Tree load_tree(std::istream& in) {
    int n = 0, root = 0;
    if (!(in >> n >> root)) throw std::runtime_error("tree file: bad header, expected 'n root'");
    if (n <= 0 || root < 0 || root >= n) throw std::runtime_error("tree file: bad header values");
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[static_cast<std::size_t>(root)] = true;
    for (int i = 0; i < n - 1; ++i) {
        int child = 0, par = 0;
        if (!(in >> child >> par))
            throw std::runtime_error("tree file: truncated at line " + std::to_string(i + 2));
        if (child < 0 || child >= n || par < 0 || par >= n || child == root ||
            seen[static_cast<std::size_t>(child)])
            throw std::runtime_error("tree file: bad edge at line " + std::to_string(i + 2));
        seen[static_cast<std::size_t>(child)] = true;
        parent[static_cast<std::size_t>(child)] = par;
    }
    return Tree(n, root, std::move(parent));
}

void save_tree_file(const Tree& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    save_tree(t, out);
}

Tree load_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return load_tree(in);
}

}  // namespace treespread
