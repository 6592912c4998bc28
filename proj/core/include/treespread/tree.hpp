#ifndef TREESPREAD_TREE_HPP
#define TREESPREAD_TREE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace treespread {

// Rooted tree on vertex ids [0, n), stored as a parent map. The parent
// array is validated to induce exactly n-1 edges with no cycles.
class Tree {
public:
    Tree() = default;
    Tree(int n, int root, std::vector<int> parent);

    static Tree path(int n);        // 0-1-2-...-(n-1), rooted at 0
    static Tree star(int leaves);   // center 0 with `leaves` leaves

    int n() const { return n_; }
    int root() const { return root_; }
    int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& children(int v) const {
        return children_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const;
    int max_degree() const;
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // (child, parent) pairs

    // Vertices in breadth-first order starting at the root.
    std::vector<int> bfs_order() const;

    // Same tree re-rooted at new_root.
    Tree rerooted(int new_root) const;

private:
    int n_ = 0;
    int root_ = 0;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
};

// File format: header "n root" then n-1 lines "child parent".
void save_tree(const Tree& t, std::ostream& out);
Tree load_tree(std::istream& in);
void save_tree_file(const Tree& t, const std::string& path);
Tree load_tree_file(const std::string& path);

}  // namespace treespread

#endif  // TREESPREAD_TREE_HPP
