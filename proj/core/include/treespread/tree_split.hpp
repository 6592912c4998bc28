#ifndef TREESPREAD_TREE_SPLIT_HPP
#define TREESPREAD_TREE_SPLIT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "treespread/graph.hpp"
#include "treespread/tree.hpp"

namespace treespread {

// Family of edge-disjoint subtrees covering E(T); any two pieces share at
// most one vertex. Pieces are sorted vertex-id lists.
struct TreeSplitting {
    int tree_n = 0;
    std::vector<std::vector<int>> pieces;

    int piece_count() const { return static_cast<int>(pieces.size()); }
};

// Splits T into edge-disjoint trees (T1, T2) with anchor in T1 and
// m <= |T2| <= 3m. Requires 1 <= m <= n/3.
std::pair<std::vector<int>, std::vector<int>> split_once(const Tree& t, int anchor, int m);

// Splits T into edge-disjoint subtrees, every piece of size in [m, 4m].
// Requires 1 <= m <= n. The anchor is t's root; it ends up in the last piece.
TreeSplitting tree_splitting(const Tree& t, int m);

// Intersection graph of the pieces: nodes [0, piece_count), i ~ j iff the
// pieces share a vertex.
Graph bag_graph(const TreeSplitting& s);

// Spanning tree of the bag-graph augmented with a singleton node for the
// anchor, rooted at that node. Node ids [0, l) are pieces, node l is the
// anchor bag. shared_vertex[i] is the tree vertex a node shares with its
// parent (-1 at the root).
struct BagTree {
    int node_count = 0;
    int root = 0;
    std::vector<int> parent;
    std::vector<int> shared_vertex;

    std::vector<int> bfs_order() const;
    int degree(int node) const;
    int max_degree() const;
};

BagTree bag_tree(const TreeSplitting& s, int star_anchor);

// Checks all TreeSplitting invariants plus the [m, 4m] size window
// (window skipped when m == 0). On failure optionally reports why.
bool validate_splitting(const Tree& t, const TreeSplitting& s, int m,
                        std::string* why = nullptr);

// Local copy of the subtree induced by `vertices`, re-rooted at
// root_global. Returns the tree over local ids plus local -> global map.
std::pair<Tree, std::vector<int>> induced_subtree(const Tree& t,
                                                  const std::vector<int>& vertices,
                                                  int root_global);

// One line per piece listing vertex ids.
void save_splitting(const TreeSplitting& s, std::ostream& out);
// One line per node: "node parent shared_vertex" (-1s at the root).
void save_bag_tree(const BagTree& bt, std::ostream& out);

}  // namespace treespread

#endif  // TREESPREAD_TREE_SPLIT_HPP
