#include "treespread/tree_split.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace treespread {

namespace {

// Rooted view of the not-yet-cut portion of the tree.
struct AliveTree {
    const Tree* tree;
    std::vector<bool> alive;
    std::vector<int> size;  // alive-subtree sizes, refreshed per round

    explicit AliveTree(const Tree& t)
        : tree(&t),
          alive(static_cast<std::size_t>(t.n()), true),
          size(static_cast<std::size_t>(t.n()), 0) {}

    std::vector<int> post_order() const {
        std::vector<int> order, stack{tree->root()};
        order.reserve(alive.size());
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            order.push_back(u);
            for (int c : tree->children(u))
                if (alive[static_cast<std::size_t>(c)]) stack.push_back(c);
        }
        std::reverse(order.begin(), order.end());
        return order;
    }

    void refresh_sizes(const std::vector<int>& post) {
        for (int u : post) {
            int s = 1;
            for (int c : tree->children(u))
                if (alive[static_cast<std::size_t>(c)]) s += size[static_cast<std::size_t>(c)];
            size[static_cast<std::size_t>(u)] = s;
        }
    }

    void collect_subtree(int w, std::vector<int>& out) const {
        std::vector<int> stack{w};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            out.push_back(u);
            for (int c : tree->children(u))
                if (alive[static_cast<std::size_t>(c)]) stack.push_back(c);
        }
    }

    // One piece with size in [lo, 3m], cut greedily at the deepest vertex
    // whose pendant alive-subtree reaches lo; oversized subtrees are
    // trimmed to a bundle of child subtrees around the cut vertex.
    std::vector<int> cut_piece(int lo, int hi3m) {
        const auto post = post_order();
        refresh_sizes(post);
        int w = -1;
        for (int u : post) {
            if (size[static_cast<std::size_t>(u)] >= lo) {
                w = u;
                break;
            }
        }
        if (w < 0) throw std::logic_error("cut_piece: no cut vertex found");

        std::vector<int> piece;
        if (size[static_cast<std::size_t>(w)] <= hi3m) {
            collect_subtree(w, piece);
        } else {
            // All alive child subtrees of w have size < lo here, so the
            // bundle lands in [lo, 2*lo - 1].
            piece.push_back(w);
            int have = 1;
            for (int c : tree->children(w)) {
                if (have >= lo) break;
                if (!alive[static_cast<std::size_t>(c)]) continue;
                collect_subtree(c, piece);
                have += size[static_cast<std::size_t>(c)];
            }
        }
        for (int u : piece)
            if (u != w) alive[static_cast<std::size_t>(u)] = false;
        std::sort(piece.begin(), piece.end());
        return piece;
    }

    std::vector<int> alive_vertices() const {
        std::vector<int> out;
        for (int u = 0; u < tree->n(); ++u)
            if (alive[static_cast<std::size_t>(u)]) out.push_back(u);
        return out;
    }

    int alive_count() const {
        return static_cast<int>(std::count(alive.begin(), alive.end(), true));
    }
};

// Aim the cut above 1.5m (still within the [m, 3m] contract); pieces that
// small would get partition parts too tiny to inherit the degree condition
// at realistic instance sizes.
int cut_lower_bound(int m) { return std::max(2, (3 * m + 1) / 2); }

}  // namespace

std::pair<std::vector<int>, std::vector<int>> split_once(const Tree& t, int anchor, int m) {
    const int n = t.n();
    if (anchor < 0 || anchor >= n) throw std::invalid_argument("split_once: anchor out of range");
    if (m < 1 || 3 * m > n) throw std::invalid_argument("split_once: need 1 <= m <= n/3");

    const Tree rooted = t.rerooted(anchor);
    AliveTree at(rooted);
    const std::vector<int> piece = at.cut_piece(cut_lower_bound(m), 3 * m);
    std::vector<int> rest = at.alive_vertices();
    return {std::move(rest), piece};
}

TreeSplitting tree_splitting(const Tree& t, int m) {
    const int n = t.n();
    if (m < 1 || m > n) throw std::invalid_argument("tree_splitting: need 1 <= m <= n");

    TreeSplitting out;
    out.tree_n = n;
    AliveTree at(t);
    const int lo = cut_lower_bound(m);
    while (at.alive_count() > 4 * m)
        out.pieces.push_back(at.cut_piece(lo, 3 * m));
    out.pieces.push_back(at.alive_vertices());
    return out;
}

Graph bag_graph(const TreeSplitting& s) {
    const int l = s.piece_count();
    Graph g(l);
    std::vector<std::vector<int>> holders(static_cast<std::size_t>(s.tree_n));
    for (int i = 0; i < l; ++i)
        for (int v : s.pieces[static_cast<std::size_t>(i)])
            holders[static_cast<std::size_t>(v)].push_back(i);
    for (const auto& hs : holders)
        for (std::size_t a = 0; a < hs.size(); ++a)
            for (std::size_t b = a + 1; b < hs.size(); ++b) g.add_edge(hs[a], hs[b]);
    return g;
}

std::vector<int> BagTree::bfs_order() const {
    std::vector<int> order{root};
    std::vector<std::vector<int>> children(static_cast<std::size_t>(node_count));
    for (int u = 0; u < node_count; ++u)
        if (u != root) children[static_cast<std::size_t>(parent[static_cast<std::size_t>(u)])].push_back(u);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : children[static_cast<std::size_t>(order[i])]) order.push_back(c);
    return order;
}

int BagTree::degree(int node) const {
    int d = (node == root) ? 0 : 1;
    for (int u = 0; u < node_count; ++u)
        if (u != root && parent[static_cast<std::size_t>(u)] == node) ++d;
    return d;
}

int BagTree::max_degree() const {
    int best = 0;
    for (int u = 0; u < node_count; ++u) best = std::max(best, degree(u));
    return best;
}

BagTree bag_tree(const TreeSplitting& s, int star_anchor) {
    if (star_anchor < 0 || star_anchor >= s.tree_n)
        throw std::invalid_argument("bag_tree: anchor out of range");
    const int l = s.piece_count();
    const Graph bg = bag_graph(s);

    // Adjacency of the augmented graph; node l is the anchor bag.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(l + 1));
    for (int i = 0; i < l; ++i) {
        bg.row(i).for_each([&](int j) { adj[static_cast<std::size_t>(i)].push_back(j); });
        const auto& piece = s.pieces[static_cast<std::size_t>(i)];
        if (std::binary_search(piece.begin(), piece.end(), star_anchor)) {
            adj[static_cast<std::size_t>(i)].push_back(l);
            adj[static_cast<std::size_t>(l)].push_back(i);
        }
    }

    BagTree bt;
    bt.node_count = l + 1;
    bt.root = l;
    bt.parent.assign(static_cast<std::size_t>(l + 1), -2);
    bt.shared_vertex.assign(static_cast<std::size_t>(l + 1), -1);
    bt.parent[static_cast<std::size_t>(l)] = -1;

    // BFS from the anchor bag; lowest node index wins ties.
    std::vector<int> queue{l};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int u = queue[qi];
        auto& nbrs = adj[static_cast<std::size_t>(u)];
        std::sort(nbrs.begin(), nbrs.end());
        for (int w : nbrs) {
            if (bt.parent[static_cast<std::size_t>(w)] != -2) continue;
            bt.parent[static_cast<std::size_t>(w)] = u;
            queue.push_back(w);
        }
    }
    if (static_cast<int>(queue.size()) != l + 1)
        throw std::invalid_argument("bag_tree: bag-graph is disconnected (invalid splitting)");

    for (int u = 0; u < l; ++u) {
        const int p = bt.parent[static_cast<std::size_t>(u)];
        if (p == l) {
            bt.shared_vertex[static_cast<std::size_t>(u)] = star_anchor;
            continue;
        }
        const auto& a = s.pieces[static_cast<std::size_t>(u)];
        const auto& b = s.pieces[static_cast<std::size_t>(p)];
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty()) throw std::logic_error("bag_tree: parent shares no vertex");
        bt.shared_vertex[static_cast<std::size_t>(u)] = common.front();
    }
    return bt;
}

bool validate_splitting(const Tree& t, const TreeSplitting& s, int m, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (s.tree_n != t.n()) return fail("tree size mismatch");
    if (s.pieces.empty()) return fail("no pieces");

    long long edge_total = 0;
    for (int i = 0; i < s.piece_count(); ++i) {
        const auto& piece = s.pieces[static_cast<std::size_t>(i)];
        if (piece.empty()) return fail("empty piece");
        if (!std::is_sorted(piece.begin(), piece.end()) ||
            std::adjacent_find(piece.begin(), piece.end()) != piece.end())
            return fail("piece not sorted/unique");
        for (int v : piece)
            if (v < 0 || v >= t.n()) return fail("piece vertex out of range");
        if (m > 0) {
            const int sz = static_cast<int>(piece.size());
            if (sz < m || sz > 4 * m) return fail("piece size outside [m, 4m]");
        }
        // Piece must induce a connected subtree.
        try {
            induced_subtree(t, piece, piece.front());
        } catch (const std::exception&) {
            return fail("piece does not induce a subtree");
        }
        edge_total += static_cast<long long>(piece.size()) - 1;
    }
    if (edge_total != t.n() - 1) return fail("piece edges do not sum to n-1");

    // Every tree edge covered exactly once, every pairwise overlap <= 1.
    std::map<std::pair<int, int>, int> edge_cover;
    std::map<std::pair<int, int>, int> overlap;
    std::vector<std::vector<int>> holders(static_cast<std::size_t>(t.n()));
    for (int i = 0; i < s.piece_count(); ++i) {
        const auto& piece = s.pieces[static_cast<std::size_t>(i)];
        VertexSet in_piece = VertexSet::of(t.n(), piece);
        for (int v : piece) {
            holders[static_cast<std::size_t>(v)].push_back(i);
            const int p = t.parent(v);
            if (p >= 0 && in_piece.contains(p)) ++edge_cover[{std::min(v, p), std::max(v, p)}];
        }
    }
    for (const auto& [child, parent] : t.edges()) {
        const auto it = edge_cover.find({std::min(child, parent), std::max(child, parent)});
        if (it == edge_cover.end()) return fail("tree edge not covered");
        if (it->second != 1) return fail("tree edge covered more than once");
    }
    for (const auto& hs : holders)
        for (std::size_t a = 0; a < hs.size(); ++a)
            for (std::size_t b = a + 1; b < hs.size(); ++b)
                if (++overlap[{hs[a], hs[b]}] > 1) return fail("pieces share two vertices");
    return true;
}

std::pair<Tree, std::vector<int>> induced_subtree(const Tree& t,
                                                  const std::vector<int>& vertices,
                                                  int root_global) {
    std::vector<int> local_to_global = vertices;
    std::sort(local_to_global.begin(), local_to_global.end());
    const int k = static_cast<int>(local_to_global.size());
    std::map<int, int> to_local;
    for (int i = 0; i < k; ++i) to_local[local_to_global[static_cast<std::size_t>(i)]] = i;
    if (!to_local.count(root_global))
        throw std::invalid_argument("induced_subtree: root not among vertices");

    // BFS over tree adjacency restricted to the vertex set.
    std::vector<int> parent(static_cast<std::size_t>(k), -1);
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    std::vector<int> queue{to_local[root_global]};
    seen[static_cast<std::size_t>(queue[0])] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int lu = queue[qi];
        const int gu = local_to_global[static_cast<std::size_t>(lu)];
        auto visit = [&](int gv) {
            const auto it = to_local.find(gv);
            if (it == to_local.end()) return;
            const int lv = it->second;
            if (seen[static_cast<std::size_t>(lv)]) return;
            seen[static_cast<std::size_t>(lv)] = true;
            parent[static_cast<std::size_t>(lv)] = lu;
            queue.push_back(lv);
        };
        if (t.parent(gu) >= 0) visit(t.parent(gu));
        for (int gc : t.children(gu)) visit(gc);
    }
    if (static_cast<int>(queue.size()) != k)
        throw std::invalid_argument("induced_subtree: vertex set is not connected in the tree");
    return {Tree(k, to_local[root_global], std::move(parent)), std::move(local_to_global)};
}

void save_splitting(const TreeSplitting& s, std::ostream& out) {
    for (const auto& piece : s.pieces) {
        for (std::size_t i = 0; i < piece.size(); ++i)
            out << piece[i] << (i + 1 < piece.size() ? ' ' : '\n');
    }
}

void save_bag_tree(const BagTree& bt, std::ostream& out) {
    for (int u = 0; u < bt.node_count; ++u)
        out << u << ' ' << bt.parent[static_cast<std::size_t>(u)] << ' '
            << bt.shared_vertex[static_cast<std::size_t>(u)] << '\n';
}

}  // namespace treespread
