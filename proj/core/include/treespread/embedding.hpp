#ifndef TREESPREAD_EMBEDDING_HPP
#define TREESPREAD_EMBEDDING_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "treespread/graph.hpp"
#include "treespread/tree.hpp"

namespace treespread {

// Partial injection from tree vertices to graph vertices; -1 = unmapped.
struct Embedding {
    std::vector<int> image;

    Embedding() = default;
    explicit Embedding(int domain_size)
        : image(static_cast<std::size_t>(domain_size), -1) {}

    int operator[](int x) const { return image[static_cast<std::size_t>(x)]; }
    void set(int x, int y) { image[static_cast<std::size_t>(x)] = y; }
    bool mapped(int x) const { return image[static_cast<std::size_t>(x)] >= 0; }

    bool total() const {
        for (int y : image)
            if (y < 0) return false;
        return true;
    }

    bool operator==(const Embedding& other) const = default;
};

// True iff phi is injective and every tree edge maps to a graph edge.
// Throws if phi is not total on V(t).
bool is_valid_embedding(const Tree& t, const Graph& g, const Embedding& phi);

// File format: one line "tree_vertex graph_vertex" per mapped vertex.
void save_embedding(const Embedding& e, std::ostream& out);
void save_embedding_file(const Embedding& e, const std::string& path);

}  // namespace treespread

#endif  // TREESPREAD_EMBEDDING_HPP
