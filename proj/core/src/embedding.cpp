#include "treespread/embedding.hpp"

#include <fstream>
#include <stdexcept>

namespace treespread {

bool is_valid_embedding(const Tree& t, const Graph& g, const Embedding& phi) {
    if (static_cast<int>(phi.image.size()) != t.n())
        throw std::invalid_argument("is_valid_embedding: domain size mismatch");
    if (!phi.total())
        throw std::invalid_argument("is_valid_embedding: incomplete embedding");

    VertexSet used(g.n());
    for (int x = 0; x < t.n(); ++x) {
        const int y = phi[x];
        if (y < 0 || y >= g.n()) return false;
        if (used.contains(y)) return false;  // not injective
        used.insert(y);
    }
    for (const auto& [child, parent] : t.edges())
        if (!g.has_edge(phi[child], phi[parent])) return false;
    return true;
}

void save_embedding(const Embedding& e, std::ostream& out) {
    for (int x = 0; x < static_cast<int>(e.image.size()); ++x)
        if (e.mapped(x)) out << x << ' ' << e[x] << '\n';
}

void save_embedding_file(const Embedding& e, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    save_embedding(e, out);
}

}  // namespace treespread
