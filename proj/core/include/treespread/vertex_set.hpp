#ifndef TREESPREAD_VERTEX_SET_HPP
#define TREESPREAD_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace treespread {

// Fixed-universe bitset over vertex ids [0, universe). Intersection counts
// are popcounts over machine words, which keeps the induced-degree checks
// cheap in the Monte Carlo loops.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe),
          blocks_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

    static VertexSet of(int universe, const std::vector<int>& ids) {
        VertexSet s(universe);
        for (int v : ids) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    void insert(int v) {
        check(v);
        blocks_[static_cast<std::size_t>(v >> 6)] |= (1ULL << (v & 63));
    }

    void erase(int v) {
        check(v);
        blocks_[static_cast<std::size_t>(v >> 6)] &= ~(1ULL << (v & 63));
    }

    bool contains(int v) const {
        if (v < 0 || v >= universe_) return false;
        return (blocks_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1ULL;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t b : blocks_) c += std::popcount(b);
        return c;
    }

    bool empty() const {
        for (std::uint64_t b : blocks_)
            if (b) return false;
        return true;
    }

    int intersection_count(const VertexSet& other) const {
        int c = 0;
        const std::size_t m = std::min(blocks_.size(), other.blocks_.size());
        for (std::size_t i = 0; i < m; ++i)
            c += std::popcount(blocks_[i] & other.blocks_[i]);
        return c;
    }

    bool intersects(const VertexSet& other) const {
        const std::size_t m = std::min(blocks_.size(), other.blocks_.size());
        for (std::size_t i = 0; i < m; ++i)
            if (blocks_[i] & other.blocks_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& other) {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] |= other.blocks_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= other.blocks_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& other) {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= ~other.blocks_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& other) const = default;

    // Index (0-based) of the k-th smallest member.
    int nth(int k) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            std::uint64_t b = blocks_[i];
            const int c = std::popcount(b);
            if (k >= c) {
                k -= c;
                continue;
            }
            while (k > 0) {
                b &= b - 1;
                --k;
            }
            return static_cast<int>(i * 64) + std::countr_zero(b);
        }
        throw std::out_of_range("VertexSet::nth: index past set size");
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            std::uint64_t b = blocks_[i];
            while (b) {
                f(static_cast<int>(i * 64) + std::countr_zero(b));
                b &= b - 1;
            }
        }
    }

private:
    void check(int v) const {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("VertexSet: vertex id out of range");
    }

    int universe_ = 0;
    std::vector<std::uint64_t> blocks_;
};

}  // namespace treespread

#endif  // TREESPREAD_VERTEX_SET_HPP
