#ifndef TREESPREAD_RNG_HPP
#define TREESPREAD_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace treespread {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seeded generator wrapping mt19937_64. Bounded draws and shuffles are
// implemented here (rejection sampling, Fisher-Yates) instead of the
// std distributions so that outputs are identical across standard
// library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform integer in [0, n). n must be positive.
    int below(int n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t residue = (UINT64_MAX % bound + 1) % bound;
        const std::uint64_t limit = UINT64_MAX - residue;
        std::uint64_t r = next();
        while (r > limit) r = next();
        return static_cast<int>(r % bound);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            std::swap(v[static_cast<std::size_t>(i)],
                      v[static_cast<std::size_t>(below(i + 1))]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(static_cast<int>(v.size())))];
    }

    // Deterministic child seed for an independent stream.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
        return splitmix64(master ^ splitmix64(stream + 1));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace treespread

#endif  // TREESPREAD_RNG_HPP
