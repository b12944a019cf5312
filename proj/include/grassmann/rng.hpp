#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace grassmann {

/// splitmix64; sampling helpers with fully specified behavior, so seeded
/// runs reproduce bit-for-bit across standard library implementations.
class SampleRng {
public:
    explicit SampleRng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-enough draw in [0, bound); bound must be positive. The modulo
    /// bias is negligible for verification sampling and keeps draws portable.
    uint64_t below(uint64_t bound) { return next() % bound; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    uint64_t state_;
};

}  // namespace grassmann
