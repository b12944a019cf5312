#include "grassmann/cliques.hpp"

#include <algorithm>
#include <bit>

namespace grassmann::graphs {

namespace {

struct BkState {
    const Graph* g;
    int words;
    long long nodes = 0;
    long long node_limit;
    int min_size;
    std::vector<int> r;
    std::vector<std::vector<int>> out;

    int popcount(const std::vector<uint64_t>& s) const {
        int c = 0;
        for (uint64_t w : s) c += std::popcount(w);
        return c;
    }

    void expand(std::vector<uint64_t> p, std::vector<uint64_t> x) {
        if (++nodes > node_limit) throw CliqueExplosionError("max_cliques: search tree too large");

        const int pcount = popcount(p);
        if (static_cast<int>(r.size()) + pcount < min_size) return;
        bool p_empty = pcount == 0;
        bool x_empty = true;
        for (uint64_t w : x)
            if (w) {
                x_empty = false;
                break;
            }
        if (p_empty && x_empty) {
            out.push_back(r);
            return;
        }
        if (p_empty) return;

        // Pivot: maximize |P cap N(u)| over u in P union X, lowest index wins.
        int pivot = -1, best = -1;
        for (int pass = 0; pass < 2; ++pass) {
            const std::vector<uint64_t>& s = pass == 0 ? p : x;
            for (int w = 0; w < words; ++w) {
                uint64_t bits = s[static_cast<size_t>(w)];
                while (bits) {
                    const int u = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const uint64_t* ru = g->row(u);
                    int c = 0;
                    for (int ww = 0; ww < words; ++ww)
                        c += std::popcount(p[static_cast<size_t>(ww)] & ru[ww]);
                    if (c > best) {
                        best = c;
                        pivot = u;
                    }
                }
            }
        }

        std::vector<int> candidates;
        const uint64_t* rp = g->row(pivot);
        for (int w = 0; w < words; ++w) {
            uint64_t bits = p[static_cast<size_t>(w)] & ~rp[w];
            while (bits) {
                candidates.push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }

        std::vector<uint64_t> np(static_cast<size_t>(words)), nx(static_cast<size_t>(words));
        for (int v : candidates) {
            const uint64_t* rv = g->row(v);
            for (int w = 0; w < words; ++w) {
                np[static_cast<size_t>(w)] = p[static_cast<size_t>(w)] & rv[w];
                nx[static_cast<size_t>(w)] = x[static_cast<size_t>(w)] & rv[w];
            }
            r.push_back(v);
            expand(np, nx);
            r.pop_back();
            p[static_cast<size_t>(v) >> 6] &= ~(uint64_t(1) << (v & 63));
            x[static_cast<size_t>(v) >> 6] |= uint64_t(1) << (v & 63);
        }
    }
};

}  // namespace

std::vector<std::vector<int>> max_cliques(const Graph& g, int min_size, long long node_limit) {
    BkState st;
    st.g = &g;
    st.words = g.words();
    st.node_limit = node_limit;
    st.min_size = std::max(min_size, 1);

    std::vector<uint64_t> p(static_cast<size_t>(g.words()), 0);
    for (int v = 0; v < g.size(); ++v)
        p[static_cast<size_t>(v) >> 6] |= uint64_t(1) << (v & 63);
    std::vector<uint64_t> x(static_cast<size_t>(g.words()), 0);

    st.expand(std::move(p), std::move(x));
    for (auto& c : st.out) std::sort(c.begin(), c.end());
    std::sort(st.out.begin(), st.out.end());
    return st.out;
}

}  // namespace grassmann::graphs
