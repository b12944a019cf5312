#include "grassmann/subspaces.hpp"

#include "grassmann/qanalog.hpp"

namespace grassmann::graphs {

namespace {

constexpr long long kSubspaceLimit = 1'000'000;

struct FreeSlot {
    int row, col;
};

}  // namespace

std::vector<Subspace> enumerate_subspaces(int n, int D, const gf::Field& field) {
    const int q = field.order();
    if (n < 1 || n > 12 || D < 0 || D > n)
        throw TooLargeError("enumerate_subspaces: need 0 <= D <= n <= 12");
    const exact::BigInt count = exact::gaussian_binomial(n, D, q);
    if (count > kSubspaceLimit) throw TooLargeError("enumerate_subspaces: too large");

    std::vector<Subspace> out;
    out.reserve(static_cast<size_t>(count));

    if (D == 0) {
        out.push_back(Subspace{0, n, gf::Matrix(0, n)});
        return out;
    }

    // Pivot columns in lexicographic order.
    std::vector<int> pivots(static_cast<size_t>(D));
    for (int i = 0; i < D; ++i) pivots[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<bool> is_pivot(static_cast<size_t>(n), false);
        for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
        std::vector<FreeSlot> free_slots;
        for (int r = 0; r < D; ++r)
            for (int c = pivots[static_cast<size_t>(r)] + 1; c < n; ++c)
                if (!is_pivot[static_cast<size_t>(c)]) free_slots.push_back({r, c});

        gf::Matrix base(D, n);
        for (int r = 0; r < D; ++r) base.at(r, pivots[static_cast<size_t>(r)]) = 1;

        std::vector<uint8_t> vals(free_slots.size(), 0);
        while (true) {
            gf::Matrix m = base;
            for (size_t i = 0; i < free_slots.size(); ++i)
                m.at(free_slots[i].row, free_slots[i].col) = vals[i];
            out.push_back(Subspace{D, n, std::move(m)});

            // Odometer with the last slot varying fastest.
            bool advanced = false;
            for (size_t i = free_slots.size(); i-- > 0;) {
                if (++vals[i] < q) {
                    advanced = true;
                    break;
                }
                vals[i] = 0;
            }
            if (!advanced) break;
        }

        // Next pivot combination.
        int i = D - 1;
        while (i >= 0 && pivots[static_cast<size_t>(i)] == n - D + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<size_t>(i)];
        for (int j = i + 1; j < D; ++j)
            pivots[static_cast<size_t>(j)] = pivots[static_cast<size_t>(j - 1)] + 1;
    }

    if (exact::BigInt(out.size()) != count)
        throw std::logic_error("enumerate_subspaces: count mismatch");
    return out;
}

Graph grassmann_graph(int n, int D, int q) {
    const gf::Field field = gf::Field::make(q);
    const std::vector<Subspace> spaces = enumerate_subspaces(n, D, field);
    const int v = static_cast<int>(spaces.size());
    Graph g(v);

    gf::Matrix stacked(2 * D, n);
    for (int i = 0; i < v; ++i) {
        for (int j = i + 1; j < v; ++j) {
            for (int r = 0; r < D; ++r)
                for (int c = 0; c < n; ++c) {
                    stacked.at(r, c) = spaces[static_cast<size_t>(i)].basis.at(r, c);
                    stacked.at(D + r, c) = spaces[static_cast<size_t>(j)].basis.at(r, c);
                }
            if (gf::rank(stacked, field) == D + 1) g.add_edge(i, j);
        }
    }
    return g;
}

}  // namespace grassmann::graphs
