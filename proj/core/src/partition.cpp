#include "m0n/partition.hpp"

#include <stdexcept>

namespace m0n {

std::vector<Partition4> enumerate_partitions4(const GroundSet& g) {
    const int n = g.n;
    std::vector<Partition4> out;
    out.reserve(stirling2(n, 4));

    // Restricted growth string: label[0] = 0, label[i] <= max(prefix)+1,
    // labels capped at 3. A completed string with max label 3 is exactly a
    // 4-block partition with blocks ordered by minimum element.
    std::vector<int> label(n, 0);
    auto emit = [&] {
        Partition4 p{};
        for (int i = 0; i < n; ++i)
            p.blocks[label[i]].bits |= std::uint32_t{1} << i;
        out.push_back(p);
    };

    auto rec = [&](auto&& self, int pos, int maxl) -> void {
        if (pos == n) {
            if (maxl == 3) emit();
            return;
        }
        if (maxl + (n - pos) < 3) return;  // cannot reach 4 labels anymore
        int cap = maxl + 1 < 3 ? maxl + 1 : 3;
        for (int l = 0; l <= cap; ++l) {
            label[pos] = l;
            self(self, pos + 1, l > maxl ? l : maxl);
        }
    };
    rec(rec, 1, 0);
    return out;
}

std::uint64_t stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

}  // namespace m0n
