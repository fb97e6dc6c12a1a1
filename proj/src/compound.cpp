#include "tpkit/compound.hpp"

#include <string>

namespace tpkit {

std::vector<IndexSet> lexSubsets(int n, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(cur, n);
        // next k-combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

CompoundIndexMap::CompoundIndexMap(int m, int n, int k)
    : k_(k), rowSets_(lexSubsets(m, k)), colSets_(lexSubsets(n, k)) {
    if (k < 1 || k > std::min(m, n)) throw InvalidOrder("compound order out of range");
}

std::pair<int, int> CompoundIndexMap::entryIndex(const IndexSet& rowSet,
                                                 const IndexSet& colSet) const {
    if (rowSet.size() != k_ || colSet.size() != k_) {
        throw ShapeError("index set cardinality does not match compound order");
    }
    auto find = [](const std::vector<IndexSet>& sets, const IndexSet& s) {
        for (size_t p = 0; p < sets.size(); ++p) {
            if (sets[p].indices() == s.indices()) return static_cast<int>(p) + 1;
        }
        throw InvalidIndex("index set not found in compound enumeration");
    };
    return {find(rowSets_, rowSet), find(colSets_, colSet)};
}

ExactMatrix compound(const ExactMatrix& a, int k, bool allowLarge) {
    if (k < 1 || k > std::min(a.rows(), a.cols())) {
        throw InvalidOrder("compound order " + std::to_string(k) + " out of range");
    }
    if (!allowLarge && (a.rows() > 16 || a.cols() > 16)) {
        throw InvalidOrder("matrix larger than 16; pass allowLarge to override");
    }
    CompoundIndexMap map(a.rows(), a.cols(), k);
    const auto& rs = map.rowSets();
    const auto& cs = map.colSets();
    ExactMatrix out(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j)
            out.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) =
                minorOf(a, rs[i], cs[j]);
    return out;
}

} // namespace tpkit
