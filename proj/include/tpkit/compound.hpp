#ifndef TPKIT_COMPOUND_HPP
#define TPKIT_COMPOUND_HPP

#include <utility>
#include <vector>

#include "tpkit/matrix.hpp"

namespace tpkit {

// Lexicographic enumeration of the k-subsets indexing C_k(A).
class CompoundIndexMap {
public:
    CompoundIndexMap(int m, int n, int k);

    int k() const { return k_; }
    const std::vector<IndexSet>& rowSets() const { return rowSets_; }
    const std::vector<IndexSet>& colSets() const { return colSets_; }

    // 1-based positions of (rowSet, colSet) in the lexicographic order.
    std::pair<int, int> entryIndex(const IndexSet& rowSet, const IndexSet& colSet) const;

private:
    int k_;
    std::vector<IndexSet> rowSets_;
    std::vector<IndexSet> colSets_;
};

// All k-subsets of [1, n] in lexicographic order.
std::vector<IndexSet> lexSubsets(int n, int k);

// k-th compound C_k(A): entry (pos(alpha), pos(beta)) = det A[alpha, beta].
// Guarded at m, n <= 16 unless allowLarge is set.
ExactMatrix compound(const ExactMatrix& a, int k, bool allowLarge = false);

} // namespace tpkit

#endif
