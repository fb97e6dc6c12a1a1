#ifndef TPKIT_NETFACT_HPP
#define TPKIT_NETFACT_HPP

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "tpkit/matrix.hpp"

namespace tpkit {

// Parameters of the bidiagonal factorization
//   A = (L_2(l_1)) (L_3(l_2) L_2(l_3)) ... (L_n(...) ... L_2(l_K))
//       . D . (U_2(u_K) ... U_n(...)) ... (U_2(u_3) U_3(u_2)) (U_2(u_1))
// with K = C(n,2). Lower group g (g = 1..n-1) holds factors
// L_{g+1}, L_g, ..., L_2 at indices g(g-1)/2 + 1 .. g(g-1)/2 + g; the
// upper groups mirror the same index layout (group g reads
// U_2(u_{off+g}) ... U_{g+1}(u_{off+1}) left to right).
struct BidiagonalParam {
    int position; // subscript of L_position / U_position, in [2, n]
    Rational value;
};

struct FactorizationParams {
    int n;
    std::vector<BidiagonalParam> lowers;
    std::vector<BidiagonalParam> uppers;
    std::vector<Rational> diag;

    void validate() const;
};

// 0-based offset of group g within the parameter lists.
inline int groupOffset(int g) { return g * (g - 1) / 2; }

// I + v E_{i,i-1}  /  I + v E_{j-1,j}.
ExactMatrix elementaryLower(int n, int i, const Rational& v);
ExactMatrix elementaryUpper(int n, int j, const Rational& v);

// The exact product in the factorization's factor order.
ExactMatrix assemble(const FactorizationParams& params);

// Inverse of assemble for nonsingular TN matrices: LDU split followed by
// group peeling of the unipotent factors (Neville elimination).
FactorizationParams factorize(const ExactMatrix& a);

// Certified-TP matrix from uniformly drawn positive rational parameters.
ExactMatrix generateTP(int n, std::uint64_t seed, std::uint64_t magnitude);
FactorizationParams generateTPParams(int n, std::uint64_t seed, std::uint64_t magnitude);
// TN variant: each l/u parameter is zeroed with probability 1/4.
FactorizationParams generateTNParams(int n, std::uint64_t seed, std::uint64_t magnitude);

// Planar network in the bidiagonal-factorization layout: a sequence of
// single-edge stages (one falling edge on the left half, one rising edge
// on the right half) around the diagonal stage.
struct LowerEdge {
    int level; // edge drops from `level` to `level - 1`
    Rational weight;
};
struct UpperEdge {
    int level; // edge rises from `level - 1` to `level`
    Rational weight;
};
struct DiagonalStage {
    std::vector<Rational> weights;
};
using NetworkStage = std::variant<LowerEdge, DiagonalStage, UpperEdge>;

struct PlanarNetwork {
    int n;
    std::vector<NetworkStage> stages;
};

PlanarNetwork networkFromParams(const FactorizationParams& params);

// Sum over vertex-disjoint path families joining sources rowSet to sinks
// colSet of the product of edge weights (Lindstrom's lemma); equals
// det assemble(params)[rowSet, colSet]. Exhaustive backtracking, guard n <= 7.
Rational lindstromMinor(const PlanarNetwork& net, const IndexSet& rowSet,
                        const IndexSet& colSet);

// The twelve labelled top-part edge weights of the Theorem-A network.
struct SMatrixParams {
    int n = 4;
    Rational a = 1, b = 1, c = 1, d = 1, e = 1, f = 1;
    Rational g = 1, h = 1, i = 1, j = 1, k = 1, l = 1;
    // Weight for every unlabelled diagonal edge (the dotted middle).
    Rational fillValue = 1;
    // Diagonal factor; empty means identity.
    std::vector<Rational> diag;
};

// Factorization parameters realizing the labelled network; callers may
// perturb the non-top-part entries before assembling.
FactorizationParams sMatrixFactorization(const SMatrixParams& p);

// 1-based (lowerIndices, upperIndices) of the twelve labelled parameters,
// in the order a,b,c,d,e,f / l,k,j,i,h,g... see implementation.
struct TopPartIndices {
    int a, b, c, d, e, f; // lower side
    int i, h, g, k, j, l; // upper side
};
TopPartIndices topPartIndices(int n);

// The 4x4 matrix S = (det A[S_i, S_j]) from the leading principal block of
// C_{n-2}(A), plus the full network matrix A.
std::pair<ExactMatrix, ExactMatrix> buildSMatrix(const SMatrixParams& p);
ExactMatrix extractSMatrix(const ExactMatrix& a);

// The four size-(n-2) index sets S_1..S_4.
std::vector<IndexSet> sMatrixIndexSets(int n);

} // namespace tpkit

#endif
