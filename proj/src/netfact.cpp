#include "tpkit/netfact.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tpkit/positivity.hpp"
#include "tpkit/rng.hpp"

namespace tpkit {

void FactorizationParams::validate() const {
    if (n < 1) throw ShapeError("factorization order must be positive");
    const int k = n * (n - 1) / 2;
    if (static_cast<int>(lowers.size()) != k || static_cast<int>(uppers.size()) != k) {
        throw ShapeError("parameter list length must be C(n,2)");
    }
    if (static_cast<int>(diag.size()) != n) {
        throw ShapeError("diagonal length must be n");
    }
    for (int g = 1; g <= n - 1; ++g) {
        for (int s = 1; s <= g; ++s) {
            int expected = g + 2 - s; // L_{g+1}, L_g, ..., L_2
            const auto& lo = lowers[static_cast<size_t>(groupOffset(g) + s - 1)];
            const auto& up = uppers[static_cast<size_t>(groupOffset(g) + s - 1)];
            if (lo.position != expected || up.position != expected) {
                throw ShapeError("parameter positions do not follow the factor order");
            }
            if (lo.value < 0 || up.value < 0) {
                throw DomainError("bidiagonal parameters must be nonnegative");
            }
        }
    }
    for (const Rational& d : diag) {
        if (d <= 0) throw DomainError("diagonal entries must be positive");
    }
}

ExactMatrix elementaryLower(int n, int i, const Rational& v) {
    if (i < 2 || i > n) throw InvalidIndex("elementary lower position out of range");
    ExactMatrix m = ExactMatrix::identity(n);
    m.at(i, i - 1) = v;
    return m;
}

ExactMatrix elementaryUpper(int n, int j, const Rational& v) {
    if (j < 2 || j > n) throw InvalidIndex("elementary upper position out of range");
    ExactMatrix m = ExactMatrix::identity(n);
    m.at(j - 1, j) = v;
    return m;
}

ExactMatrix assemble(const FactorizationParams& params) {
    params.validate();
    const int n = params.n;
    ExactMatrix out = ExactMatrix::identity(n);
    for (int g = 1; g <= n - 1; ++g) {
        for (int s = 1; s <= g; ++s) {
            const auto& p = params.lowers[static_cast<size_t>(groupOffset(g) + s - 1)];
            out = out * elementaryLower(n, p.position, p.value);
        }
    }
    ExactMatrix d(n, n);
    for (int i = 1; i <= n; ++i) d.at(i, i) = params.diag[static_cast<size_t>(i - 1)];
    out = out * d;
    for (int g = n - 1; g >= 1; --g) {
        // group g reads U_2(u_{off+g}) U_3(u_{off+g-1}) ... U_{g+1}(u_{off+1})
        for (int s = g; s >= 1; --s) {
            const auto& p = params.uppers[static_cast<size_t>(groupOffset(g) + s - 1)];
            out = out * elementaryUpper(n, p.position, p.value);
        }
    }
    return out;
}

namespace {

// Peels the group parameters out of a unipotent lower-triangular TN factor,
// rightmost group first. Row t of the residual determines group t-1.
std::vector<BidiagonalParam> peelUnipotent(ExactMatrix l) {
    const int n = l.rows();
    std::vector<BidiagonalParam> out(static_cast<size_t>(n * (n - 1) / 2));
    for (int t = n; t >= 2; --t) {
        const int off = groupOffset(t - 1);
        std::vector<Rational> x(static_cast<size_t>(t + 1)); // x[2..t]
        for (int j = t - 1; j >= 1; --j) {
            const Rational& denom = l.at(t, j + 1);
            const Rational& numer = l.at(t, j);
            if (denom == 0) {
                if (numer != 0) {
                    throw ConsistencyError("unipotent factor is not TN-structured");
                }
                x[static_cast<size_t>(j + 1)] = 0;
            } else {
                x[static_cast<size_t>(j + 1)] = numer / denom;
            }
            if (x[static_cast<size_t>(j + 1)] < 0) {
                throw ConsistencyError("negative bidiagonal parameter; input not TN");
            }
            out[static_cast<size_t>(off + t - j - 1)] = {j + 1,
                                                         x[static_cast<size_t>(j + 1)]};
        }
        // residual <- residual * (L_t(x_t) ... L_2(x_2))^{-1}
        for (int m = 2; m <= t; ++m) {
            const Rational& v = x[static_cast<size_t>(m)];
            if (v == 0) continue;
            for (int r = 1; r <= n; ++r) l.at(r, m - 1) -= v * l.at(r, m);
        }
        for (int j = 1; j < t; ++j) {
            if (l.at(t, j) != 0) {
                throw ConsistencyError("group peel left a nonzero residual");
            }
        }
    }
    if (!(l == ExactMatrix::identity(n))) {
        throw ConsistencyError("peeling did not reduce the unipotent factor to I");
    }
    return out;
}

} // namespace

FactorizationParams factorize(const ExactMatrix& a) {
    if (!a.isSquare()) throw ShapeError("factorization requires a square matrix");
    const int n = a.rows();
    if (determinant(a) == 0) throw DomainError("matrix is singular");
    if (!isTNk(a, n).holds) throw DomainError("matrix is not totally nonnegative");

    // LDU without pivoting; leading principal minors of a nonsingular TN
    // matrix are positive, so the pivots never vanish.
    ExactMatrix m = a;
    ExactMatrix lower = ExactMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        if (m.at(k, k) == 0) throw DomainError("zero pivot; input not nonsingular TN");
        for (int i = k + 1; i <= n; ++i) {
            Rational mult = m.at(i, k) / m.at(k, k);
            lower.at(i, k) = mult;
            for (int j = k; j <= n; ++j) m.at(i, j) -= mult * m.at(k, j);
        }
    }
    FactorizationParams params;
    params.n = n;
    params.diag.resize(static_cast<size_t>(n));
    ExactMatrix upperT = ExactMatrix::identity(n);
    for (int i = 1; i <= n; ++i) {
        params.diag[static_cast<size_t>(i - 1)] = m.at(i, i);
        for (int j = i + 1; j <= n; ++j) upperT.at(j, i) = m.at(i, j) / m.at(i, i);
    }
    params.lowers = peelUnipotent(lower);
    params.uppers = peelUnipotent(upperT);
    params.validate();
    return params;
}

FactorizationParams generateTPParams(int n, std::uint64_t seed, std::uint64_t magnitude) {
    if (n < 1) throw ShapeError("order must be positive");
    if (magnitude < 1) throw DomainError("magnitude must be positive");
    SplitMix64 rng(seed);
    FactorizationParams params;
    params.n = n;
    const int k = n * (n - 1) / 2;
    params.lowers.resize(static_cast<size_t>(k));
    params.uppers.resize(static_cast<size_t>(k));
    for (int g = 1; g <= n - 1; ++g) {
        for (int s = 1; s <= g; ++s) {
            params.lowers[static_cast<size_t>(groupOffset(g) + s - 1)].position = g + 2 - s;
            params.uppers[static_cast<size_t>(groupOffset(g) + s - 1)].position = g + 2 - s;
        }
    }
    for (auto& p : params.lowers) p.value = rng.nextPositiveRational(magnitude);
    for (auto& p : params.uppers) p.value = rng.nextPositiveRational(magnitude);
    for (int i = 0; i < n; ++i) params.diag.push_back(rng.nextPositiveRational(magnitude));
    params.validate();
    return params;
}

FactorizationParams generateTNParams(int n, std::uint64_t seed, std::uint64_t magnitude) {
    FactorizationParams params = generateTPParams(n, seed, magnitude);
    // Re-draw with a zeroing coin after each value; one extra draw per
    // off-diagonal parameter keeps the stream layout documented and simple.
    SplitMix64 stream(seed);
    for (auto& p : params.lowers) {
        p.value = stream.nextPositiveRational(magnitude);
        if (stream.next() % 4 == 0) p.value = 0;
    }
    for (auto& p : params.uppers) {
        p.value = stream.nextPositiveRational(magnitude);
        if (stream.next() % 4 == 0) p.value = 0;
    }
    for (auto& d : params.diag) d = stream.nextPositiveRational(magnitude);
    params.validate();
    return params;
}

ExactMatrix generateTP(int n, std::uint64_t seed, std::uint64_t magnitude) {
    ExactMatrix out = assemble(generateTPParams(n, seed, magnitude));
#ifndef NDEBUG
    if (!isTPk(out, n).holds) {
        throw ConsistencyError("generated matrix failed the TP certification");
    }
#endif
    return out;
}

PlanarNetwork networkFromParams(const FactorizationParams& params) {
    params.validate();
    PlanarNetwork net{params.n, {}};
    for (int g = 1; g <= params.n - 1; ++g) {
        for (int s = 1; s <= g; ++s) {
            const auto& p = params.lowers[static_cast<size_t>(groupOffset(g) + s - 1)];
            net.stages.push_back(LowerEdge{p.position, p.value});
        }
    }
    net.stages.push_back(DiagonalStage{params.diag});
    for (int g = params.n - 1; g >= 1; --g) {
        for (int s = g; s >= 1; --s) {
            const auto& p = params.uppers[static_cast<size_t>(groupOffset(g) + s - 1)];
            net.stages.push_back(UpperEdge{p.position, p.value});
        }
    }
    return net;
}

Rational lindstromMinor(const PlanarNetwork& net, const IndexSet& rowSet,
                        const IndexSet& colSet) {
    if (net.n > 7) throw InvalidOrder("path enumeration guarded at n <= 7");
    if (rowSet.size() != colSet.size()) {
        throw ShapeError("source and sink sets must have equal cardinality");
    }
    if (rowSet.bound() != net.n || colSet.bound() != net.n) {
        throw InvalidIndex("index set bound does not match network size");
    }

    // Forward sweep over stages; a state is the strictly increasing tuple
    // of levels currently occupied by the vertex-disjoint family.
    std::map<std::vector<int>, Rational> states;
    states[rowSet.indices()] = 1;
    for (const NetworkStage& stage : net.stages) {
        std::map<std::vector<int>, Rational> next;
        for (const auto& [levels, weight] : states) {
            if (std::holds_alternative<DiagonalStage>(stage)) {
                const auto& d = std::get<DiagonalStage>(stage).weights;
                Rational w = weight;
                for (int lv : levels) w *= d[static_cast<size_t>(lv - 1)];
                next[levels] += w;
                continue;
            }
            next[levels] += weight; // nobody takes the edge
            int from, to;
            Rational edgeWeight;
            if (std::holds_alternative<LowerEdge>(stage)) {
                const auto& e = std::get<LowerEdge>(stage);
                from = e.level;
                to = e.level - 1;
                edgeWeight = e.weight;
            } else {
                const auto& e = std::get<UpperEdge>(stage);
                from = e.level - 1;
                to = e.level;
                edgeWeight = e.weight;
            }
            if (edgeWeight == 0) continue;
            auto it = std::find(levels.begin(), levels.end(), from);
            if (it == levels.end()) continue;
            if (std::find(levels.begin(), levels.end(), to) != levels.end()) continue;
            std::vector<int> moved = levels;
            moved[static_cast<size_t>(it - levels.begin())] = to;
            std::sort(moved.begin(), moved.end());
            next[moved] += weight * edgeWeight;
        }
        states = std::move(next);
    }
    auto it = states.find(colSet.indices());
    return it == states.end() ? Rational(0) : it->second;
}

std::vector<IndexSet> sMatrixIndexSets(int n) {
    if (n < 4) throw InvalidOrder("S-matrix construction needs n >= 4");
    auto make = [&](int p, int q) {
        std::vector<int> v;
        for (int i = 1; i <= n - 4; ++i) v.push_back(i);
        v.push_back(p);
        v.push_back(q);
        return IndexSet(v, n);
    };
    return {make(n - 3, n - 2), make(n - 3, n - 1), make(n - 3, n), make(n - 2, n - 1)};
}

TopPartIndices topPartIndices(int n) {
    if (n < 4) throw InvalidOrder("S-matrix construction needs n >= 4");
    TopPartIndices t{};
    // Left (falling) strands, top edges read left to right; see Figure-2
    // style labelling: group n-3 carries a; group n-2 carries b (top) and
    // c; group n-1 carries d (top), e, f.
    t.a = groupOffset(n - 3) + 1;
    t.b = groupOffset(n - 2) + 1;
    t.c = groupOffset(n - 2) + 2;
    t.d = groupOffset(n - 1) + 1;
    t.e = groupOffset(n - 1) + 2;
    t.f = groupOffset(n - 1) + 3;
    // Right (rising) strands mirror the layout.
    t.i = groupOffset(n - 1) + 1;
    t.h = groupOffset(n - 1) + 2;
    t.g = groupOffset(n - 1) + 3;
    t.k = groupOffset(n - 2) + 1;
    t.j = groupOffset(n - 2) + 2;
    t.l = groupOffset(n - 3) + 1;
    return t;
}

FactorizationParams sMatrixFactorization(const SMatrixParams& p) {
    if (p.n < 4) throw InvalidOrder("S-matrix construction needs n >= 4");
    for (const Rational* w : {&p.a, &p.b, &p.c, &p.d, &p.e, &p.f,
                              &p.g, &p.h, &p.i, &p.j, &p.k, &p.l}) {
        if (*w <= 0) throw DomainError("labelled top-part weights must be positive");
    }
    const int n = p.n;
    FactorizationParams params = generateTPParams(n, 0, 1); // layout scaffold, all 1s
    for (auto& q : params.lowers) q.value = p.fillValue;
    for (auto& q : params.uppers) q.value = p.fillValue;
    params.diag.assign(static_cast<size_t>(n), Rational(1));
    if (!p.diag.empty()) {
        if (static_cast<int>(p.diag.size()) != n) throw ShapeError("diagonal length must be n");
        params.diag = p.diag;
    }
    TopPartIndices t = topPartIndices(n);
    auto setL = [&](int idx, const Rational& v) {
        params.lowers[static_cast<size_t>(idx - 1)].value = v;
    };
    auto setU = [&](int idx, const Rational& v) {
        params.uppers[static_cast<size_t>(idx - 1)].value = v;
    };
    setL(t.a, p.a);
    setL(t.b, p.b);
    setL(t.c, p.c);
    setL(t.d, p.d);
    setL(t.e, p.e);
    setL(t.f, p.f);
    setU(t.i, p.i);
    setU(t.h, p.h);
    setU(t.g, p.g);
    setU(t.k, p.k);
    setU(t.j, p.j);
    setU(t.l, p.l);
    params.validate();
    return params;
}

ExactMatrix extractSMatrix(const ExactMatrix& a) {
    const int n = a.rows();
    std::vector<IndexSet> sets = sMatrixIndexSets(n);
    ExactMatrix s(4, 4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            s.at(i, j) = minorOf(a, sets[static_cast<size_t>(i - 1)],
                                 sets[static_cast<size_t>(j - 1)]);
    return s;
}

std::pair<ExactMatrix, ExactMatrix> buildSMatrix(const SMatrixParams& p) {
    ExactMatrix a = assemble(sMatrixFactorization(p));
    return {extractSMatrix(a), a};
}

} // namespace tpkit
