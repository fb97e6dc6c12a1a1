#include "tpkit/matrix.hpp"

#include <algorithm>
#include <string>

namespace tpkit {

IndexSet::IndexSet(std::vector<int> indices, int bound)
    : indices_(std::move(indices)), bound_(bound) {
    if (bound_ < 0) throw InvalidIndex("negative bound");
    int prev = 0;
    for (int v : indices_) {
        if (v <= prev) throw InvalidIndex("index set must be strictly increasing");
        if (v > bound_) {
            throw InvalidIndex("index " + std::to_string(v) + " exceeds bound " +
                               std::to_string(bound_));
        }
        prev = v;
    }
}

bool IndexSet::contains(int value) const {
    return std::binary_search(indices_.begin(), indices_.end(), value);
}

IndexSet IndexSet::complement() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(bound_) - indices_.size());
    for (int v = 1; v <= bound_; ++v) {
        if (!contains(v)) out.push_back(v);
    }
    return IndexSet(std::move(out), bound_);
}

IndexSet IndexSet::full(int n) {
    return range(1, n, n);
}

IndexSet IndexSet::range(int lo, int hi, int bound) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return IndexSet(std::move(out), bound);
}

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw ShapeError("matrix dimensions must be positive");
}

ExactMatrix::ExactMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows <= 0 || cols <= 0) throw ShapeError("matrix dimensions must be positive");
    if (entries_.size() != static_cast<size_t>(rows) * cols) {
        throw ShapeError("entry count does not match dimensions");
    }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    if (rows_ == 0) throw ShapeError("matrix dimensions must be positive");
    cols_ = static_cast<int>(rows.begin()->size());
    if (cols_ == 0) throw ShapeError("matrix dimensions must be positive");
    entries_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw ShapeError("ragged rows");
        for (const auto& v : row) entries_.push_back(v);
    }
}

const Rational& ExactMatrix::at(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
        throw InvalidIndex("entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") out of range");
    }
    return entries_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
}

Rational& ExactMatrix::at(int i, int j) {
    return const_cast<Rational&>(std::as_const(*this).at(i, j));
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool ExactMatrix::isSymmetric() const {
    if (!isSquare()) return false;
    for (int i = 1; i <= rows_; ++i)
        for (int j = i + 1; j <= cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix out(n, n);
    for (int i = 1; i <= n; ++i) out.at(i, i) = 1;
    return out;
}

ExactMatrix ExactMatrix::zero(int rows, int cols) {
    return ExactMatrix(rows, cols);
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    if (cols_ != other.rows_) throw ShapeError("inner dimensions disagree");
    ExactMatrix out(rows_, other.cols_);
    for (int i = 1; i <= rows_; ++i) {
        for (int k = 1; k <= cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 1; j <= other.cols_; ++j) {
                out.at(i, j) += aik * other.at(k, j);
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("shape mismatch");
    ExactMatrix out(rows_, cols_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) out.at(i, j) = at(i, j) - other.at(i, j);
    return out;
}

ExactMatrix submatrix(const ExactMatrix& a, const IndexSet& rowSet, const IndexSet& colSet) {
    if (rowSet.bound() != a.rows() || colSet.bound() != a.cols()) {
        throw InvalidIndex("index set bound does not match matrix dimension");
    }
    if (rowSet.size() == 0 || colSet.size() == 0) throw InvalidIndex("empty index set");
    ExactMatrix out(rowSet.size(), colSet.size());
    for (int p = 1; p <= rowSet.size(); ++p)
        for (int q = 1; q <= colSet.size(); ++q)
            out.at(p, q) = a.at(rowSet[p - 1], colSet[q - 1]);
    return out;
}

Rational determinant(const ExactMatrix& a) {
    if (!a.isSquare()) throw ShapeError("determinant requires a square matrix");
    const int n = a.rows();

    // Integer lift: scale each row by the LCM of its entry denominators.
    std::vector<std::vector<Integer>> m(static_cast<size_t>(n),
                                        std::vector<Integer>(static_cast<size_t>(n)));
    Integer scale = 1;
    for (int i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (int j = 0; j < n; ++j) {
            const Rational& v = a.at(i + 1, j + 1);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        }
        for (int j = 0; j < n; ++j) {
            const Rational& v = a.at(i + 1, j + 1);
            m[i][j] = v.get_num() * (lcm / v.get_den());
        }
        scale *= lcm;
    }

    // Fraction-free Bareiss elimination with row swaps and sign tracking.
    int sign = 1;
    Integer prevPivot = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m[r][k] != 0) {
                    swap = r;
                    break;
                }
            }
            if (swap < 0) return Rational(0);
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(swap)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prevPivot.get_mpz_t());
                m[i][j] = t;
            }
            m[i][k] = 0;
        }
        prevPivot = m[k][k];
    }

    Rational det(sign * m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)], scale);
    det.canonicalize();
    return det;
}

Rational minorOf(const ExactMatrix& a, const IndexSet& rowSet, const IndexSet& colSet) {
    if (rowSet.size() != colSet.size()) throw ShapeError("minor needs equal cardinalities");
    return determinant(submatrix(a, rowSet, colSet));
}

} // namespace tpkit
