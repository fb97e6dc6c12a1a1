#ifndef TPKIT_MATRIX_HPP
#define TPKIT_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "tpkit/rational.hpp"

namespace tpkit {

// Strictly increasing list of 1-based indices inside [1, bound].
class IndexSet {
public:
    IndexSet(std::vector<int> indices, int bound);

    const std::vector<int>& indices() const { return indices_; }
    int bound() const { return bound_; }
    int size() const { return static_cast<int>(indices_.size()); }
    int operator[](int pos) const { return indices_[static_cast<size_t>(pos)]; }
    bool contains(int value) const;

    // Sorted complement within [1, bound].
    IndexSet complement() const;

    // {1, 2, ..., n} with bound n.
    static IndexSet full(int n);
    // {lo, lo+1, ..., hi} with the given bound.
    static IndexSet range(int lo, int hi, int bound);

    bool operator==(const IndexSet& other) const = default;

private:
    std::vector<int> indices_;
    int bound_;
};

// Dense matrix of exact rationals. All public indexing is 1-based.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols);
    ExactMatrix(int rows, int cols, std::vector<Rational> entries);
    // Row-major brace construction, mostly for tests and fixtures.
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    const Rational& at(int i, int j) const;
    Rational& at(int i, int j);

    ExactMatrix transpose() const;
    bool isSymmetric() const;

    static ExactMatrix identity(int n);
    static ExactMatrix zero(int rows, int cols);

    bool operator==(const ExactMatrix& other) const = default;
    ExactMatrix operator*(const ExactMatrix& other) const;
    ExactMatrix operator-(const ExactMatrix& other) const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

// A[rowSet, colSet]; entry (p,q) = A(rowSet[p], colSet[q]).
ExactMatrix submatrix(const ExactMatrix& a, const IndexSet& rowSet, const IndexSet& colSet);

// Exact determinant via fraction-free Bareiss elimination over a
// common-denominator integer lift of each row.
Rational determinant(const ExactMatrix& a);

// determinant(submatrix(a, rowSet, colSet)).
Rational minorOf(const ExactMatrix& a, const IndexSet& rowSet, const IndexSet& colSet);

} // namespace tpkit

#endif
