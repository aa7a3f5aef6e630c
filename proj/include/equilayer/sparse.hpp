#pragma once

#include <cstdint>
#include <vector>

#include "equilayer/rational.hpp"

namespace equilayer {

// Coordinate-form sparse matrix over exact rationals. Entries are kept
// sorted by (row, col) with no duplicates and no explicit zeros, so
// operator== is structural equality of the represented matrix.
class SparseMatrix {
public:
    struct Entry {
        std::int64_t row = 0;
        std::int64_t col = 0;
        Rat value;
    };

    SparseMatrix() = default;
    SparseMatrix(std::int64_t rows, std::int64_t cols);

    // Sorts, merges duplicates, drops exact zeros, checks bounds.
    static SparseMatrix from_triplets(std::int64_t rows, std::int64_t cols,
                                      std::vector<Entry> triplets);

    static SparseMatrix identity(std::int64_t n);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    std::int64_t nnz() const { return static_cast<std::int64_t>(entries_.size()); }
    bool is_zero() const { return entries_.empty(); }

    const std::vector<Entry>& entries() const { return entries_; }

    // Value at (row, col); zero when absent. Binary search.
    Rat at(std::int64_t row, std::int64_t col) const;

    SparseMatrix scaled(const Rat& factor) const;

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::vector<Entry> entries_;
};

// Kronecker product; the left factor indexes the slow axis.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace equilayer
