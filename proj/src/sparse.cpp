#include "equilayer/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace equilayer {

SparseMatrix::SparseMatrix(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseMatrix SparseMatrix::from_triplets(std::int64_t rows, std::int64_t cols,
                                         std::vector<Entry> triplets) {
    SparseMatrix m(rows, cols);
    std::sort(triplets.begin(), triplets.end(), [](const Entry& a, const Entry& b) {
        return std::pair(a.row, a.col) < std::pair(b.row, b.col);
    });
    for (auto& entry : triplets) {
        if (entry.row < 0 || entry.row >= rows || entry.col < 0 || entry.col >= cols) {
            throw std::invalid_argument("matrix entry out of bounds");
        }
        if (!m.entries_.empty() && m.entries_.back().row == entry.row &&
            m.entries_.back().col == entry.col) {
            m.entries_.back().value += entry.value;
        } else {
            m.entries_.push_back(std::move(entry));
        }
    }
    std::erase_if(m.entries_, [](const Entry& e) { return e.value == 0; });
    return m;
}

SparseMatrix SparseMatrix::identity(std::int64_t n) {
    SparseMatrix m(n, n);
    m.entries_.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) m.entries_.push_back({i, i, Rat(1)});
    return m;
}

Rat SparseMatrix::at(std::int64_t row, std::int64_t col) const {
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), std::pair(row, col),
        [](const Entry& e, const std::pair<std::int64_t, std::int64_t>& key) {
            return std::pair(e.row, e.col) < key;
        });
    if (it != entries_.end() && it->row == row && it->col == col) return it->value;
    return Rat(0);
}

SparseMatrix SparseMatrix::scaled(const Rat& factor) const {
    if (factor == 0) return SparseMatrix(rows_, cols_);
    SparseMatrix m(rows_, cols_);
    m.entries_ = entries_;
    for (auto& entry : m.entries_) entry.value *= factor;
    return m;
}

namespace {

SparseMatrix merge(const SparseMatrix& a, const SparseMatrix& b, int b_sign) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    std::vector<SparseMatrix::Entry> triplets;
    triplets.reserve(a.entries().size() + b.entries().size());
    triplets = a.entries();
    for (const auto& entry : b.entries()) {
        triplets.push_back({entry.row, entry.col, b_sign > 0 ? entry.value : -entry.value});
    }
    return SparseMatrix::from_triplets(a.rows(), a.cols(), std::move(triplets));
}

}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return merge(a, b, +1); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return merge(a, b, -1); }

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch in product");
    // Group the right factor by row for the inner joins.
    std::map<std::int64_t, std::vector<const SparseMatrix::Entry*>> b_by_row;
    for (const auto& entry : b.entries()) b_by_row[entry.row].push_back(&entry);

    std::map<std::pair<std::int64_t, std::int64_t>, Rat> accumulator;
    for (const auto& left : a.entries()) {
        const auto it = b_by_row.find(left.col);
        if (it == b_by_row.end()) continue;
        for (const auto* right : it->second) {
            accumulator[{left.row, right->col}] += left.value * right->value;
        }
    }
    std::vector<SparseMatrix::Entry> triplets;
    triplets.reserve(accumulator.size());
    for (auto& [coord, value] : accumulator) {
        triplets.push_back({coord.first, coord.second, std::move(value)});
    }
    return SparseMatrix::from_triplets(a.rows(), b.cols(), std::move(triplets));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        if (a.entries_[i].row != b.entries_[i].row || a.entries_[i].col != b.entries_[i].col ||
            a.entries_[i].value != b.entries_[i].value) {
            return false;
        }
    }
    return true;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<SparseMatrix::Entry> triplets;
    triplets.reserve(a.entries().size() * b.entries().size());
    for (const auto& left : a.entries()) {
        for (const auto& right : b.entries()) {
            triplets.push_back({left.row * b.rows() + right.row, left.col * b.cols() + right.col,
                                left.value * right.value});
        }
    }
    return SparseMatrix::from_triplets(m.rows(), m.cols(), std::move(triplets));
}

}  // namespace equilayer
