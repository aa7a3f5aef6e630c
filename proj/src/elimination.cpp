#include "equilayer/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace equilayer {

namespace {

// Divides out the content (gcd of coefficients) and normalizes the leading
// coefficient to be positive.
void normalize(SparseIntRow& row) {
    if (row.empty()) return;
    Int content = 0;
    for (const auto& [col, coeff] : row) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), coeff.get_mpz_t());
        if (content == 1) break;
    }
    if (row.front().second < 0) content = -content;
    if (content != 1) {
        for (auto& [col, coeff] : row) coeff /= content;
    }
}

// target <- pivot_lead * target - target_lead * pivot, where both rows lead
// at the same column. Integer cross-multiplication: no fractions appear.
SparseIntRow cross_eliminate(const SparseIntRow& target, const SparseIntRow& pivot) {
    const Int& a = pivot.front().second;
    const Int& b = target.front().second;
    SparseIntRow result;
    result.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            result.emplace_back(target[i].first, a * target[i].second);
            ++i;
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            result.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            Int value = a * target[i].second - b * pivot[j].second;
            if (value != 0) result.emplace_back(target[i].first, std::move(value));
            ++i;
            ++j;
        }
    }
    return result;
}

}  // namespace

IntegerEchelon::IntegerEchelon(std::int64_t num_cols) : num_cols_(num_cols) {
    if (num_cols < 0) throw std::invalid_argument("negative column count");
}

SparseIntRow IntegerEchelon::reduce(SparseIntRow row) const {
    while (!row.empty()) {
        const auto it = pivot_rows_.find(row.front().first);
        if (it == pivot_rows_.end()) break;
        row = cross_eliminate(row, it->second);
    }
    normalize(row);
    return row;
}

bool IntegerEchelon::add_row(SparseIntRow row) {
    for (const auto& [col, coeff] : row) {
        if (col < 0 || col >= num_cols_) throw std::invalid_argument("row column out of range");
    }
    std::sort(row.begin(), row.end());
    std::erase_if(row, [](const auto& term) { return term.second == 0; });
    row = reduce(std::move(row));
    if (row.empty()) return false;
    const std::int64_t pivot_col = row.front().first;
    pivot_rows_.emplace(pivot_col, std::move(row));
    fully_reduced_ = pivot_rows_.size() == 1;
    return true;
}

bool IntegerEchelon::add_row_rational(const SparseRatVec& row) {
    Int denominator_lcm = 1;
    for (const auto& [col, value] : row) {
        mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
                value.get_den().get_mpz_t());
    }
    SparseIntRow integer_row;
    integer_row.reserve(row.size());
    for (const auto& [col, value] : row) {
        integer_row.emplace_back(col,
                                 Int(value.get_num() * (denominator_lcm / value.get_den())));
    }
    return add_row(std::move(integer_row));
}

bool IntegerEchelon::in_row_space(const SparseRatVec& v) const {
    Int denominator_lcm = 1;
    for (const auto& [col, value] : v) {
        mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
                value.get_den().get_mpz_t());
    }
    SparseIntRow row;
    row.reserve(v.size());
    for (const auto& [col, value] : v) {
        if (col < 0 || col >= num_cols_) throw std::invalid_argument("vector column out of range");
        row.emplace_back(col, Int(value.get_num() * (denominator_lcm / value.get_den())));
    }
    std::sort(row.begin(), row.end());
    std::erase_if(row, [](const auto& term) { return term.second == 0; });
    return reduce(std::move(row)).empty();
}

void IntegerEchelon::reduce_fully() {
    if (fully_reduced_) return;
    // Walk pivots from the last column back, clearing that column from all
    // earlier rows. Row leads below the pivot column are untouched, so the
    // echelon structure survives each pass.
    for (auto it = pivot_rows_.rbegin(); it != pivot_rows_.rend(); ++it) {
        const std::int64_t pivot_col = it->first;
        const SparseIntRow& pivot = it->second;
        for (auto& [lead, row] : pivot_rows_) {
            if (lead >= pivot_col) break;
            const auto hit = std::lower_bound(
                row.begin(), row.end(), pivot_col,
                [](const auto& term, std::int64_t col) { return term.first < col; });
            if (hit == row.end() || hit->first != pivot_col) continue;
            // row <- pivot_lead * row - row[pivot_col] * pivot
            const Int a = pivot.front().second;
            const Int b = hit->second;
            SparseIntRow updated;
            updated.reserve(row.size() + pivot.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < pivot.size()) {
                if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                    updated.emplace_back(row[i].first, a * row[i].second);
                    ++i;
                } else if (i == row.size() || pivot[j].first < row[i].first) {
                    updated.emplace_back(pivot[j].first, -b * pivot[j].second);
                    ++j;
                } else {
                    Int value = a * row[i].second - b * pivot[j].second;
                    if (value != 0) updated.emplace_back(row[i].first, std::move(value));
                    ++i;
                    ++j;
                }
            }
            normalize(updated);
            row = std::move(updated);
        }
    }
    fully_reduced_ = true;
}

std::vector<SparseRatVec> IntegerEchelon::null_space_basis() {
    reduce_fully();
    std::vector<SparseRatVec> basis;
    auto pivot_it = pivot_rows_.begin();
    for (std::int64_t col = 0; col < num_cols_; ++col) {
        if (pivot_it != pivot_rows_.end() && pivot_it->first == col) {
            ++pivot_it;
            continue;
        }
        // Free column: set it to 1 and read the pivot coordinates off the
        // reduced rows (pivot * x_p + coeff * x_free = 0).
        SparseRatVec vector;
        for (const auto& [lead, row] : pivot_rows_) {
            if (lead > col) break;
            const auto hit = std::lower_bound(
                row.begin(), row.end(), col,
                [](const auto& term, std::int64_t c) { return term.first < c; });
            if (hit == row.end() || hit->first != col) continue;
            vector.emplace_back(lead, make_rat(-hit->second, row.front().second));
        }
        vector.emplace_back(col, Rat(1));
        std::sort(vector.begin(), vector.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(vector));
    }
    return basis;
}

}  // namespace equilayer
