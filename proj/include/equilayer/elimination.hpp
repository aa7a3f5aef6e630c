#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "equilayer/rational.hpp"

namespace equilayer {

// Sparse row over exact integers: (column, coefficient) pairs sorted by
// column, no zero coefficients.
using SparseIntRow = std::vector<std::pair<std::int64_t, Int>>;
using SparseRatVec = std::vector<std::pair<std::int64_t, Rat>>;

// Incremental fraction-free Gaussian elimination. Rows are combined by
// integer cross-multiplication and reduced by their content, so no fractions
// ever appear and there is no tolerance anywhere. Pivot rows are kept keyed
// by pivot column; insertion order does not affect the final reduced form,
// which is the (unique) RREF of the row space up to the integer scaling.
class IntegerEchelon {
public:
    explicit IntegerEchelon(std::int64_t num_cols);

    // Reduces the row against current pivots; installs the remainder as a
    // new pivot row when nonzero. Returns true iff the rank increased.
    bool add_row(SparseIntRow row);

    // Clears denominators first.
    bool add_row_rational(const SparseRatVec& row);

    std::int64_t rank() const { return static_cast<std::int64_t>(pivot_rows_.size()); }
    std::int64_t num_cols() const { return num_cols_; }

    // True iff v lies in the row space (reduces to zero). Does not modify
    // the echelon form.
    bool in_row_space(const SparseRatVec& v) const;

    // Back-substitutes to the fully reduced form: each pivot column appears
    // in exactly one row. Idempotent; called automatically by null_space_basis.
    void reduce_fully();

    // Canonical rational basis of the null space, one vector per free
    // column in ascending column order with the free coordinate set to 1.
    // Identical row spaces yield bit-identical output.
    std::vector<SparseRatVec> null_space_basis();

private:
    SparseIntRow reduce(SparseIntRow row) const;

    std::int64_t num_cols_ = 0;
    std::map<std::int64_t, SparseIntRow> pivot_rows_;  // pivot column -> row
    bool fully_reduced_ = true;
};

}  // namespace equilayer
