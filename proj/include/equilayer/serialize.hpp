#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "equilayer/basis.hpp"
#include "equilayer/oracle.hpp"
#include "equilayer/rational.hpp"
#include "equilayer/sparse.hpp"

namespace equilayer {

// Interchange form of one matrix. Indices are 0-based here and only here;
// the mathematical modules stay 1-based for tensor entries and block labels.
// Rationals are (numerator, denominator) pairs, reduced, denominator > 0;
// floats never enter verification paths.
struct MatrixDocument {
    struct ProvenanceInfo {
        std::vector<int> rgs;
        std::string sign_class;  // "unsplit" | "plus" | "minus"

        friend bool operator==(const ProvenanceInfo&, const ProvenanceInfo&) = default;
    };
    struct EntryInfo {
        std::int64_t row = 0;
        std::int64_t col = 0;
        Int num = 0;
        Int den = 1;

        friend bool operator==(const EntryInfo&, const EntryInfo&) = default;
    };
    struct ParameterInfo {
        std::int64_t index = 0;
        ProvenanceInfo provenance;  // of the factor-1 partition for local bases
        int feature_row = 1;
        int feature_col = 1;
        Int num = 0;
        Int den = 1;

        friend bool operator==(const ParameterInfo&, const ParameterInfo&) = default;
    };

    int schema_version = 1;
    std::string kind;  // "basis_element" | "weight_matrix"
    std::vector<FactorSpec> factors;
    int d_k = 1;
    int d_l = 1;
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<ProvenanceInfo> provenance;          // per factor, basis elements only
    std::optional<std::pair<int, int>> feature;      // (row, col) channel, 1-based
    std::vector<EntryInfo> entries;                  // sorted by (row, col)
    std::vector<ParameterInfo> parameters;           // weight matrices only

    friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

MatrixDocument document_from_element(const LayerBasis& basis, std::size_t index);
MatrixDocument document_from_weight(const LayerBasis& basis, const std::vector<Rat>& params,
                                    const SparseMatrix& weight);

// The matrix payload, back in internal form.
SparseMatrix matrix_from_document(const MatrixDocument& doc);

std::string to_json(const MatrixDocument& doc);

// Export-only variant with entries converted to doubles ([row, col, value]
// triples, "encoding": "float"). Not parseable back: verification paths
// stay exact.
std::string to_json_float(const MatrixDocument& doc);

// Throws std::invalid_argument on malformed or non-canonical input
// (unsorted entries, unreduced fractions, out-of-range coordinates).
MatrixDocument document_from_json(const std::string& text);

// Report serialization for the oracle subcommand.
std::string to_json(const SubspaceReport& report);

// Plain-text forms for the CLI: "row col num/den" lines, or a dense grid.
// as_float renders values as decimals instead of exact fractions.
std::string to_coo_text(const SparseMatrix& m, bool as_float = false);
std::string to_dense_text(const SparseMatrix& m, bool as_float = false);

GroupKind group_from_string(const std::string& name);  // "sn" | "an"

}  // namespace equilayer
