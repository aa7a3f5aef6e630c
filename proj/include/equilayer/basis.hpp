#pragma once

#include <cstdint>
#include <vector>

#include "equilayer/errors.hpp"
#include "equilayer/group.hpp"
#include "equilayer/orbits.hpp"
#include "equilayer/sparse.hpp"

namespace equilayer {

const char* to_string(GroupKind group);

// One tensor-power factor of a layer space: maps order-k input tensors over
// [n] to order-l output tensors, equivariantly under the named group.
struct FactorSpec {
    int n = 1;
    int k = 0;
    int l = 0;
    GroupKind group = GroupKind::symmetric;

    friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

// Where a basis element came from: the partition and the sign half (unsplit
// for whole orbits). Local bases carry one record per factor.
struct Provenance {
    SetPartition partition;
    SignClass sign_class = SignClass::unsplit;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

// A single sparse 0/1 basis matrix with its provenance. Feature channels
// are 1-based; (1, 1) for featureless bases.
struct BasisElement {
    std::vector<Provenance> provenance;  // one per factor
    int feature_row = 1;
    int feature_col = 1;
    SparseMatrix matrix;
};

// An ordered basis of the equivariant-map space for a layer. Element order
// is canonical (lexicographic by partition rgs, then unsplit < plus < minus,
// then (feature_row, feature_col); local bases order factor 1 slowest) and
// defines the parameter indices used by weight_matrix and the CLI.
struct LayerBasis {
    std::vector<FactorSpec> factors;  // size 1 except for local bases
    int d_k = 1;
    int d_l = 1;
    std::vector<BasisElement> elements;

    std::int64_t rows() const;  // product of n^l over factors, times d_l
    std::int64_t cols() const;  // product of n^k over factors, times d_k
    bool is_local() const { return factors.size() > 1; }
};

// Sum of matrix units over an orbit (or half-orbit): a 1 at
// (linearize(I), linearize(J)) for each member (I, J).
SparseMatrix matrix_from_orbit(const Orbit& orbit, int n, int l, int k,
                               const SizeGuard& guard = SizeGuard::defaults());

// The complete basis for maps (R^n)^(x)k -> (R^n)^(x)l equivariant under the
// chosen group. Symmetric: one element per partition with <= n blocks.
// Alternating: whole orbits for partitions with <= n-2 blocks, plus/minus
// halves where the orbit splits; n = 1 coincides with symmetric.
LayerBasis layer_basis(int n, int k, int l, GroupKind group,
                       const SizeGuard& guard = SizeGuard::defaults());

// Dimension of the alternating-equivariant space by the block-count census:
// whole-orbit partitions count once, splitting ones twice. Always matches
// layer_basis(n, k, l, alternating).elements.size() when that is computable.
Int an_dim(int n, int k, int l);

// Dimension of the symmetric-equivariant space: bell_restricted(l+k, n).
Int sn_dim(int n, int k, int l);

// M = sum params[i] * elements[i].matrix, merged exactly.
SparseMatrix weight_matrix(const LayerBasis& basis, const std::vector<Rat>& params);

// Tensor each element with a feature-channel matrix unit: element count
// multiplies by d_l * d_k and the channel index varies fastest within each
// tensor axis.
LayerBasis with_features(const LayerBasis& basis, int d_k, int d_l,
                         const SizeGuard& guard = SizeGuard::defaults());

// Basis of group-fixed vectors in the order-l tensor power, as n^l x 1
// columns: the k = 0 layer basis.
LayerBasis bias_basis(int n, int l, GroupKind group,
                      const SizeGuard& guard = SizeGuard::defaults());

// Basis for maps equivariant under a direct product of groups acting
// factor-wise: all Kronecker products of per-factor basis elements, factor 1
// slowest in both the element order and the row/column index spaces.
LayerBasis local_basis(const std::vector<FactorSpec>& factors,
                       const SizeGuard& guard = SizeGuard::defaults());

}  // namespace equilayer
