#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equilayer/basis.hpp"
#include "equilayer/elimination.hpp"
#include "equilayer/errors.hpp"
#include "equilayer/group.hpp"
#include "equilayer/orbits.hpp"
#include "equilayer/sparse.hpp"

namespace equilayer {

// Brute-force verification results. basis_ok: every element satisfied its
// commutation equation exactly and supports were pairwise disjoint.
// span_ok: element count equals the brute-force null-space dimension and
// the two spans contain each other.
struct SubspaceReport {
    Int dimension = 0;
    bool basis_ok = false;
    bool span_ok = false;
    struct Failure {
        std::int64_t element_index = -1;  // -1 for basis-wide failures
        std::string group_element;        // witness, when applicable
        std::string detail;
    };
    std::vector<Failure> failures;

    bool ok() const { return basis_ok && span_ok; }
};

struct VerifyResult {
    bool ok = true;
    std::optional<Permutation> witness;
    std::string detail;
};

// Dimension of the equivariant-map space found the hard way: assemble the
// commutation constraints rho_l(sigma) X = X rho_k(sigma) over every group
// element (or a generating set when use_generators is set; the output is
// bit-identical) and eliminate exactly. Feature channels enlarge the
// variable space with the group acting trivially on them.
Int equivariant_dimension_bruteforce(int n, int k, int l, GroupKind group,
                                     int d_k = 1, int d_l = 1,
                                     bool use_generators = false,
                                     const SizeGuard& guard = SizeGuard::defaults());

// The canonical null-space basis of the same constraint system, one sparse
// vector per solution dimension over vectorized (row-major) matrices. The
// reduced form is unique for a given solution space, so full-group and
// generator-based assembly return bit-identical bases.
std::vector<SparseRatVec> equivariant_nullspace_bruteforce(
    int n, int k, int l, GroupKind group, int d_k = 1, int d_l = 1,
    bool use_generators = false, const SizeGuard& guard = SizeGuard::defaults());

// Exact check that rho_l(sigma) M = M rho_k(sigma) for every sigma in the
// group, with rho (x) identity on feature channels. Returns the first
// violating group element as witness.
VerifyResult verify_equivariance(const SparseMatrix& m, int n, int k, int l, GroupKind group,
                                 int d_k = 1, int d_l = 1,
                                 const SizeGuard& guard = SizeGuard::defaults());

// Same check for a direct product of groups acting factor-wise, against
// every tuple of group elements.
VerifyResult verify_local_equivariance(const SparseMatrix& m,
                                       const std::vector<FactorSpec>& factors,
                                       const SizeGuard& guard = SizeGuard::defaults());

// The determinant-composite evaluated independently on EVERY multi-index in
// [n]^(l+k): the projection onto the n-th tensor power is materialized from
// its defining orbit and composed with the determinant sign of the image
// word. Orbit members map to +/-1, everything else to 0. This is the
// cross-check for jellyfish_sign, built along the literal composite rather
// than the reconstruction shortcut.
std::map<MultiIndex, int> split_sign_table(const SetPartition& partition, int n, int l, int k,
                                           const SizeGuard& guard = SizeGuard::defaults());

// Runs the full battery against a constructed basis: per-element
// equivariance, pairwise-disjoint supports, count == brute-force dimension,
// and exact mutual containment of the two spans. Single-factor bases only
// (use verify_local_equivariance for local ones).
SubspaceReport check_basis(const LayerBasis& basis,
                           const SizeGuard& guard = SizeGuard::defaults());

}  // namespace equilayer
