#include "equilayer/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace equilayer {

const char* to_string(GroupKind group) {
    return group == GroupKind::symmetric ? "sn" : "an";
}

std::int64_t LayerBasis::rows() const {
    std::int64_t total = d_l;
    for (const auto& factor : factors) {
        for (int i = 0; i < factor.l; ++i) total *= factor.n;
    }
    return total;
}

std::int64_t LayerBasis::cols() const {
    std::int64_t total = d_k;
    for (const auto& factor : factors) {
        for (int i = 0; i < factor.k; ++i) total *= factor.n;
    }
    return total;
}

SparseMatrix matrix_from_orbit(const Orbit& orbit, int n, int l, int k, const SizeGuard& guard) {
    const std::int64_t rows = checked_pow(n, l, guard, "matrix_from_orbit");
    const std::int64_t cols = checked_pow(n, k, guard, "matrix_from_orbit");
    std::vector<SparseMatrix::Entry> triplets;
    triplets.reserve(orbit.members.size());
    for (const auto& member : orbit.members) {
        if (static_cast<int>(member.size()) != l + k) {
            throw std::invalid_argument("orbit member length does not match l + k");
        }
        const MultiIndex row_index(member.begin(), member.begin() + l);
        const MultiIndex col_index(member.begin() + l, member.end());
        triplets.push_back({linearize(row_index, n), linearize(col_index, n), Rat(1)});
    }
    return SparseMatrix::from_triplets(rows, cols, std::move(triplets));
}

LayerBasis layer_basis(int n, int k, int l, GroupKind group, const SizeGuard& guard) {
    if (n < 1 || k < 0 || l < 0) throw std::invalid_argument("invalid layer specification");
    guard.check_cells(checked_pow(n, l, guard, "layer_basis") *
                          checked_pow(n, k, guard, "layer_basis"),
                      "layer_basis");

    LayerBasis basis{{FactorSpec{n, k, l, group}}, 1, 1, {}};
    for (const auto& partition : enumerate_partitions(l + k, std::min(n, l + k))) {
        if (group == GroupKind::alternating && splits(partition, n)) {
            auto [plus, minus] = split_orbit(partition, n, l, k);
            basis.elements.push_back(
                {{{partition, SignClass::plus}}, 1, 1, matrix_from_orbit(plus, n, l, k, guard)});
            basis.elements.push_back(
                {{{partition, SignClass::minus}}, 1, 1, matrix_from_orbit(minus, n, l, k, guard)});
        } else {
            basis.elements.push_back({{{partition, SignClass::unsplit}},
                                      1,
                                      1,
                                      matrix_from_orbit(sn_orbit(partition, n, l, k), n, l, k,
                                                        guard)});
        }
    }
    return basis;
}

Int an_dim(int n, int k, int l) {
    if (n < 1 || k < 0 || l < 0) throw std::invalid_argument("invalid layer specification");
    const int m = l + k;
    if (n == 1) return bell_restricted(m, 1);
    // Census over block counts: t <= n-2 contributes whole orbits, t in
    // {n-1, n} contributes split pairs. The t = 0 term covers m = 0, where
    // the single empty partition never splits.
    Int total = 0;
    for (int t = 0; t <= n - 2; ++t) total += stirling2(m, t);
    total += 2 * stirling2(m, n - 1);
    total += 2 * stirling2(m, n);
    return total;
}

Int sn_dim(int n, int k, int l) {
    if (n < 1 || k < 0 || l < 0) throw std::invalid_argument("invalid layer specification");
    return bell_restricted(l + k, n);
}

SparseMatrix weight_matrix(const LayerBasis& basis, const std::vector<Rat>& params) {
    if (params.size() != basis.elements.size()) {
        throw std::invalid_argument("expected " + std::to_string(basis.elements.size()) +
                                    " parameters, got " + std::to_string(params.size()));
    }
    std::vector<SparseMatrix::Entry> triplets;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i] == 0) continue;
        for (const auto& entry : basis.elements[i].matrix.entries()) {
            triplets.push_back({entry.row, entry.col, entry.value * params[i]});
        }
    }
    return SparseMatrix::from_triplets(basis.rows(), basis.cols(), std::move(triplets));
}

LayerBasis with_features(const LayerBasis& basis, int d_k, int d_l, const SizeGuard& guard) {
    if (basis.d_k != 1 || basis.d_l != 1) {
        throw std::invalid_argument("input basis already has feature channels");
    }
    if (d_k < 1 || d_l < 1) throw std::invalid_argument("feature dimensions must be positive");
    guard.check_cells(basis.rows() * d_l * basis.cols() * d_k, "with_features");

    LayerBasis featured{basis.factors, d_k, d_l, {}};
    featured.elements.reserve(basis.elements.size() * static_cast<std::size_t>(d_k * d_l));
    for (const auto& element : basis.elements) {
        for (int i = 1; i <= d_l; ++i) {
            for (int j = 1; j <= d_k; ++j) {
                const auto channel =
                    SparseMatrix::from_triplets(d_l, d_k, {{i - 1, j - 1, Rat(1)}});
                featured.elements.push_back(
                    {element.provenance, i, j, kron(element.matrix, channel)});
            }
        }
    }
    return featured;
}

LayerBasis bias_basis(int n, int l, GroupKind group, const SizeGuard& guard) {
    return layer_basis(n, /*k=*/0, l, group, guard);
}

LayerBasis local_basis(const std::vector<FactorSpec>& factors, const SizeGuard& guard) {
    if (factors.empty()) throw std::invalid_argument("local basis needs at least one factor");
    std::vector<LayerBasis> parts;
    parts.reserve(factors.size());
    std::int64_t rows = 1;
    std::int64_t cols = 1;
    for (const auto& factor : factors) {
        parts.push_back(layer_basis(factor.n, factor.k, factor.l, factor.group, guard));
        rows *= parts.back().rows();
        cols *= parts.back().cols();
        guard.check_cells(rows, "local_basis");
        guard.check_cells(cols, "local_basis");
    }
    guard.check_cells(rows * cols, "local_basis");

    LayerBasis product{factors, 1, 1, {}};
    // Odometer over per-factor element indices, factor 1 slowest.
    std::vector<std::size_t> choice(factors.size(), 0);
    while (true) {
        BasisElement element;
        element.matrix = parts[0].elements[choice[0]].matrix;
        element.provenance = parts[0].elements[choice[0]].provenance;
        for (std::size_t r = 1; r < parts.size(); ++r) {
            element.matrix = kron(element.matrix, parts[r].elements[choice[r]].matrix);
            element.provenance.push_back(parts[r].elements[choice[r]].provenance.front());
        }
        product.elements.push_back(std::move(element));

        std::size_t position = parts.size();
        while (position > 0) {
            --position;
            if (++choice[position] < parts[position].elements.size()) break;
            choice[position] = 0;
            if (position == 0) return product;
        }
    }
}

}  // namespace equilayer
