#include "equilayer/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace equilayer {

namespace {

// Generating sets; constraint null spaces are the same as for the full
// group because the commutation equations multiply.
std::vector<Permutation> generators(int n, GroupKind group) {
    if (n == 1) return {};
    if (group == GroupKind::symmetric) {
        std::vector<int> transposition{2, 1};
        for (int i = 3; i <= n; ++i) transposition.push_back(i);
        if (n == 2) return {Permutation(transposition)};
        std::vector<int> cycle;
        for (int i = 2; i <= n; ++i) cycle.push_back(i);
        cycle.push_back(1);
        return {Permutation(transposition), Permutation(cycle)};
    }
    if (n == 2) return {};
    std::vector<int> three_cycle{2, 3, 1};
    for (int i = 4; i <= n; ++i) three_cycle.push_back(i);
    if (n == 3) return {Permutation(three_cycle)};
    std::vector<int> long_cycle;
    if (n % 2 == 1) {
        for (int i = 2; i <= n; ++i) long_cycle.push_back(i);  // (1 2 ... n), even for odd n
        long_cycle.push_back(1);
    } else {
        long_cycle.push_back(1);  // (2 3 ... n), even for even n
        for (int i = 3; i <= n; ++i) long_cycle.push_back(i);
        long_cycle.push_back(2);
    }
    return {Permutation(three_cycle), Permutation(long_cycle)};
}

// Index map of rho(sigma, order) (x) identity_channels on linearized,
// channel-fastest coordinates.
std::vector<std::int64_t> featured_index_map(const Permutation& sigma, int order, int channels,
                                             std::int64_t size) {
    std::vector<std::int64_t> map(static_cast<std::size_t>(size));
    const std::int64_t base_size = size / channels;
    for (std::int64_t base = 0; base < base_size; ++base) {
        const std::int64_t image =
            linearize(act(sigma, delinearize(base, sigma.degree(), order)), sigma.degree());
        for (int channel = 0; channel < channels; ++channel) {
            map[static_cast<std::size_t>(base * channels + channel)] = image * channels + channel;
        }
    }
    return map;
}

struct ConstraintSystem {
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    IntegerEchelon echelon{0};
};

// The commutation equations rho_l(sigma) X = X rho_k(sigma) reduce, entry
// by entry, to equalities X[r, c] = X[sigma r, sigma c]; assemble one
// two-term row per pair, deduplicated, and eliminate.
ConstraintSystem assemble_constraints(int n, int k, int l, GroupKind group, int d_k, int d_l,
                                      bool use_generators, const SizeGuard& guard) {
    ConstraintSystem system;
    system.rows = checked_pow(n, l, guard, "oracle") * d_l;
    system.cols = checked_pow(n, k, guard, "oracle") * d_k;
    guard.check_cells(system.rows * system.cols, "oracle");
    const std::int64_t vars = system.rows * system.cols;
    system.echelon = IntegerEchelon(vars);

    const std::vector<Permutation> elements =
        use_generators ? generators(n, group) : enumerate_group(n, group, guard);

    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& sigma : elements) {
        if (sigma == Permutation::identity(n)) continue;
        const auto row_map = featured_index_map(sigma, l, d_l, system.rows);
        const auto col_map = featured_index_map(sigma, k, d_k, system.cols);
        for (std::int64_t r = 0; r < system.rows; ++r) {
            for (std::int64_t c = 0; c < system.cols; ++c) {
                const std::int64_t a = r * system.cols + c;
                const std::int64_t b = row_map[static_cast<std::size_t>(r)] * system.cols +
                                       col_map[static_cast<std::size_t>(c)];
                if (a == b) continue;
                const auto key = std::minmax(a, b);
                if (!seen.insert(key).second) continue;
                system.echelon.add_row({{key.first, Int(1)}, {key.second, Int(-1)}});
            }
        }
    }
    return system;
}

SparseRatVec vectorize(const SparseMatrix& m) {
    SparseRatVec v;
    v.reserve(m.entries().size());
    for (const auto& entry : m.entries()) {
        v.emplace_back(entry.row * m.cols() + entry.col, entry.value);
    }
    return v;
}

int det_sign_of_word(const MultiIndex& word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        for (std::size_t j = i + 1; j < word.size(); ++j) {
            if (word[i] == word[j]) return 0;  // repeated column
        }
    }
    int inversions = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        for (std::size_t j = i + 1; j < word.size(); ++j) {
            if (word[i] > word[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Int equivariant_dimension_bruteforce(int n, int k, int l, GroupKind group, int d_k, int d_l,
                                     bool use_generators, const SizeGuard& guard) {
    if (n < 1 || k < 0 || l < 0 || d_k < 1 || d_l < 1) {
        throw std::invalid_argument("invalid layer specification");
    }
    auto system = assemble_constraints(n, k, l, group, d_k, d_l, use_generators, guard);
    return Int(system.rows * system.cols - system.echelon.rank());
}

std::vector<SparseRatVec> equivariant_nullspace_bruteforce(int n, int k, int l, GroupKind group,
                                                           int d_k, int d_l, bool use_generators,
                                                           const SizeGuard& guard) {
    if (n < 1 || k < 0 || l < 0 || d_k < 1 || d_l < 1) {
        throw std::invalid_argument("invalid layer specification");
    }
    auto system = assemble_constraints(n, k, l, group, d_k, d_l, use_generators, guard);
    return system.echelon.null_space_basis();
}

VerifyResult verify_equivariance(const SparseMatrix& m, int n, int k, int l, GroupKind group,
                                 int d_k, int d_l, const SizeGuard& guard) {
    const std::int64_t rows = checked_pow(n, l, guard, "verify") * d_l;
    const std::int64_t cols = checked_pow(n, k, guard, "verify") * d_k;
    if (m.rows() != rows || m.cols() != cols) {
        throw std::invalid_argument("matrix has dimensions " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + ", expected " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (const auto& sigma : enumerate_group(n, group, guard)) {
        SparseMatrix left = rho(sigma, l, guard);
        SparseMatrix right = rho(sigma, k, guard);
        if (d_l > 1) left = kron(left, SparseMatrix::identity(d_l));
        if (d_k > 1) right = kron(right, SparseMatrix::identity(d_k));
        if (!(left * m == m * right)) {
            return {false, sigma, "commutation fails for sigma = " + sigma.to_string()};
        }
    }
    return {};
}

VerifyResult verify_local_equivariance(const SparseMatrix& m,
                                       const std::vector<FactorSpec>& factors,
                                       const SizeGuard& guard) {
    if (factors.empty()) throw std::invalid_argument("no factors given");
    std::vector<std::vector<Permutation>> groups;
    groups.reserve(factors.size());
    for (const auto& factor : factors) {
        groups.push_back(enumerate_group(factor.n, factor.group, guard));
    }
    std::vector<std::size_t> choice(factors.size(), 0);
    while (true) {
        SparseMatrix left = rho(groups[0][choice[0]], factors[0].l, guard);
        SparseMatrix right = rho(groups[0][choice[0]], factors[0].k, guard);
        for (std::size_t r = 1; r < factors.size(); ++r) {
            left = kron(left, rho(groups[r][choice[r]], factors[r].l, guard));
            right = kron(right, rho(groups[r][choice[r]], factors[r].k, guard));
        }
        if (!(left * m == m * right)) {
            std::string tuple;
            for (std::size_t r = 0; r < choice.size(); ++r) {
                if (r > 0) tuple += ", ";
                tuple += groups[r][choice[r]].to_string();
            }
            return {false, groups[0][choice[0]], "commutation fails for (" + tuple + ")"};
        }
        std::size_t position = factors.size();
        while (position > 0) {
            --position;
            if (++choice[position] < groups[position].size()) break;
            choice[position] = 0;
            if (position == 0) return {};
        }
    }
}

std::map<MultiIndex, int> split_sign_table(const SetPartition& partition, int n, int l, int k,
                                           const SizeGuard& guard) {
    if (!splits(partition, n)) {
        throw std::invalid_argument("orbit does not split for this partition and n");
    }
    if (partition.m() != l + k) {
        throw std::invalid_argument("partition ground-set size does not match l + k");
    }
    const std::int64_t total = checked_pow(n, l + k, guard, "full_fpi_table");

    // Materialize the projection as a sparse map: each group element sends
    // the block labelling to an orbit member and the identity word to the
    // image word; the determinant of a basis vector is the sign of its word
    // (zero on repeats, which the splitting hypothesis rules out here).
    std::map<MultiIndex, int> table;
    const MultiIndex labelling = partition.rgs();
    for (const auto& sigma : enumerate_group(n, GroupKind::symmetric, guard)) {
        const MultiIndex member = act(sigma, labelling);
        const int value = det_sign_of_word(sigma.images());
        const auto [it, inserted] = table.emplace(member, value);
        if (!inserted && it->second != value) {
            throw std::logic_error("projection map is not well-defined: conflicting image words");
        }
    }
    for (std::int64_t index = 0; index < total; ++index) {
        table.emplace(delinearize(index, n, l + k), 0);
    }
    return table;
}

SubspaceReport check_basis(const LayerBasis& basis, const SizeGuard& guard) {
    if (basis.is_local()) {
        throw std::invalid_argument("check_basis handles single-factor bases");
    }
    const FactorSpec factor = basis.factors.at(0);
    SubspaceReport report;

    // Per-element commutation, exact.
    bool equivariance_ok = true;
    for (std::size_t index = 0; index < basis.elements.size(); ++index) {
        const auto result =
            verify_equivariance(basis.elements[index].matrix, factor.n, factor.k, factor.l,
                                factor.group, basis.d_k, basis.d_l, guard);
        if (!result.ok) {
            equivariance_ok = false;
            report.failures.push_back({static_cast<std::int64_t>(index),
                                       result.witness ? result.witness->to_string() : "",
                                       result.detail});
        }
    }

    // Supports must be pairwise disjoint (independence is then structural).
    bool supports_ok = true;
    std::set<std::pair<std::int64_t, std::int64_t>> support;
    for (std::size_t index = 0; index < basis.elements.size(); ++index) {
        for (const auto& entry : basis.elements[index].matrix.entries()) {
            if (!support.insert({entry.row, entry.col}).second) {
                supports_ok = false;
                report.failures.push_back(
                    {static_cast<std::int64_t>(index), "",
                     "support overlap at (" + std::to_string(entry.row) + ", " +
                         std::to_string(entry.col) + ")"});
            }
        }
    }
    report.basis_ok = equivariance_ok && supports_ok;

    // Independent dimension count and exact mutual containment of spans.
    auto system = assemble_constraints(factor.n, factor.k, factor.l, factor.group, basis.d_k,
                                       basis.d_l, /*use_generators=*/false, guard);
    const std::int64_t vars = system.rows * system.cols;
    report.dimension = Int(vars - system.echelon.rank());

    IntegerEchelon span(vars);
    std::int64_t span_rank = 0;
    for (const auto& element : basis.elements) {
        if (span.add_row_rational(vectorize(element.matrix))) ++span_rank;
    }
    bool span_ok = span_rank == static_cast<std::int64_t>(basis.elements.size());
    if (!span_ok) {
        report.failures.push_back({-1, "", "constructed elements are linearly dependent"});
    }
    if (report.dimension != static_cast<long>(basis.elements.size())) {
        span_ok = false;
        report.failures.push_back(
            {-1, "",
             "element count " + std::to_string(basis.elements.size()) +
                 " differs from brute-force dimension " + report.dimension.get_str()});
    }
    for (const auto& vector : system.echelon.null_space_basis()) {
        if (!span.in_row_space(vector)) {
            span_ok = false;
            report.failures.push_back(
                {-1, "", "a brute-force solution is outside the constructed span"});
        }
    }
    report.span_ok = span_ok;
    return report;
}

}  // namespace equilayer
