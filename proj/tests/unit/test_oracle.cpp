#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "equilayer/elimination.hpp"
#include "equilayer/oracle.hpp"

using namespace equilayer;

TEST_SUITE("oracle") {

TEST_CASE("echelon form: rank, null space, canonical output") {
    // x + y = 0, y + z = 0 over three variables.
    IntegerEchelon echelon(3);
    CHECK(echelon.add_row({{0, 1}, {1, 1}}));
    CHECK(echelon.add_row({{1, 1}, {2, 1}}));
    CHECK_FALSE(echelon.add_row({{0, 1}, {2, -1}}));  // dependent
    CHECK(echelon.rank() == 2);

    const auto null_basis = echelon.null_space_basis();
    REQUIRE(null_basis.size() == 1);
    CHECK(null_basis[0] ==
          SparseRatVec{{0, Rat(1)}, {1, Rat(-1)}, {2, Rat(1)}});

    // Same row space fed in a different order and scaling: identical output.
    IntegerEchelon other(3);
    other.add_row({{1, 3}, {2, 3}});
    other.add_row({{0, -2}, {1, -2}});
    other.add_row({{0, 5}, {1, 5}});
    CHECK(other.rank() == 2);
    CHECK(other.null_space_basis() == null_basis);

    CHECK(echelon.in_row_space({{0, Rat(2)}, {2, Rat(-2)}}));
    CHECK_FALSE(echelon.in_row_space({{0, Rat(1)}}));
}

TEST_CASE("echelon handles rational input rows exactly") {
    IntegerEchelon echelon(2);
    echelon.add_row_rational({{0, make_rat(1, 3)}, {1, make_rat(-1, 6)}});
    CHECK(echelon.rank() == 1);
    const auto null_basis = echelon.null_space_basis();
    REQUIRE(null_basis.size() == 1);
    // 2x = y, free y = 1.
    CHECK(null_basis[0] == SparseRatVec{{0, make_rat(1, 2)}, {1, Rat(1)}});
}

TEST_CASE("dimensions agree with orbit counting by averaged fixed points") {
    // Third route, independent of both the census and the elimination: the
    // equivariant dimension is the number of group orbits on index tuples,
    // which is the average over the group of (#fixed points)^(l+k).
    const auto burnside = [](int n, int m, GroupKind group) {
        const auto elements = enumerate_group(n, group);
        Int total = 0;
        for (const auto& sigma : elements) {
            long fixed = 0;
            for (int i = 1; i <= n; ++i) fixed += sigma(i) == i;
            Int power = 1;
            for (int i = 0; i < m; ++i) power *= fixed;
            total += power;
        }
        Int quotient, remainder;
        mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), total.get_mpz_t(),
                    Int(static_cast<long>(elements.size())).get_mpz_t());
        CHECK(remainder == 0);
        return quotient;
    };
    for (int n = 1; n <= 5; ++n) {
        for (int m = 0; m <= 5; ++m) {
            CHECK(burnside(n, m, GroupKind::alternating) == an_dim(n, 0, m));
            CHECK(burnside(n, m, GroupKind::symmetric) == sn_dim(n, 0, m));
        }
    }
    CHECK(burnside(4, 3, GroupKind::alternating) == 6);  // settles the n=4, l+k=3 case
}

TEST_CASE("echelon null spaces check out against a dense reference") {
    // Independent reference: textbook rational row reduction on a dense
    // matrix, used only to rank-check the sparse fraction-free engine.
    const auto dense_rank = [](std::vector<std::vector<Rat>> m) {
        std::size_t rank = 0;
        const std::size_t rows = m.size();
        const std::size_t cols = m.empty() ? 0 : m[0].size();
        for (std::size_t col = 0; col < cols && rank < rows; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows && m[pivot][col] == 0) ++pivot;
            if (pivot == rows) continue;
            std::swap(m[rank], m[pivot]);
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == rank || m[r][col] == 0) continue;
                const Rat factor = m[r][col] / m[rank][col];
                for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
            }
            ++rank;
        }
        return rank;
    };

    std::uint64_t state = 12345;
    const auto next = [&state]() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 2685821657736338717ULL;
    };

    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 2 + next() % 6;
        const std::size_t cols = 2 + next() % 5;
        std::vector<std::vector<Rat>> dense(rows, std::vector<Rat>(cols, Rat(0)));
        IntegerEchelon echelon(static_cast<std::int64_t>(cols));
        for (std::size_t r = 0; r < rows; ++r) {
            SparseIntRow row;
            for (std::size_t c = 0; c < cols; ++c) {
                const long value = static_cast<long>(next() % 7) - 3;
                if (value == 0) continue;
                dense[r][c] = value;
                row.emplace_back(static_cast<std::int64_t>(c), Int(value));
            }
            echelon.add_row(std::move(row));
        }

        CHECK(echelon.rank() == static_cast<std::int64_t>(dense_rank(dense)));
        const auto null_basis = echelon.null_space_basis();
        CHECK(null_basis.size() == cols - dense_rank(dense));
        for (const auto& vector : null_basis) {
            for (std::size_t r = 0; r < rows; ++r) {
                Rat dot = 0;
                for (const auto& [c, value] : vector) {
                    dot += dense[r][static_cast<std::size_t>(c)] * value;
                }
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("brute-force dimensions match the worked values") {
    CHECK(equivariant_dimension_bruteforce(2, 2, 1, GroupKind::alternating) == 8);
    CHECK(equivariant_dimension_bruteforce(3, 2, 1, GroupKind::symmetric) == 5);
    CHECK(equivariant_dimension_bruteforce(3, 2, 1, GroupKind::alternating) == 9);
}

TEST_CASE("brute force agrees with the census formulas") {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 0; k <= 3; ++k) {
            for (int l = 0; k + l <= 3; ++l) {
                CHECK(equivariant_dimension_bruteforce(n, k, l, GroupKind::alternating) ==
                      an_dim(n, k, l));
                CHECK(equivariant_dimension_bruteforce(n, k, l, GroupKind::symmetric) ==
                      sn_dim(n, k, l));
            }
        }
    }
}

TEST_CASE("generator-based assembly gives bit-identical results") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto group : {GroupKind::symmetric, GroupKind::alternating}) {
            for (int k = 0; k <= 2; ++k) {
                for (int l = 0; k + l <= 3; ++l) {
                    CHECK(equivariant_dimension_bruteforce(n, k, l, group, 1, 1, false) ==
                          equivariant_dimension_bruteforce(n, k, l, group, 1, 1, true));
                    CHECK(equivariant_nullspace_bruteforce(n, k, l, group, 1, 1, false) ==
                          equivariant_nullspace_bruteforce(n, k, l, group, 1, 1, true));
                }
            }
        }
    }
}

TEST_CASE("verify_equivariance") {
    const SparseMatrix zero(9, 3);
    CHECK(verify_equivariance(zero, 3, 1, 2, GroupKind::symmetric).ok);

    for (const auto& element : layer_basis(3, 2, 1, GroupKind::alternating).elements) {
        CHECK(verify_equivariance(element.matrix, 3, 2, 1, GroupKind::alternating).ok);
    }

    // A lone matrix unit from a 3-member orbit cannot commute.
    const auto lone = SparseMatrix::from_triplets(3, 9, {{0, 0, Rat(1)}});
    const auto result = verify_equivariance(lone, 3, 2, 1, GroupKind::symmetric);
    CHECK_FALSE(result.ok);
    CHECK(result.witness.has_value());
    CHECK_FALSE(result.detail.empty());

    CHECK_THROWS_AS(verify_equivariance(zero, 3, 2, 1, GroupKind::symmetric),
                    std::invalid_argument);  // dimension mismatch
}

TEST_CASE("determinant-composite table on the worked example") {
    const SetPartition whole({1, 1, 1});
    const auto table = split_sign_table(whole, 2, 1, 2);
    CHECK(table.size() == 8);
    CHECK(table.at({1, 1, 1}) == 1);
    CHECK(table.at({2, 2, 2}) == -1);
    CHECK(table.at({1, 1, 2}) == 0);
    int nonzero = 0;
    for (const auto& [index, value] : table) nonzero += value != 0;
    CHECK(nonzero == 2);
}

TEST_CASE("table agrees with the production sign on every orbit member") {
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= 4; ++m) {
            const int l = m / 2;
            const int k = m - l;
            for (const auto& partition : enumerate_partitions(m, n)) {
                if (!splits(partition, n)) continue;
                const auto table = split_sign_table(partition, n, l, k);
                const auto orbit = sn_orbit(partition, n, l, k);
                std::int64_t nonzero = 0;
                for (const auto& [index, value] : table) {
                    if (value != 0) {
                        ++nonzero;
                        CHECK(jellyfish_sign(partition, index, n) == value);
                        CHECK(orbit.contains(index));
                    } else {
                        CHECK_FALSE(orbit.contains(index));
                    }
                }
                CHECK(nonzero == orbit.size());
            }
        }
    }
}

TEST_CASE("table transforms by the sign character") {
    for (int n = 2; n <= 3; ++n) {
        const auto group = enumerate_group(n, GroupKind::symmetric);
        for (int m = 1; m <= 3; ++m) {
            for (const auto& partition : enumerate_partitions(m, n)) {
                if (!splits(partition, n)) continue;
                const auto table = split_sign_table(partition, n, 0, m);
                for (const auto& [index, value] : table) {
                    for (const auto& sigma : group) {
                        CHECK(table.at(act(sigma, index)) == sigma.sign() * value);
                    }
                }
            }
        }
    }
}

TEST_CASE("check_basis validates the constructions") {
    const auto report = check_basis(layer_basis(3, 1, 1, GroupKind::symmetric));
    CHECK(report.dimension == 2);
    CHECK(report.basis_ok);
    CHECK(report.span_ok);
    CHECK(report.ok());

    // Both arithmetic paths must settle this one to 3.
    const auto alternating = check_basis(layer_basis(3, 1, 1, GroupKind::alternating));
    CHECK(alternating.dimension == 3);
    CHECK(alternating.dimension == an_dim(3, 1, 1));
    CHECK(alternating.ok());

    const auto full = check_basis(layer_basis(2, 2, 1, GroupKind::alternating));
    CHECK(full.dimension == 8);  // the entire 2x4 space
    CHECK(full.ok());
}

TEST_CASE("check_basis flags corrupted bases") {
    auto basis = layer_basis(2, 1, 1, GroupKind::alternating);
    basis.elements[0].matrix = SparseMatrix::from_triplets(2, 2, {{0, 1, Rat(1)}});
    const auto report = check_basis(basis);
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.failures.empty());

    auto missing = layer_basis(3, 1, 1, GroupKind::symmetric);
    missing.elements.pop_back();
    const auto short_report = check_basis(missing);
    CHECK(short_report.basis_ok);       // the remaining element is still equivariant
    CHECK_FALSE(short_report.span_ok);  // but the span is short
}

TEST_CASE("featured brute force scales by the channel count") {
    CHECK(equivariant_dimension_bruteforce(2, 1, 1, GroupKind::alternating, 2, 3) ==
          an_dim(2, 1, 1) * 6);
    const auto featured = with_features(layer_basis(2, 1, 1, GroupKind::alternating), 2, 3);
    const auto report = check_basis(featured);
    CHECK(report.ok());
    CHECK(report.dimension == 24);
}

}  // TEST_SUITE
