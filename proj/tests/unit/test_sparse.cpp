#include <doctest.h>

#include "equilayer/sparse.hpp"

using namespace equilayer;

TEST_SUITE("sparse") {

TEST_CASE("from_triplets sorts, merges and drops zeros") {
    const auto m = SparseMatrix::from_triplets(
        2, 2, {{1, 1, Rat(2)}, {0, 0, Rat(1)}, {1, 1, Rat(-2)}, {0, 1, Rat(3)}});
    CHECK(m.nnz() == 2);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 3);
    CHECK(m.at(1, 1) == 0);
    CHECK_THROWS_AS(SparseMatrix::from_triplets(1, 1, {{0, 1, Rat(1)}}), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    const auto a = SparseMatrix::from_triplets(2, 2, {{0, 0, Rat(1)}, {1, 0, Rat(2)}});
    const auto b = SparseMatrix::from_triplets(2, 2, {{0, 0, Rat(-1)}, {0, 1, Rat(1)}});
    const auto sum = a + b;
    CHECK(sum.nnz() == 2);
    CHECK(sum.at(0, 1) == 1);
    CHECK(sum.at(1, 0) == 2);
    CHECK((a - a).is_zero());
    CHECK(a.scaled(make_rat(1, 2)).at(1, 0) == 1);

    const auto product = a * b;
    CHECK(product.at(0, 0) == -1);
    CHECK(product.at(0, 1) == 1);
    CHECK(product.at(1, 0) == -2);
    CHECK(product.at(1, 1) == 2);

    CHECK(SparseMatrix::identity(2) * a == a);
    CHECK(a * SparseMatrix::identity(2) == a);
}

TEST_CASE("kron layout: left factor is the slow axis") {
    const auto a = SparseMatrix::from_triplets(2, 1, {{1, 0, Rat(2)}});
    const auto b = SparseMatrix::from_triplets(1, 3, {{0, 2, Rat(3)}});
    const auto product = kron(a, b);
    CHECK(product.rows() == 2);
    CHECK(product.cols() == 3);
    CHECK(product.at(1, 2) == 6);
    CHECK(product.nnz() == 1);
}

TEST_CASE("exact rational entries") {
    const auto half = SparseMatrix::from_triplets(1, 1, {{0, 0, make_rat(1, 2)}});
    const auto third = SparseMatrix::from_triplets(1, 1, {{0, 0, make_rat(1, 3)}});
    CHECK((half + third).at(0, 0) == make_rat(5, 6));
    CHECK((half * third).at(0, 0) == make_rat(1, 6));
}

}  // TEST_SUITE
