#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equilayer/combinatorics.hpp"
#include "equilayer/errors.hpp"
#include "equilayer/sparse.hpp"

namespace equilayer {

enum class GroupKind { symmetric, alternating };

// Permutation of [n], stored by its image table (1-based values).
class Permutation {
public:
    // Identity on [n].
    static Permutation identity(int n);

    // Validates that images is a bijection of [1, n].
    explicit Permutation(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }

    // sigma(i) for 1-based i.
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i) - 1); }

    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    // +1 for even permutations, -1 for odd; exact inversion count.
    int sign() const;

    // Cycle notation, e.g. "(1 2 3)(4 5)"; "id" for the identity.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    bool operator<(const Permutation& other) const { return images_ < other.images_; }

private:
    std::vector<int> images_;
};

// Composition convention: (sigma * tau)(i) = sigma(tau(i)).
Permutation operator*(const Permutation& sigma, const Permutation& tau);

// Entrywise action on a multi-index: result[j] = sigma(x[j]).
MultiIndex act(const Permutation& sigma, const MultiIndex& x);

// All of S_n, or its even half A_n, in lexicographic order of image tables.
// A_1 and A_2 come out as the trivial group with no special casing.
std::vector<Permutation> enumerate_group(int n, GroupKind which,
                                         const SizeGuard& guard = SizeGuard::defaults());

// Row-major linearization of a multi-index over [n]: sum (x[j]-1) * n^(m-1-j).
// This is the one matrix-coordinate convention used repo-wide.
std::int64_t linearize(const MultiIndex& x, int n);

MultiIndex delinearize(std::int64_t index, int n, int order);

// The n^order x n^order permutation matrix of sigma acting entrywise on
// order-length multi-indices. order = 0 gives the 1x1 identity.
SparseMatrix rho(const Permutation& sigma, int order,
                 const SizeGuard& guard = SizeGuard::defaults());

}  // namespace equilayer
