#pragma once

#include <utility>
#include <vector>

#include "equilayer/combinatorics.hpp"
#include "equilayer/errors.hpp"
#include "equilayer/group.hpp"

namespace equilayer {

enum class SignClass { unsplit, plus, minus };

const char* to_string(SignClass sign_class);

// A set of multi-indices in [n]^(l+k) closed under the relevant group
// action, tagged with the set partition it realises. Members are kept in
// lexicographic (= linearized) order.
struct Orbit {
    SetPartition partition;
    int n = 0;
    int l = 0;
    int k = 0;
    SignClass sign_class = SignClass::unsplit;
    std::vector<MultiIndex> members;

    std::int64_t size() const { return static_cast<std::int64_t>(members.size()); }
    bool contains(const MultiIndex& x) const;
};

// The full symmetric-group orbit attached to a partition with t blocks:
// one member per injective assignment of block labels to values in [n],
// so |orbit| = n! / (n-t)!. Contains the block labelling itself.
Orbit sn_orbit(const SetPartition& partition, int n, int l, int k);

// Whether the symmetric-group orbit decomposes into two alternating-group
// orbits: exactly when n >= 2 and the partition has n-1 or n blocks.
// n = 1 never splits (the two groups coincide).
bool splits(const SetPartition& partition, int n);

// Sign separating the two halves of a splitting orbit. Reconstructs the
// unique permutation sending the block labelling to x (unique because
// t in {n-1, n} forces a trivial stabilizer) and returns its sign. Equals
// the determinant-composite evaluation without materializing it.
// Throws std::invalid_argument when x is not an orbit member.
int jellyfish_sign(const SetPartition& partition, const MultiIndex& x, int n);

// Partitions the symmetric orbit by jellyfish_sign. The block labelling
// always lands in the plus half; the halves have equal size.
std::pair<Orbit, Orbit> split_orbit(const SetPartition& partition, int n, int l, int k);

}  // namespace equilayer
