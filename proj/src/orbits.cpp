#include "equilayer/orbits.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace equilayer {

const char* to_string(SignClass sign_class) {
    switch (sign_class) {
        case SignClass::unsplit: return "unsplit";
        case SignClass::plus: return "plus";
        case SignClass::minus: return "minus";
    }
    return "?";
}

bool Orbit::contains(const MultiIndex& x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

namespace {

// All injective maps [t] -> [n] as value tables, in lexicographic order.
void injections(int t, int n, std::vector<int>& assignment, std::vector<bool>& used,
                const std::vector<int>& rgs, std::vector<MultiIndex>& out) {
    if (static_cast<int>(assignment.size()) == t) {
        MultiIndex member(rgs.size());
        for (std::size_t i = 0; i < rgs.size(); ++i) {
            member[i] = assignment[static_cast<std::size_t>(rgs[i]) - 1];
        }
        out.push_back(std::move(member));
        return;
    }
    for (int value = 1; value <= n; ++value) {
        if (used[static_cast<std::size_t>(value) - 1]) continue;
        used[static_cast<std::size_t>(value) - 1] = true;
        assignment.push_back(value);
        injections(t, n, assignment, used, rgs, out);
        assignment.pop_back();
        used[static_cast<std::size_t>(value) - 1] = false;
    }
}

// First (lowest) position of each block, 1-based, indexed by label - 1.
std::vector<int> block_leaders(const SetPartition& partition) {
    std::vector<int> leaders(static_cast<std::size_t>(partition.num_blocks()), 0);
    for (int position = 1; position <= partition.m(); ++position) {
        auto& leader = leaders[static_cast<std::size_t>(partition.label_of(position)) - 1];
        if (leader == 0) leader = position;
    }
    return leaders;
}

}  // namespace

Orbit sn_orbit(const SetPartition& partition, int n, int l, int k) {
    if (partition.num_blocks() > n) {
        throw std::invalid_argument("partition has more blocks than available values");
    }
    if (partition.m() != l + k) {
        throw std::invalid_argument("partition ground-set size does not match l + k");
    }
    Orbit orbit{partition, n, l, k, SignClass::unsplit, {}};
    std::vector<int> assignment;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    injections(partition.num_blocks(), n, assignment, used, partition.rgs(), orbit.members);
    std::sort(orbit.members.begin(), orbit.members.end());

    // Orbit-stabilizer: n! / (n - t)! members, no duplicates.
    std::int64_t expected = 1;
    for (int i = 0; i < partition.num_blocks(); ++i) expected *= n - i;
    assert(orbit.size() == expected);
    (void)expected;
    return orbit;
}

bool splits(const SetPartition& partition, int n) {
    if (partition.num_blocks() > n) {
        throw std::invalid_argument("partition has more blocks than available values");
    }
    const int t = partition.num_blocks();
    return n >= 2 && (t == n - 1 || t == n);
}

int jellyfish_sign(const SetPartition& partition, const MultiIndex& x, int n) {
    const int t = partition.num_blocks();
    if (n < 2 || (t != n - 1 && t != n)) {
        throw std::invalid_argument("sign split is only defined for partitions with n-1 or n blocks");
    }
    if (static_cast<int>(x.size()) != partition.m()) {
        throw std::invalid_argument("multi-index length does not match the partition");
    }

    // The unique sigma with sigma(block labelling) = x sends each block
    // label to x's value at that block's first position. Uniqueness is
    // exactly the trivial-stabilizer situation t in {n-1, n}; the forced
    // extension below and the bijection check validate it.
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    const auto leaders = block_leaders(partition);
    for (int label = 1; label <= t; ++label) {
        const int value = x[static_cast<std::size_t>(leaders[static_cast<std::size_t>(label) - 1]) - 1];
        if (value < 1 || value > n || taken[static_cast<std::size_t>(value) - 1]) {
            throw std::invalid_argument("multi-index is not in the orbit of the partition");
        }
        images[static_cast<std::size_t>(label) - 1] = value;
        taken[static_cast<std::size_t>(value) - 1] = true;
    }
    if (t == n - 1) {
        int free_value = 0;
        for (int value = 1; value <= n; ++value) {
            if (!taken[static_cast<std::size_t>(value) - 1]) free_value = value;
        }
        images[static_cast<std::size_t>(n) - 1] = free_value;
    }

    const Permutation sigma{std::move(images)};
    // Orbit membership: x must be exactly sigma applied to the labelling.
    for (int position = 1; position <= partition.m(); ++position) {
        if (sigma(partition.label_of(position)) != x[static_cast<std::size_t>(position) - 1]) {
            throw std::invalid_argument("multi-index is not in the orbit of the partition");
        }
    }
    return sigma.sign();
}

std::pair<Orbit, Orbit> split_orbit(const SetPartition& partition, int n, int l, int k) {
    if (!splits(partition, n)) {
        throw std::invalid_argument("orbit does not split for this partition and n");
    }
    const Orbit whole = sn_orbit(partition, n, l, k);
    Orbit plus{partition, n, l, k, SignClass::plus, {}};
    Orbit minus{partition, n, l, k, SignClass::minus, {}};
    for (const auto& member : whole.members) {
        (jellyfish_sign(partition, member, n) > 0 ? plus : minus).members.push_back(member);
    }
    assert(plus.size() == minus.size());
    assert(plus.contains(partition.rgs()));  // the labelling's sigma is the identity
    return {std::move(plus), std::move(minus)};
}

}  // namespace equilayer
