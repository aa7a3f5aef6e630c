#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "equilayer/rational.hpp"

namespace equilayer {

// A tuple in [n]^m indexing a standard basis vector of the m-th tensor
// power. Entries are 1-based.
using MultiIndex = std::vector<int>;

// A set partition of {1, ..., m} stored as its restricted-growth string:
// position i (1-based) holds the label of the block containing i, blocks
// numbered by first appearance. The string is simultaneously the canonical
// block labelling used to seed orbit representatives.
class SetPartition {
public:
    // Empty partition of the empty set (m = 0, no blocks).
    SetPartition() = default;

    // Validates the restricted-growth property: rgs[0] == 1 and each entry
    // exceeds the running maximum by at most one.
    explicit SetPartition(std::vector<int> rgs);

    static SetPartition from_blocks(int m, const std::vector<std::vector<int>>& blocks);

    int m() const { return static_cast<int>(rgs_.size()); }
    int num_blocks() const { return num_blocks_; }
    const std::vector<int>& rgs() const { return rgs_; }

    // Block label of a 1-based position.
    int label_of(int position) const { return rgs_.at(static_cast<std::size_t>(position) - 1); }

    // Blocks as sorted 1-based position lists, in label order.
    std::vector<std::vector<int>> blocks() const;

    // "{1,2|3}" style display.
    std::string to_string() const;

    // Compact rgs form, e.g. "1,1,2".
    std::string rgs_string() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    std::strong_ordering operator<=>(const SetPartition& other) const {
        return rgs_ <=> other.rgs_;
    }

private:
    std::vector<int> rgs_;
    int num_blocks_ = 0;
};

// All set partitions of [m] with at most max_blocks blocks, in lexicographic
// order of their restricted-growth strings. m = 0 yields the single empty
// partition, so order-0 tensor factors need no special casing downstream.
std::vector<SetPartition> enumerate_partitions(int m, int max_blocks);

// Stirling number of the second kind: partitions of [m] into exactly t
// blocks. Out-of-range (t > m, or t = 0 with m > 0) gives 0.
Int stirling2(int m, int t);

// Restricted Bell number: partitions of [m] with at most n blocks. Equals
// the length of enumerate_partitions(m, n).
Int bell_restricted(int m, int n);

// Splits the restricted-growth string of a partition of [l+k] at position l
// into the pair (row multi-index of length l, column multi-index of length k).
std::pair<MultiIndex, MultiIndex> block_labelling(const SetPartition& partition, int l, int k);

}  // namespace equilayer
