#include "equilayer/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace equilayer {

SetPartition::SetPartition(std::vector<int> rgs) : rgs_(std::move(rgs)) {
    int running_max = 0;
    for (std::size_t i = 0; i < rgs_.size(); ++i) {
        const int label = rgs_[i];
        if (label < 1 || label > running_max + 1) {
            throw std::invalid_argument("not a restricted-growth string at position " +
                                        std::to_string(i + 1));
        }
        running_max = std::max(running_max, label);
    }
    num_blocks_ = running_max;
}

SetPartition SetPartition::from_blocks(int m, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> labels(static_cast<std::size_t>(m), 0);
    for (const auto& block : blocks) {
        for (int position : block) {
            if (position < 1 || position > m) {
                throw std::invalid_argument("block element out of range");
            }
            if (labels[static_cast<std::size_t>(position) - 1] != 0) {
                throw std::invalid_argument("blocks are not disjoint");
            }
            labels[static_cast<std::size_t>(position) - 1] = 1;  // mark covered
        }
    }
    for (int covered : labels) {
        if (covered == 0) throw std::invalid_argument("blocks do not cover the ground set");
    }

    // Relabel by first appearance to recover the canonical string.
    std::fill(labels.begin(), labels.end(), 0);
    int next_label = 0;
    for (int position = 1; position <= m; ++position) {
        if (labels[static_cast<std::size_t>(position) - 1] != 0) continue;
        ++next_label;
        for (const auto& block : blocks) {
            if (std::find(block.begin(), block.end(), position) == block.end()) continue;
            for (int member : block) labels[static_cast<std::size_t>(member) - 1] = next_label;
            break;
        }
    }
    return SetPartition(std::move(labels));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> result(static_cast<std::size_t>(num_blocks_));
    for (int position = 1; position <= m(); ++position) {
        result[static_cast<std::size_t>(label_of(position)) - 1].push_back(position);
    }
    return result;
}

std::string SetPartition::to_string() const {
    std::string out = "{";
    const auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
        if (b > 0) out += "|";
        for (std::size_t i = 0; i < bs[b].size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(bs[b][i]);
        }
    }
    out += "}";
    return out;
}

std::string SetPartition::rgs_string() const {
    std::string out;
    for (std::size_t i = 0; i < rgs_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(rgs_[i]);
    }
    return out;
}

namespace {

void extend_rgs(std::vector<int>& prefix, int m, int max_blocks, int running_max,
                std::vector<SetPartition>& out) {
    if (static_cast<int>(prefix.size()) == m) {
        out.emplace_back(prefix);
        return;
    }
    const int limit = std::min(running_max + 1, max_blocks);
    for (int label = 1; label <= limit; ++label) {
        prefix.push_back(label);
        extend_rgs(prefix, m, max_blocks, std::max(running_max, label), out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<SetPartition> enumerate_partitions(int m, int max_blocks) {
    if (m < 0) throw std::invalid_argument("negative ground-set size");
    if (m == 0) return {SetPartition()};
    if (max_blocks < 1) return {};
    std::vector<SetPartition> out;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(m));
    extend_rgs(prefix, m, max_blocks, 0, out);
    return out;
}

Int stirling2(int m, int t) {
    if (m < 0 || t < 0) return 0;
    if (t > m) return 0;
    if (m == 0) return 1;  // t == 0 here
    if (t == 0) return 0;
    // S(i, j) = j S(i-1, j) + S(i-1, j-1), rolling row.
    std::vector<Int> row(static_cast<std::size_t>(t) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= m; ++i) {
        for (int j = std::min(i, t); j >= 1; --j) {
            row[static_cast<std::size_t>(j)] =
                Int(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(t)];
}

Int bell_restricted(int m, int n) {
    if (m < 0) return 0;
    if (m == 0) return 1;
    Int total = 0;
    for (int t = 1; t <= std::min(m, n); ++t) total += stirling2(m, t);
    return total;
}

std::pair<MultiIndex, MultiIndex> block_labelling(const SetPartition& partition, int l, int k) {
    if (l < 0 || k < 0 || partition.m() != l + k) {
        throw std::invalid_argument("partition ground-set size does not match l + k");
    }
    const auto& rgs = partition.rgs();
    MultiIndex row(rgs.begin(), rgs.begin() + l);
    MultiIndex col(rgs.begin() + l, rgs.end());
    return {std::move(row), std::move(col)};
}

}  // namespace equilayer
