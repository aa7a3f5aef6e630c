#include "equilayer/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace equilayer {

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int value : images_) {
        if (value < 1 || value > static_cast<int>(images_.size()) ||
            seen[static_cast<std::size_t>(value) - 1]) {
            throw std::invalid_argument("image table is not a bijection of [n]");
        }
        seen[static_cast<std::size_t>(value) - 1] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= degree(); ++i) {
        inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
    }
    return Permutation(std::move(inv));
}

int Permutation::sign() const {
    int inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = i + 1; j < images_.size(); ++j) {
            if (images_[i] > images_[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::string Permutation::to_string() const {
    std::string out;
    std::vector<bool> visited(images_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
        if (visited[static_cast<std::size_t>(start) - 1] || (*this)(start) == start) continue;
        out += "(";
        int current = start;
        bool first = true;
        while (!visited[static_cast<std::size_t>(current) - 1]) {
            visited[static_cast<std::size_t>(current) - 1] = true;
            if (!first) out += " ";
            out += std::to_string(current);
            first = false;
            current = (*this)(current);
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
    if (sigma.degree() != tau.degree()) {
        throw std::invalid_argument("composing permutations of different degree");
    }
    std::vector<int> images(static_cast<std::size_t>(sigma.degree()));
    for (int i = 1; i <= sigma.degree(); ++i) {
        images[static_cast<std::size_t>(i) - 1] = sigma(tau(i));
    }
    return Permutation(std::move(images));
}

MultiIndex act(const Permutation& sigma, const MultiIndex& x) {
    MultiIndex result(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 1 || x[i] > sigma.degree()) {
            throw std::invalid_argument("multi-index entry outside [n]");
        }
        result[i] = sigma(x[i]);
    }
    return result;
}

std::vector<Permutation> enumerate_group(int n, GroupKind which, const SizeGuard& guard) {
    if (n < 1) throw std::invalid_argument("group degree must be positive");
    guard.check_degree(n);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation sigma(images);
        if (which == GroupKind::alternating && sigma.sign() != 1) continue;
        out.push_back(std::move(sigma));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::int64_t linearize(const MultiIndex& x, int n) {
    std::int64_t index = 0;
    for (int entry : x) {
        if (entry < 1 || entry > n) throw std::invalid_argument("multi-index entry outside [n]");
        index = index * n + (entry - 1);
    }
    return index;
}

MultiIndex delinearize(std::int64_t index, int n, int order) {
    MultiIndex x(static_cast<std::size_t>(order));
    for (int j = order - 1; j >= 0; --j) {
        x[static_cast<std::size_t>(j)] = static_cast<int>(index % n) + 1;
        index /= n;
    }
    return x;
}

SparseMatrix rho(const Permutation& sigma, int order, const SizeGuard& guard) {
    if (order < 0) throw std::invalid_argument("negative tensor order");
    const std::int64_t dim = checked_pow(sigma.degree(), order, guard, "rho");
    std::vector<SparseMatrix::Entry> triplets;
    triplets.reserve(static_cast<std::size_t>(dim));
    for (std::int64_t col = 0; col < dim; ++col) {
        const MultiIndex x = delinearize(col, sigma.degree(), order);
        triplets.push_back({linearize(act(sigma, x), sigma.degree()), col, Rat(1)});
    }
    return SparseMatrix::from_triplets(dim, dim, std::move(triplets));
}

}  // namespace equilayer
