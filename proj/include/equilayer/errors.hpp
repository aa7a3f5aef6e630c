#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace equilayer {

// Thrown when a requested computation would exceed the configured size
// bounds (matrix cells, group degree). Maps to CLI exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Global size bounds. Combinatorial blow-ups become a clean error instead
// of an OOM kill. EQUILAYER_MAX_SIZE overrides max_cells.
struct SizeGuard {
    std::int64_t max_cells = 10'000'000;  // cap on nonzero candidates / matrix cells
    int max_group_degree = 8;             // cap on n for full group enumeration

    // Reads EQUILAYER_MAX_SIZE once; falls back to the defaults above.
    static const SizeGuard& defaults();

    void check_cells(std::int64_t cells, const std::string& context) const;
    void check_degree(int n) const;
};

// Checked n^e as int64; throws ResourceLimitError against `guard` on overflow
// or when the result exceeds guard.max_cells.
std::int64_t checked_pow(std::int64_t base, int exponent, const SizeGuard& guard,
                         const std::string& context);

}  // namespace equilayer
