#include "equilayer/errors.hpp"

#include <cstdlib>
#include <string>

namespace equilayer {

const SizeGuard& SizeGuard::defaults() {
    static const SizeGuard guard = [] {
        SizeGuard g;
        if (const char* env = std::getenv("EQUILAYER_MAX_SIZE")) {
            try {
                g.max_cells = std::stoll(env);
            } catch (const std::exception&) {
                // unparsable override: keep the default
            }
        }
        return g;
    }();
    return guard;
}

void SizeGuard::check_cells(std::int64_t cells, const std::string& context) const {
    if (cells < 0 || cells > max_cells) {
        throw ResourceLimitError(context + ": " + std::to_string(cells) +
                                 " cells exceeds the size bound of " + std::to_string(max_cells) +
                                 " (override with EQUILAYER_MAX_SIZE or --max-size)");
    }
}

void SizeGuard::check_degree(int n) const {
    if (n > max_group_degree) {
        throw ResourceLimitError("group enumeration of degree " + std::to_string(n) +
                                 " exceeds the bound of " + std::to_string(max_group_degree));
    }
}

std::int64_t checked_pow(std::int64_t base, int exponent, const SizeGuard& guard,
                         const std::string& context) {
    std::int64_t result = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && result > guard.max_cells / base) {
            throw ResourceLimitError(context + ": " + std::to_string(base) + "^" +
                                     std::to_string(exponent) + " exceeds the size bound of " +
                                     std::to_string(guard.max_cells));
        }
        result *= base;
    }
    guard.check_cells(result, context);
    return result;
}

}  // namespace equilayer
