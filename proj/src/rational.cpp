#include "equilayer/rational.hpp"

#include <stdexcept>

namespace equilayer {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat value(num, den);
    value.canonicalize();
    return value;
}

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return make_rat(Int(text), Int(1));
        }
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("malformed rational '" + text + "': " + e.what());
    }
}

std::string to_string(const Rat& value) {
    return value.get_str();
}

}  // namespace equilayer
