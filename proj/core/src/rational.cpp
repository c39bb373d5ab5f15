#include "toric/rational.hpp"

#include <stdexcept>

namespace toric {

Rat rat_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(Int(std::string(s)));
        }
        Int num{std::string(s.substr(0, slash))};
        Int den{std::string(s.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational literal '" + std::string(s) + "'");
    }
}

Int rat_floor(const Rat& r) {
    Int q, rem;
    divide_qr(numerator(r), denominator(r), q, rem);
    if (rem != 0 && numerator(r) < 0) --q;
    return q;
}

Int rat_ceil(const Rat& r) {
    Int q, rem;
    divide_qr(numerator(r), denominator(r), q, rem);
    if (rem != 0 && numerator(r) > 0) ++q;
    return q;
}

}  // namespace toric
