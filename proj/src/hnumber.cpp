#include "hyper/hnumber.hpp"

namespace hyper {

HNumber exp(const HNumber& z) {
    const SplitPair s = split(z);
    return join(SplitPair{std::exp(s.plus), std::exp(s.minus)});
}

namespace {
constexpr double kZeroGuard = 1e-12;
}

bool is_invertible(const HNumber& z) {
    const SplitPair s = split(z);
    const double floor = kZeroGuard * (1.0 + z.norm());
    return std::abs(s.plus) >= floor && std::abs(s.minus) >= floor;
}

std::optional<HNumber> inverse(const HNumber& z) {
    if (!is_invertible(z)) return std::nullopt;
    const SplitPair s = split(z);
    return join(SplitPair{1.0 / s.plus, 1.0 / s.minus});
}

} // namespace hyper
