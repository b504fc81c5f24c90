#pragma once

#include <cstdint>

namespace defzero {

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

/// Two-sided z for 95% coverage.
inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for `successes` out of `trials` (trials > 0).
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

/// Wilson-based standard error: the half-width of the z = 1 Wilson interval.
/// Unlike sqrt(p(1-p)/n) it stays positive at p = 0 and p = 1.
double wilson_sigma(std::uint64_t successes, std::uint64_t trials);

} // namespace defzero
