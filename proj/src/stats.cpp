#include "defzero/stats.hpp"

#include "defzero/errors.hpp"

#include <algorithm>
#include <cmath>

namespace defzero {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z)
{
    if (trials == 0)
        throw DomainError("Wilson interval needs at least one trial");
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    // Clamp so rounding never puts the point estimate outside its own interval.
    return {std::clamp(std::min(centre - half, phat), 0.0, 1.0), std::clamp(std::max(centre + half, phat), 0.0, 1.0)};
}

double wilson_sigma(std::uint64_t successes, std::uint64_t trials)
{
    const Interval iv = wilson_interval(successes, trials, 1.0);
    return (iv.high - iv.low) / 2.0;
}

} // namespace defzero
