#include "pbphase/specfun.hpp"

#include "pbphase/errors.hpp"

#include <cmath>
#include <string>

namespace pbphase {

double LogFactorProduct::value() const noexcept
{
    return is_zero() ? 0.0 : std::exp(log_magnitude);
}

LogFactorProduct log_positive_product(std::span<const double> factors)
{
    LogFactorProduct out;
    out.factor_count = factors.size();

    // Neumaier summation
    double sum = 0.0;
    double carry = 0.0;
    bool zero = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const double f = factors[i];
        if (!(f >= 0.0))
            throw NonPositiveFactor(i, f);
        if (f < kZeroFactorThreshold) {
            zero = true;
            continue;
        }
        const double term = std::log(f);
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            carry += (sum - t) + term;
        else
            carry += (term - t) + sum;
        sum = t;
    }
    out.log_magnitude = zero ? -std::numeric_limits<double>::infinity() : sum + carry;
    return out;
}

} // namespace pbphase
