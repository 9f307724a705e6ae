#ifndef PBPHASE_SPECFUN_HPP
#define PBPHASE_SPECFUN_HPP

// Real-argument combinatorial functions. Everything here is a pure function.

#include <cassert>
#include <cstddef>
#include <limits>
#include <span>

namespace pbphase {

/// Factors with magnitude below this are an exact zero of the product.
inline constexpr double kZeroFactorThreshold = 1e-300;

/// Generalized binomial coefficient x(x-1)...(x-n+1)/n! for real x.
///
/// The numerator and the factorial are interleaved so the running value stays
/// O(result) instead of overflowing; for integer 0 <= x < n the factor (x - x)
/// makes the result an exact zero.
template <typename Scalar>
Scalar gen_binomial(Scalar x, int n)
{
    assert(n >= 0);
    Scalar result(1);
    for (int k = 0; k < n; ++k)
        result *= (x - Scalar(k)) / Scalar(k + 1);
    return result;
}

/// Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1.
template <typename Scalar>
Scalar pochhammer(Scalar x, int n)
{
    assert(n >= 0);
    Scalar result(1);
    for (int k = 0; k < n; ++k)
        result *= x + Scalar(k);
    return result;
}

/// Natural log of a product of positive factors.
///
/// A product containing a factor below kZeroFactorThreshold is an exact zero
/// and carries log_magnitude = -inf.
struct LogFactorProduct
{
    double log_magnitude = 0.0;
    std::size_t factor_count = 0;

    bool is_zero() const noexcept { return log_magnitude == -std::numeric_limits<double>::infinity(); }
    double value() const noexcept;
};

/// Sums the logs of `factors` with compensated addition.
/// Throws NonPositiveFactor for a negative or NaN entry.
LogFactorProduct log_positive_product(std::span<const double> factors);

} // namespace pbphase

#endif // PBPHASE_SPECFUN_HPP
