#ifndef PBPHASE_PHASE_HPP
#define PBPHASE_PHASE_HPP

// Hermitian-phase-operator statistics of partial phase states
//
//     |b> = sum_n b_n exp(i n mu) |n>,   b_n >= 0,
//
// in the limit of an infinite phase window centered on mu. All closed forms are
// written in terms of the amplitude autocorrelation c_d = sum_n b_n b_{n-d}:
//
//     <Phi>          = mu
//     <(dPhi)^2>     = pi^2/3 + 4 sum_{d>=1} (-1)^d c_d / d^2
//     P(theta)       = (1/2pi) (1 + 2 sum_{d>=1} c_d cos(d (theta - mu)))

#include "pbphase/states.hpp"

#include <Eigen/Core>

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbphase {

inline constexpr int kMinGridPoints = 16;
inline constexpr int kDefaultGridPoints = 4096;
/// Peak prominence threshold in density units (1/rad) for figure reproduction.
inline constexpr double kDefaultMinProminence = 5e-3;

struct PartialPhaseState
{
    FockAmplitudes moduli;
    double mu = 0.0;
};

struct PhaseStatistics
{
    double mean = 0.0;
    double variance = 0.0;
};

/// Density samples on a uniform circular grid; thetas ascending.
struct PhaseDistribution
{
    Eigen::VectorXd thetas;
    Eigen::VectorXd values;

    /// Rectangle rule over the full circle (equal to the trapezoid rule on a periodic grid).
    double integral() const;
};

/// c_d = sum_n b_n b_{n-d} for d = 0..M.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>
amplitude_autocorrelation(const Eigen::MatrixBase<Derived>& b)
{
    using Vector = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>;
    const Eigen::Index size = b.size();
    Vector c(size);
    for (Eigen::Index d = 0; d < size; ++d)
        c[d] = b.tail(size - d).dot(b.head(size - d));
    return c;
}

template <typename Derived>
typename Derived::Scalar closed_form_variance(const Eigen::MatrixBase<Derived>& b)
{
    using Scalar = typename Derived::Scalar;
    const auto c = amplitude_autocorrelation(b);
    Scalar correction(0);
    for (Eigen::Index d = 1; d < c.size(); ++d) {
        const Scalar term = c[d] / Scalar(d * d);
        correction += (d % 2 == 0) ? term : -term;
    }
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    return pi * pi / Scalar(3) + Scalar(4) * correction;
}

/// P evaluated at the given offsets theta - mu.
template <typename Derived, typename OtherDerived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>
closed_form_density(const Eigen::MatrixBase<Derived>& b, const Eigen::MatrixBase<OtherDerived>& offsets)
{
    using Scalar = typename Derived::Scalar;
    using Array = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
    const auto c = amplitude_autocorrelation(b);
    Array series = Array::Ones(offsets.size());
    for (Eigen::Index d = 1; d < c.size(); ++d)
        series += Scalar(2) * c[d] * (Scalar(d) * offsets.array()).cos();
    return (series / (Scalar(2) * std::numbers::pi_v<Scalar>)).matrix();
}

/// theta_k = -pi + 2 pi k / grid_points, k = 0..grid_points-1.
Eigen::VectorXd phase_grid(int grid_points);

double mean_phase(const PartialPhaseState& state);
double phase_variance(const PartialPhaseState& state);
PhaseStatistics phase_statistics(const PartialPhaseState& state);

/// Samples P(theta) on phase_grid(grid_points). Throws GridTooCoarse below 16 points.
PhaseDistribution phase_distribution(const PartialPhaseState& state, int grid_points = kDefaultGridPoints);

/// Counts strict local maxima of the circularly wrapped samples that rise at
/// least `min_prominence` above the nearest local minimum on each side.
/// Runs of equal samples count as a single candidate, so a flat distribution has no peaks.
int count_peaks(const PhaseDistribution& dist, double min_prominence = kDefaultMinProminence);

/// Copy of `spec` with one named parameter replaced (eta, M, L, gamma, alpha,
/// beta_h, beta, s). Throws std::invalid_argument for a name the family lacks
/// or a non-integral value for an integer parameter.
StateSpec with_parameter(const StateSpec& spec, std::string_view name, double value);

struct SweepRow
{
    double value = 0.0;
    std::optional<double> variance; ///< empty when the substituted spec failed
    std::string error;
};

/// Phase variance for each substituted value, rows in input order.
std::vector<SweepRow> variance_sweep(const StateSpec& base, std::string_view parameter,
                                     std::span<const double> values);

} // namespace pbphase

#endif // PBPHASE_PHASE_HPP
