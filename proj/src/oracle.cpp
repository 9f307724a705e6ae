#include "pbphase/oracle.hpp"

#include "pbphase/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pbphase {

namespace {

using std::numbers::pi;

class CompensatedSum
{
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

void check_window(const FiniteWindow& window, const PartialPhaseState& state)
{
    if (window.s_pb < 1)
        throw IndexOutOfWindow("window needs s_pb >= 1, got " + std::to_string(window.s_pb));
    if (state.moduli.cutoff() > window.s_pb)
        throw IndexOutOfWindow("state cutoff " + std::to_string(state.moduli.cutoff()) +
                               " exceeds window s_pb " + std::to_string(window.s_pb));
}

double overlap_unchecked(const FiniteWindow& window, int m, const PartialPhaseState& state)
{
    const Eigen::VectorXd& b = state.moduli.coefficients();
    const double phase = state.mu - window.angle(m);
    CompensatedSum re;
    CompensatedSum im;
    for (Eigen::Index n = 0; n < b.size(); ++n) {
        re.add(b[n] * std::cos(static_cast<double>(n) * phase));
        im.add(b[n] * std::sin(static_cast<double>(n) * phase));
    }
    return (re.value() * re.value() + im.value() * im.value()) / window.dimension();
}

} // namespace

FiniteWindow FiniteWindow::centered(int s_pb, double mu)
{
    return FiniteWindow{s_pb, mu - pi + pi / (s_pb + 1)};
}

double FiniteWindow::angle(int m) const
{
    return theta0 + 2.0 * pi * m / dimension();
}

double phase_state_overlap(const FiniteWindow& window, int m, const PartialPhaseState& state)
{
    check_window(window, state);
    if (m < 0 || m > window.s_pb)
        throw IndexOutOfWindow("phase index " + std::to_string(m) + " outside [0, " +
                               std::to_string(window.s_pb) + "]");
    return overlap_unchecked(window, m, state);
}

PhaseStatistics finite_moments(const FiniteWindow& window, const PartialPhaseState& state)
{
    check_window(window, state);
    Eigen::VectorXd weights(window.dimension());
    for (int m = 0; m <= window.s_pb; ++m)
        weights[m] = overlap_unchecked(window, m, state);

    CompensatedSum first;
    for (int m = 0; m <= window.s_pb; ++m)
        first.add(window.angle(m) * weights[m]);
    const double mean = first.value();

    CompensatedSum second;
    for (int m = 0; m <= window.s_pb; ++m) {
        const double offset = window.angle(m) - mean;
        second.add(offset * offset * weights[m]);
    }
    return PhaseStatistics{mean, second.value()};
}

PhaseDistribution finite_distribution(const FiniteWindow& window, const PartialPhaseState& state)
{
    check_window(window, state);
    PhaseDistribution dist;
    dist.thetas.resize(window.dimension());
    dist.values.resize(window.dimension());
    const double scale = window.dimension() / (2.0 * pi);
    for (int m = 0; m <= window.s_pb; ++m) {
        dist.thetas[m] = window.angle(m);
        dist.values[m] = overlap_unchecked(window, m, state) * scale;
    }
    return dist;
}

} // namespace pbphase
