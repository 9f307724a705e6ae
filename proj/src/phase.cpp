#include "pbphase/phase.hpp"

#include "pbphase/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace pbphase {

namespace {

using std::numbers::pi;

int as_integer(std::string_view name, double value)
{
    if (value != std::floor(value) || std::abs(value) > 1e9)
        throw std::invalid_argument("parameter " + std::string(name) + " must be an integer");
    return static_cast<int>(value);
}

[[noreturn]] void unknown_parameter(const StateSpec& spec, std::string_view name)
{
    throw std::invalid_argument("family " + std::string(family_name(spec)) + " has no parameter " +
                                std::string(name));
}

} // namespace

double PhaseDistribution::integral() const
{
    if (values.size() == 0)
        return 0.0;
    return values.sum() * (2.0 * pi / static_cast<double>(values.size()));
}

Eigen::VectorXd phase_grid(int grid_points)
{
    if (grid_points < kMinGridPoints)
        throw GridTooCoarse(grid_points);
    // (2k - N) pi / N keeps theta_k and theta_{N-k} exact negatives of each other.
    Eigen::VectorXd thetas(grid_points);
    for (int k = 0; k < grid_points; ++k)
        thetas[k] = static_cast<double>(2 * k - grid_points) * pi / grid_points;
    return thetas;
}

double mean_phase(const PartialPhaseState& state)
{
    return state.mu;
}

double phase_variance(const PartialPhaseState& state)
{
    return closed_form_variance(state.moduli.coefficients());
}

PhaseStatistics phase_statistics(const PartialPhaseState& state)
{
    return PhaseStatistics{mean_phase(state), phase_variance(state)};
}

PhaseDistribution phase_distribution(const PartialPhaseState& state, int grid_points)
{
    PhaseDistribution dist;
    dist.thetas = phase_grid(grid_points);
    if (state.mu == 0.0)
        dist.values = closed_form_density(state.moduli.coefficients(), dist.thetas);
    else
        dist.values = closed_form_density(state.moduli.coefficients(),
                                          (dist.thetas.array() - state.mu).matrix());
    return dist;
}

int count_peaks(const PhaseDistribution& dist, double min_prominence)
{
    // collapse plateaus, then treat the sequence as circular
    std::vector<double> runs;
    runs.reserve(static_cast<std::size_t>(dist.values.size()));
    for (Eigen::Index i = 0; i < dist.values.size(); ++i)
        if (runs.empty() || dist.values[i] != runs.back())
            runs.push_back(dist.values[i]);
    if (runs.size() > 1 && runs.front() == runs.back())
        runs.pop_back();
    const std::size_t n = runs.size();
    if (n < 2)
        return 0;

    auto prev = [n](std::size_t i) { return (i + n - 1) % n; };
    auto next = [n](std::size_t i) { return (i + 1) % n; };
    auto is_min = [&](std::size_t i) { return runs[prev(i)] > runs[i] && runs[i] < runs[next(i)]; };

    int peaks = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(runs[prev(i)] < runs[i] && runs[i] > runs[next(i)]))
            continue;
        std::size_t left = prev(i);
        while (!is_min(left))
            left = prev(left);
        std::size_t right = next(i);
        while (!is_min(right))
            right = next(right);
        if (runs[i] - runs[left] >= min_prominence && runs[i] - runs[right] >= min_prominence)
            ++peaks;
    }
    return peaks;
}

StateSpec with_parameter(const StateSpec& spec, std::string_view name, double value)
{
    StateSpec out = spec;
    std::visit(
        [&](auto& p) {
            using T = std::decay_t<decltype(p)>;
            if (name == "M") {
                p.M = as_integer(name, value);
                return;
            }
            if constexpr (std::is_same_v<T, Binomial> || std::is_same_v<T, Hypergeometric> ||
                          std::is_same_v<T, Polya>) {
                if (name == "eta") {
                    p.eta = value;
                    return;
                }
            }
            if constexpr (std::is_same_v<T, Hypergeometric>) {
                if (name == "L") {
                    p.L = value;
                    return;
                }
            }
            if constexpr (std::is_same_v<T, Polya>) {
                if (name == "gamma") {
                    p.gamma = value;
                    return;
                }
            }
            if constexpr (std::is_same_v<T, Hahn>) {
                if (name == "alpha") {
                    p.alpha = value;
                    return;
                }
                if (name == "beta_h") {
                    p.beta_h = value;
                    return;
                }
            }
            if constexpr (std::is_same_v<T, NegHypergeometric>) {
                if (name == "beta") {
                    p.beta = value;
                    return;
                }
                if (name == "s") {
                    p.s_nhg = as_integer(name, value);
                    return;
                }
            }
            unknown_parameter(spec, name);
        },
        out);
    return out;
}

std::vector<SweepRow> variance_sweep(const StateSpec& base, std::string_view parameter,
                                     std::span<const double> values)
{
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (const double value : values) {
        SweepRow row{value, std::nullopt, {}};
        const StateSpec spec = with_parameter(base, parameter, value);
        try {
            row.variance = phase_variance(PartialPhaseState{amplitudes(spec), 0.0});
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace pbphase
