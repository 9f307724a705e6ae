#include "pbphase/states.hpp"

#include "pbphase/errors.hpp"
#include "pbphase/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace pbphase {

namespace {

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};

void require(bool ok, const char* constraint, double value)
{
    if (!ok)
        throw ConstraintViolated(constraint, value);
}

constexpr double kRatioMargin = 1e-9;

double nhg_ratio_bound(int M, double beta)
{
    return M * beta / (1.0 - beta) * (1.0 - kRatioMargin);
}

void require_cutoff(int M)
{
    require(M >= 0, "M >= 0", M);
}

// Numerator and denominator factors of one squared coefficient b_n^2.
class SquaredCoefficient
{
public:
    // x(x-1)...(x-n+1) / n!
    SquaredCoefficient& binomial(double x, int n)
    {
        for (int k = 0; k < n; ++k) {
            numerator_.push_back(x - k);
            denominator_.push_back(k + 1);
        }
        return *this;
    }

    // inverse of binomial(x, n)
    SquaredCoefficient& inverse_binomial(double x, int n)
    {
        for (int k = 0; k < n; ++k) {
            denominator_.push_back(x - k);
            numerator_.push_back(k + 1);
        }
        return *this;
    }

    // start, start + step, ..., n terms
    SquaredCoefficient& progression(double start, double step, int n)
    {
        for (int k = 0; k < n; ++k)
            numerator_.push_back(start + k * step);
        return *this;
    }

    SquaredCoefficient& inverse_progression(double start, double step, int n)
    {
        for (int k = 0; k < n; ++k)
            denominator_.push_back(start + k * step);
        return *this;
    }

    SquaredCoefficient& power(double base, int n)
    {
        numerator_.insert(numerator_.end(), static_cast<std::size_t>(n), base);
        return *this;
    }

    double amplitude(bool zero_allowed) const
    {
        const LogFactorProduct num = log_positive_product(numerator_);
        const LogFactorProduct den = log_positive_product(denominator_);
        if (den.is_zero())
            throw NumericalUnderflow("denominator factor underflowed");
        if (num.is_zero()) {
            if (!zero_allowed)
                throw NumericalUnderflow("mandatory positive factor underflowed");
            return 0.0;
        }
        return std::exp(0.5 * (num.log_magnitude - den.log_magnitude));
    }

private:
    std::vector<double> numerator_;
    std::vector<double> denominator_;
};

template <typename Coefficient>
Eigen::VectorXd tabulate(int M, Coefficient&& coefficient)
{
    Eigen::VectorXd b(M + 1);
    for (int n = 0; n <= M; ++n)
        b[n] = coefficient(n);
    return b;
}

Eigen::VectorXd binomial_amplitudes(const Binomial& p)
{
    const bool degenerate = p.eta == 0.0 || p.eta == 1.0;
    return tabulate(p.M, [&](int n) {
        return SquaredCoefficient{}
            .binomial(p.M, n)
            .power(p.eta, n)
            .power(1.0 - p.eta, p.M - n)
            .amplitude(degenerate);
    });
}

Eigen::VectorXd hypergeometric_amplitudes(const Hypergeometric& p)
{
    return tabulate(p.M, [&](int n) {
        return SquaredCoefficient{}
            .binomial(p.L * p.eta, n)
            .binomial(p.L * (1.0 - p.eta), p.M - n)
            .inverse_binomial(p.L, p.M)
            .amplitude(false);
    });
}

Eigen::VectorXd polya_amplitudes(const Polya& p)
{
    return tabulate(p.M, [&](int n) {
        return SquaredCoefficient{}
            .binomial(p.M, n)
            .progression(p.eta, p.gamma, n)
            .progression(1.0 - p.eta, p.gamma, p.M - n)
            .inverse_progression(1.0, p.gamma, p.M)
            .amplitude(false);
    });
}

Eigen::VectorXd hahn_amplitudes(const Hahn& p)
{
    return tabulate(p.M, [&](int n) {
        return SquaredCoefficient{}
            .binomial(p.M, n)
            .progression(p.alpha + 1.0, 1.0, n)
            .progression(p.beta_h + 1.0, 1.0, p.M - n)
            .inverse_progression(p.alpha + p.beta_h + 2.0, 1.0, p.M)
            .amplitude(false);
    });
}

Eigen::VectorXd neg_hypergeometric_amplitudes(const NegHypergeometric& p)
{
    const double total = p.M / (1.0 - p.beta);
    return tabulate(p.M, [&](int n) {
        return SquaredCoefficient{}
            .binomial(n + p.s_nhg, n)
            .binomial(total - n - p.s_nhg - 1.0, p.M - n)
            .inverse_binomial(total, p.M)
            .amplitude(false);
    });
}

} // namespace

int cutoff(const StateSpec& spec)
{
    return std::visit([](const auto& p) { return p.M; }, spec);
}

std::string_view family_name(const StateSpec& spec)
{
    return std::visit(overloaded{
                          [](const Binomial&) { return std::string_view("binomial"); },
                          [](const Hypergeometric&) { return std::string_view("hgs"); },
                          [](const Polya&) { return std::string_view("polya"); },
                          [](const Hahn&) { return std::string_view("hahn"); },
                          [](const NegHypergeometric&) { return std::string_view("nhgs"); },
                      },
                      spec);
}

int max_admissible_s(int M, double beta)
{
    if (M < 0 || !(beta > 0.0 && beta < 1.0))
        return -1;
    return static_cast<int>(std::ceil(nhg_ratio_bound(M, beta))) - 1;
}

const StateSpec& validate(const StateSpec& spec)
{
    std::visit(overloaded{
                   [](const Binomial& p) {
                       require_cutoff(p.M);
                       require(p.eta >= 0.0 && p.eta <= 1.0, "0 <= eta <= 1", p.eta);
                   },
                   [](const Hypergeometric& p) {
                       require_cutoff(p.M);
                       require(p.eta > 0.0 && p.eta < 1.0, "0 < eta < 1", p.eta);
                       const double bound = std::max(p.M / p.eta, p.M / (1.0 - p.eta));
                       require(std::isfinite(p.L) && p.L >= bound, "L >= max(M/eta, M/(1-eta))", p.L);
                   },
                   [](const Polya& p) {
                       require_cutoff(p.M);
                       require(std::isfinite(p.gamma) && p.gamma > 0.0, "gamma > 0", p.gamma);
                       require(p.eta > 0.0 && p.eta < 1.0, "0 < eta < 1", p.eta);
                   },
                   [](const Hahn& p) {
                       require_cutoff(p.M);
                       require(std::isfinite(p.alpha) && p.alpha > -1.0, "alpha > -1", p.alpha);
                       require(std::isfinite(p.beta_h) && p.beta_h > -1.0, "beta_h > -1", p.beta_h);
                   },
                   [](const NegHypergeometric& p) {
                       require_cutoff(p.M);
                       require(p.beta > 0.0 && p.beta < 1.0, "0 < beta < 1", p.beta);
                       require(p.s_nhg >= 0, "s >= 0", p.s_nhg);
                       require(p.s_nhg < nhg_ratio_bound(p.M, p.beta), "s < M beta/(1-beta)", p.s_nhg);
                   },
               },
               spec);
    return spec;
}

FockAmplitudes amplitudes(const StateSpec& spec)
{
    validate(spec);
    Eigen::VectorXd b = std::visit(overloaded{
                                       [](const Binomial& p) { return binomial_amplitudes(p); },
                                       [](const Hypergeometric& p) { return hypergeometric_amplitudes(p); },
                                       [](const Polya& p) { return polya_amplitudes(p); },
                                       [](const Hahn& p) { return hahn_amplitudes(p); },
                                       [](const NegHypergeometric& p) { return neg_hypergeometric_amplitudes(p); },
                                   },
                                   spec);
    return FockAmplitudes(std::move(b), spec);
}

Eigen::VectorXd squared_distribution(const StateSpec& spec)
{
    return amplitudes(spec).coefficients().array().square().matrix();
}

} // namespace pbphase
