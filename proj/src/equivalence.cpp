#include "pbphase/equivalence.hpp"

#include "pbphase/errors.hpp"
#include "pbphase/specfun.hpp"

#include <cmath>
#include <vector>

namespace pbphase {

namespace {

void check_nhg(int M, double beta, int s_nhg)
{
    try {
        validate(NegHypergeometric{M, beta, s_nhg});
    } catch (const ConstraintViolated& e) {
        throw DomainError(e.what());
    }
}

// log of C(M,n) (a)_n (b)_{M-n} / (c)_M, all factors positive.
double log_pochhammer_coefficient(int M, int n, double a, double b, double c)
{
    std::vector<double> num;
    std::vector<double> den;
    num.reserve(2 * static_cast<std::size_t>(M));
    den.reserve(2 * static_cast<std::size_t>(M));
    for (int k = 0; k < n; ++k) {
        num.push_back(M - k);
        den.push_back(k + 1);
        num.push_back(a + k);
    }
    for (int k = 0; k < M - n; ++k)
        num.push_back(b + k);
    for (int k = 0; k < M; ++k)
        den.push_back(c + k);
    const LogFactorProduct top = log_positive_product(num);
    const LogFactorProduct bottom = log_positive_product(den);
    if (top.is_zero() || bottom.is_zero())
        throw NumericalUnderflow("Pochhammer factor underflowed");
    return top.log_magnitude - bottom.log_magnitude;
}

Eigen::VectorXd pochhammer_amplitudes(int M, double a, double b, double c)
{
    Eigen::VectorXd out(M + 1);
    for (int n = 0; n <= M; ++n)
        out[n] = std::exp(0.5 * log_pochhammer_coefficient(M, n, a, b, c));
    return out;
}

} // namespace

PolyaParams polya_from_hahn(double alpha, double beta_h, int M)
{
    if (!(alpha > -1.0) || !(beta_h > -1.0))
        throw DomainError("Hahn parameters require alpha > -1 and beta_h > -1");
    const double total = alpha + beta_h + 2.0;
    return PolyaParams{(alpha + 1.0) / total, 1.0 / total, M};
}

HahnParams hahn_from_polya(const PolyaParams& polya)
{
    return HahnParams{polya.eta / polya.gamma - 1.0, (1.0 - polya.eta) / polya.gamma - 1.0};
}

PolyaParams polya_from_nhg(int M, double beta, int s_nhg)
{
    check_nhg(M, beta, s_nhg);
    const double gamma = 1.0 / (M * beta / (1.0 - beta) + 1.0);
    return PolyaParams{(s_nhg + 1) * gamma, gamma, M};
}

HahnParams hahn_from_nhg(int M, double beta, int s_nhg)
{
    check_nhg(M, beta, s_nhg);
    return HahnParams{static_cast<double>(s_nhg), M * beta / (1.0 - beta) - s_nhg - 1.0};
}

bool coefficients_agree(const FockAmplitudes& a, const FockAmplitudes& b, double tol)
{
    if (a.size() != b.size())
        return false;
    if (a.size() == 0)
        return true;
    return (a.coefficients() - b.coefficients()).cwiseAbs().maxCoeff() <= tol;
}

FockAmplitudes polya_pochhammer_amplitudes(const Polya& spec)
{
    validate(spec);
    return FockAmplitudes(pochhammer_amplitudes(spec.M, spec.eta / spec.gamma, (1.0 - spec.eta) / spec.gamma,
                                                1.0 / spec.gamma),
                          spec);
}

FockAmplitudes nhg_pochhammer_amplitudes(const NegHypergeometric& spec)
{
    validate(spec);
    const double ratio = spec.M * spec.beta / (1.0 - spec.beta);
    return FockAmplitudes(pochhammer_amplitudes(spec.M, spec.s_nhg + 1.0, ratio - spec.s_nhg, ratio + 1.0), spec);
}

} // namespace pbphase
