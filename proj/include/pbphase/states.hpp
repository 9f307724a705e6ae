#ifndef PBPHASE_STATES_HPP
#define PBPHASE_STATES_HPP

#include <Eigen/Core>

#include <string_view>
#include <variant>

namespace pbphase {

// Five parameterizations of real-amplitude states on the Fock basis |0>..|M>.

/// Binomial state, 0 <= eta <= 1.
struct Binomial
{
    double eta = 0.5;
    int M = 0;
};

/// Hypergeometric state, 0 < eta < 1 and L >= max(M/eta, M/(1-eta)). L need not be an integer.
struct Hypergeometric
{
    double L = 0.0;
    int M = 0;
    double eta = 0.5;
};

/// Polya state, gamma > 0 and 0 < eta < 1.
struct Polya
{
    int M = 0;
    double gamma = 1.0;
    double eta = 0.5;
};

/// Hahn-polynomial state, alpha > -1 and beta_h > -1.
struct Hahn
{
    double alpha = 0.0;
    double beta_h = 0.0;
    int M = 0;
};

/// Negative hypergeometric state, 0 < beta < 1 and 0 <= s_nhg < M beta/(1-beta).
struct NegHypergeometric
{
    int M = 0;
    double beta = 0.5;
    int s_nhg = 0;
};

using StateSpec = std::variant<Binomial, Hypergeometric, Polya, Hahn, NegHypergeometric>;

/// Photon-number cutoff M of any family.
int cutoff(const StateSpec& spec);

/// Short family tag: binomial, hgs, polya, hahn, nhgs.
std::string_view family_name(const StateSpec& spec);

/// Largest s_nhg accepted for (M, beta). The bound s < M beta/(1-beta) is
/// checked with a relative margin of 1e-9 so that a ratio landing one rounding
/// step above an integer does not admit that integer. Returns -1 when no s fits.
int max_admissible_s(int M, double beta);

/// Returns `spec` unchanged, or throws ConstraintViolated naming the broken inequality.
const StateSpec& validate(const StateSpec& spec);

/// Normalized amplitudes b_0..b_M, index = photon number.
class FockAmplitudes
{
public:
    FockAmplitudes(Eigen::VectorXd amplitudes, StateSpec source)
        : amplitudes_(std::move(amplitudes)), source_(source)
    {
    }

    const Eigen::VectorXd& coefficients() const noexcept { return amplitudes_; }
    const StateSpec& source() const noexcept { return source_; }

    Eigen::Index size() const noexcept { return amplitudes_.size(); }
    int cutoff() const noexcept { return static_cast<int>(amplitudes_.size()) - 1; }
    double operator[](Eigen::Index n) const { return amplitudes_[n]; }

private:
    Eigen::VectorXd amplitudes_;
    StateSpec source_;
};

/// Closed-form amplitudes of a validated spec, evaluated in log space.
///
/// Binomial, hypergeometric and negative hypergeometric coefficients are built
/// from their binomial-coefficient forms, Polya from its product form and Hahn
/// from its Pochhammer form. Throws ConstraintViolated for an invalid spec and
/// NumericalUnderflow when a factor that must be positive underflows.
FockAmplitudes amplitudes(const StateSpec& spec);

/// Photon-number probabilities b_n^2.
Eigen::VectorXd squared_distribution(const StateSpec& spec);

} // namespace pbphase

#endif // PBPHASE_STATES_HPP
