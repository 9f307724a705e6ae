#ifndef PBPHASE_EQUIVALENCE_HPP
#define PBPHASE_EQUIVALENCE_HPP

// Parameter maps showing the Polya, Hahn and negative hypergeometric states are
// one family, plus the Pochhammer-form coefficient routes used to cross-check
// the closed forms in states.hpp.

#include "pbphase/states.hpp"

namespace pbphase {

/// Absolute tolerance on amplitudes (which lie in [0, 1]).
inline constexpr double kDefaultAgreementTolerance = 1e-12;

struct PolyaParams
{
    double eta = 0.5;
    double gamma = 1.0;
    int M = 0;

    Polya spec() const { return Polya{M, gamma, eta}; }
};

struct HahnParams
{
    double alpha = 0.0;
    double beta_h = 0.0;
};

/// Solves eta/gamma = alpha + 1, (1 - eta)/gamma = beta_h + 1.
PolyaParams polya_from_hahn(double alpha, double beta_h, int M);

/// Inverse of polya_from_hahn: (alpha, beta_h) = (eta/gamma - 1, (1 - eta)/gamma - 1).
HahnParams hahn_from_polya(const PolyaParams& polya);

/// Solves eta/gamma = s + 1, (1 - eta)/gamma = M beta/(1 - beta) - s.
PolyaParams polya_from_nhg(int M, double beta, int s_nhg);

/// Composition of the two maps: alpha = s, beta_h = M beta/(1 - beta) - s - 1.
HahnParams hahn_from_nhg(int M, double beta, int s_nhg);

/// True iff the lengths match and max_n |a[n] - b[n]| <= tol.
bool coefficients_agree(const FockAmplitudes& a, const FockAmplitudes& b,
                        double tol = kDefaultAgreementTolerance);

/// Polya amplitudes from C(M,n) (eta/gamma)_n ((1-eta)/gamma)_{M-n} / (1/gamma)_M.
FockAmplitudes polya_pochhammer_amplitudes(const Polya& spec);

/// Negative hypergeometric amplitudes from
/// C(M,n) (s+1)_n (M beta/(1-beta) - s)_{M-n} / (M beta/(1-beta) + 1)_M.
FockAmplitudes nhg_pochhammer_amplitudes(const NegHypergeometric& spec);

} // namespace pbphase

#endif // PBPHASE_EQUIVALENCE_HPP
