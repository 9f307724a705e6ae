#ifndef PBPHASE_ORACLE_HPP
#define PBPHASE_ORACLE_HPP

// Finite (s+1)-dimensional phase-state construction. Nothing here takes the
// s -> infinity limit, so it serves as an independent check on phase.hpp.
//
// Phase states |theta_m> = (s+1)^{-1/2} sum_{n=0}^{s} exp(i n theta_m) |n>,
// theta_m = theta0 + 2 pi m/(s+1), are orthonormal; the phase operator is
// diagonal in that basis, so moments only need the overlaps |<theta_m|b>|^2.

#include "pbphase/phase.hpp"

namespace pbphase {

struct FiniteWindow
{
    int s_pb = 0;        ///< dimension minus one
    double theta0 = 0.0; ///< reference phase

    /// Window whose angles sit symmetrically about mu: theta0 = mu - pi + pi/(s_pb+1).
    static FiniteWindow centered(int s_pb, double mu = 0.0);

    int dimension() const noexcept { return s_pb + 1; }
    double angle(int m) const;
};

/// |<theta_m|b>|^2. Throws IndexOutOfWindow for m outside [0, s_pb] or a state
/// with more photons than the window holds.
double phase_state_overlap(const FiniteWindow& window, int m, const PartialPhaseState& state);

/// First moment and central second moment of the finite phase operator.
PhaseStatistics finite_moments(const FiniteWindow& window, const PartialPhaseState& state);

/// Overlaps scaled by (s+1)/(2 pi) at the window angles.
PhaseDistribution finite_distribution(const FiniteWindow& window, const PartialPhaseState& state);

} // namespace pbphase

#endif // PBPHASE_ORACLE_HPP
