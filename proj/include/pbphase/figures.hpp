#ifndef PBPHASE_FIGURES_HPP
#define PBPHASE_FIGURES_HPP

// Pinned parameter sets for the four phase-statistics figures and the tables
// that reproduce them. Bump kFigureManifestVersion whenever a default changes.

#include "pbphase/output.hpp"
#include "pbphase/states.hpp"

#include <array>
#include <string>
#include <vector>

namespace pbphase::figures {

inline constexpr int kFigureManifestVersion = 1;

// Figure 1: hypergeometric variance, one curve per M against L, plus variance against M at fixed L.
inline constexpr double kFig1Eta = 0.5;
inline constexpr double kFig1L = 40.0;
inline constexpr int kFig1MaxM = 8;
inline constexpr std::array<double, 11> kFig1LGrid{16, 20, 30, 40, 60, 80, 120, 200, 400, 800, 1200};

// Figure 2: hypergeometric phase distributions approaching the binomial state.
inline constexpr int kFig2M = 5;
inline constexpr double kFig2Eta = 0.5;
inline constexpr std::array<double, 3> kFig2L{50, 200, 1200};

// Figure 3: variance against eta in the Polya parameterization.
inline constexpr int kFig3M = 4;
inline constexpr std::array<double, 3> kFig3Gamma{0.1, 0.3, 0.5};
inline constexpr int kFig3EtaFirstPercent = 5;
inline constexpr int kFig3EtaLastPercent = 95;

// Figure 4: negative hypergeometric distributions whose Polya image has eta = 1/2.
inline constexpr std::array<int, 3> kFig4M{2, 3, 5};

Hypergeometric fig1_state(int M, double L = kFig1L);
Hypergeometric fig2_state(double L);
Binomial fig2_reference();
Polya fig3_state(double gamma, double eta);
/// eta = k/100 for k = 5..95; exactly symmetric about the 0.5 entry.
std::vector<double> fig3_eta_grid();
/// s = 0 and M beta/(1 - beta) = 1, so the Polya image is eta = gamma = 1/2.
NegHypergeometric fig4_state(int M);

struct Curve
{
    std::string file;
    OutputRecord record;
};

struct Figure
{
    int id = 0;
    std::vector<Curve> curves;
};

/// Throws std::invalid_argument for an id outside 1..4.
Figure make_figure(int id, int grid_points);

/// JSON manifest listing every curve file and its parameters.
std::string figure_manifest(const Figure& figure, int grid_points);

} // namespace pbphase::figures

#endif // PBPHASE_FIGURES_HPP
