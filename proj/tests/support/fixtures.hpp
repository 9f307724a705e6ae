#ifndef PBPHASE_TESTS_FIXTURES_HPP
#define PBPHASE_TESTS_FIXTURES_HPP

#include "pbphase/states.hpp"

#include <vector>

namespace fixtures {

/// Ten fixed states with M <= 10 covering every family.
inline std::vector<pbphase::StateSpec> oracle_states()
{
    using namespace pbphase;
    return {
        Binomial{0.5, 1},
        Binomial{0.5, 2},
        Binomial{0.3, 6},
        Binomial{1.0, 4},
        Hypergeometric{20.0, 5, 0.5},
        Hypergeometric{12.5, 4, 0.6},
        Polya{4, 0.3, 0.5},
        Hahn{1.0, 2.0, 7},
        NegHypergeometric{3, 0.5, 0},
        NegHypergeometric{10, 0.25, 2},
    };
}

} // namespace fixtures

#endif
