#ifndef HEATSYM_RANDOM_INPUTS_HPP
#define HEATSYM_RANDOM_INPUTS_HPP

#include <random>

#include "heatsym/curvature.hpp"
#include "heatsym/trig.hpp"

namespace heatsym {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int max_num = 4, int max_den = 3);
ExtScalar random_zeta_scalar(Rng& rng);

/// Random tensor with the four Riemann symmetries and the first Bianchi
/// identity (the cyclic part is projected out), plus a random
/// antihermitian twist of rank p when requested.
CurvatureData random_curvature_data(Rng& rng, int n, int p, bool twist);

/// Random trig polynomial on T^d with small frequencies.
TrigPoly random_trig_poly(Rng& rng, int d, int max_terms = 2, int max_freq = 2);

} // namespace heatsym

#endif
