#pragma once

#include "degseq/degree_sequence.hpp"
#include "degseq/weights.hpp"

namespace degseq {

// Canonical offspring laws and degree-sequence fixtures shared by the
// experiment drivers, the command-line tool, and the acceptance suite.

WeightSequence binary_offspring();      // mass 1/2 on degrees 0 and 2
WeightSequence ternary_offspring();     // mass 2/3 on 0, 1/3 on 3
WeightSequence quaternary_offspring();  // mass 3/4 on 0, 1/4 on 4

// Two-parameter law on {0, 1, 2}: mu0 = q(1-p), mu1 = (1-q)(1-p), mu2 = p.
WeightSequence two_parameter_offspring(double p, double q);

// Degree-one fraction the size-n trees of the two-parameter law settle on:
// (1-q)sqrt(1-p) / ((1-q)sqrt(1-p) + 2 sqrt(pq)).
double two_parameter_unary_share(double p, double q);

// mu_k = k^{-exponent} / zeta(exponent - 1) for 1 <= k <= horizon, the rest
// of the mass on degree zero. The mean rises toward one as the horizon
// grows, while for exponent <= 3 the second moment grows without bound.
// The mass cut off beyond the horizon is recorded on the result.
WeightSequence truncated_powerlaw_offspring(int horizon, double exponent = 2.5);

// mu_k proportional to exp(-sqrt(k)) for 1 <= k <= horizon, scaled so the
// mean comes out as requested, remainder on degree zero.
WeightSequence stretched_exponential_offspring(int horizon, double mean = 0.6);

// (n-1)/2 twos then zeros; n must be odd.
DegreeSequence binary_degrees(int n);

// One entry of n/2, the remaining child slots filled with twos (plus a
// single one when parity demands it), then zeros.
DegreeSequence star_heavy_degrees(int n);

// Deterministic power-law profile: entry i is the (i - 1/2)/n quantile of
// truncated_powerlaw_offspring(n, exponent), with the child-slot total then
// repaired to n - 1 and the entries sorted descending.
DegreeSequence powerlaw_degrees(int n, double exponent = 2.5);

DegreeSequence path_degrees(int n);  // n - 1 ones, then one zero
DegreeSequence star_degrees(int n);  // one entry n - 1, the rest zeros

}  // namespace degseq
