#pragma once

#include "jue/sampler.hpp"

#include <cstddef>

namespace jue {

/// Limiting spectral CDF 1 - arccos(x)/pi on [-1,1].
double arcsine_cdf(double x);

/// j-th quantile -cos((j-1/2)pi/N), 1 <= j <= N.
double percentile(std::size_t j, std::size_t N);

/// Centered, scaled counting process sqrt(2)pi(#{lambda_j <= x} - N F(x)).
double counting_h(const EigenvalueSample& sample, double x);

struct RigidityStats {
    double sup_h = 0.0;
    double inf_h = 0.0;
    double max_scaled_fluct = 0.0;
    std::size_t argmax_index = 0; // 1-based, smallest on ties
};

/// Extremes taken exactly at the jump points (the process decreases
/// between them).
RigidityStats rigidity_stats(const EigenvalueSample& sample);

/// Max of the counting process over jump points at or left of x_cut
/// (descriptive edge-window statistic), never below 0.
double edge_window_max(const EigenvalueSample& sample, double x_cut);

struct WilsonInterval {
    double freq = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

WilsonInterval wilson_interval(std::size_t hits, std::size_t trials, double z = 1.96);

struct RigidityFrequencies {
    WilsonInterval fluct_event;  // max_scaled_fluct in [(1-eps),(1+eps)] log N / N
    WilsonInterval counting_event; // max |extreme of h| in [(1-eps),(1+eps)] sqrt(2) log N
    std::size_t trials = 0;
};

RigidityFrequencies mc_rigidity(const EnsembleSpec& spec, std::size_t trials, double epsilon);

} // namespace jue
