#pragma once

#include <span>

namespace skillcoach::stats {

struct SampleMoments {
    double mean = 0.0;
    double variance = 0.0;  // unbiased (n-1)
    std::size_t n = 0;
};

SampleMoments moments(std::span<const double> sample);

struct WelchResult {
    double t = 0.0;
    double p = 1.0;   // two-sided
    double df = 0.0;  // Welch-Satterthwaite degrees of freedom
};

/// Welch's unequal-variance t-test. Requires at least two values per
/// sample; identical samples yield t = 0, p = 1.
WelchResult welch_t(std::span<const double> a, std::span<const double> b);

/// Cohen's d with the pooled standard deviation. Sign follows (mean_a -
/// mean_b): a negative d means sample a is smaller on average.
double cohens_d(std::span<const double> a, std::span<const double> b);

}  // namespace skillcoach::stats
