#include "skillcoach/stats.hpp"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>

#include "skillcoach/errors.hpp"

namespace skillcoach::stats {

SampleMoments moments(std::span<const double> sample) {
    SampleMoments m;
    m.n = sample.size();
    if (m.n == 0) return m;
    double sum = 0.0;
    for (double x : sample) sum += x;
    m.mean = sum / static_cast<double>(m.n);
    if (m.n < 2) return m;
    double ss = 0.0;
    for (double x : sample) {
        const double d = x - m.mean;
        ss += d * d;
    }
    m.variance = ss / static_cast<double>(m.n - 1);
    return m;
}

WelchResult welch_t(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2)
        throw StatisticsError("welch_t: each sample needs at least 2 values");
    const SampleMoments ma = moments(a);
    const SampleMoments mb = moments(b);
    const double va = ma.variance / static_cast<double>(ma.n);
    const double vb = mb.variance / static_cast<double>(mb.n);
    const double diff = ma.mean - mb.mean;

    if (va + vb == 0.0) {
        if (diff == 0.0) return {0.0, 1.0, static_cast<double>(ma.n + mb.n - 2)};
        throw StatisticsError("welch_t: zero variance with unequal means");
    }

    WelchResult r;
    r.t = diff / std::sqrt(va + vb);
    r.df = (va + vb) * (va + vb) /
           (va * va / static_cast<double>(ma.n - 1) + vb * vb / static_cast<double>(mb.n - 1));
    const boost::math::students_t dist(r.df);
    r.p = 2.0 * boost::math::cdf(dist, -std::abs(r.t));
    return r;
}

double cohens_d(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2)
        throw StatisticsError("cohens_d: each sample needs at least 2 values");
    const SampleMoments ma = moments(a);
    const SampleMoments mb = moments(b);
    const double na = static_cast<double>(ma.n);
    const double nb = static_cast<double>(mb.n);
    const double pooled_var = ((na - 1.0) * ma.variance + (nb - 1.0) * mb.variance) / (na + nb - 2.0);
    const double diff = ma.mean - mb.mean;
    if (pooled_var == 0.0) {
        if (diff == 0.0) return 0.0;
        throw StatisticsError("cohens_d: zero pooled variance with unequal means");
    }
    return diff / std::sqrt(pooled_var);
}

}  // namespace skillcoach::stats
