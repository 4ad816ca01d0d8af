#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace taskdiff {

// Running first/second moments. Keeps plain sums alongside Welford's M2 so
// callers can derive the smoothed estimators (two fabricated samples 0 and 1)
// without replaying the sample stream.
class RunningStats {
public:
    void add(double x) {
        ++n_;
        double d = x - mean_;
        mean_ += d / static_cast<double>(n_);
        m2_ += d * (x - mean_);
        sum_ += x;
        sum_sq_ += x * x;
    }

    int64_t count() const { return n_; }
    double mean() const { return n_ > 0 ? mean_ : 0.0; }
    double sum() const { return sum_; }
    double sum_sq() const { return sum_sq_; }

    double variance_unbiased() const {
        return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
    }
    double variance_population() const {
        return n_ > 0 ? m2_ / static_cast<double>(n_) : 0.0;
    }

    // Estimators with the {0, 1} smoothing pair mixed in. Population variance
    // here: it is bounded by 1/4 for responses in [0,1], which the sample-size
    // bound relies on.
    double smoothed_mean() const { return (sum_ + 1.0) / static_cast<double>(n_ + 2); }
    double smoothed_variance() const {
        double m = smoothed_mean();
        double v = (sum_sq_ + 1.0) / static_cast<double>(n_ + 2) - m * m;
        return v > 0.0 ? v : 0.0;
    }
    int64_t smoothed_count() const { return n_ + 2; }

private:
    int64_t n_ = 0;
    double mean_ = 0.0, m2_ = 0.0, sum_ = 0.0, sum_sq_ = 0.0;
};

// Inverse standard normal CDF, Wichura's algorithm AS 241 (PPND16),
// accurate to about 1e-15 over (0, 1).
inline double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal_quantile: p outside (0,1)");
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        const double num =
            (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                  6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
              1.3314166789178437745e+2) * r + 3.3871328727963666080e+0);
        const double den =
            (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                  3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
              4.2313330701600911252e+1) * r + 1.0);
        return q * num / den;
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        const double num =
            (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0);
        const double den =
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
        val = num / den;
    } else {
        r -= 5.0;
        const double num =
            (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0);
        const double den =
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
        val = num / den;
    }
    return q < 0.0 ? -val : val;
}

// |z_{delta/2}|: the two-sided standard normal quantile used by the
// sample-size bound. delta -> 1 gives 0, delta = 0.05 gives 1.96.
inline double z_quantile(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("z_quantile: delta outside (0,1)");
    return normal_quantile(1.0 - delta / 2.0);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x * (1.0 / std::sqrt(2.0))); }

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

} // namespace taskdiff
