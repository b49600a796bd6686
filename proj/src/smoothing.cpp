#include "relevmon/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace relevmon {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;
constexpr double kSingularTol = 1e-12;

// Core weighted fit. skip_fold >= 0 drops observations i (1-based) with
// i % folds == skip_fold, which is all the cross-validation machinery needs.
LinearFit weighted_fit(std::span<const double> values, int n, double t, double h,
                       const KernelSpec& kernel, int skip_fold, int folds) {
    const int len = static_cast<int>(values.size());
    const double horizon = static_cast<double>(len) / n;
    if (!(t >= 0.0 && t <= horizon)) throw OutOfRange("local_linear_fit: t outside [0, T]");
    if (!(h > 0.0)) throw DomainError("local_linear_fit: bandwidth must be positive");

    int lo = static_cast<int>(std::ceil(n * (t - h) - 1e-9));
    int hi = static_cast<int>(std::floor(n * (t + h) + 1e-9));
    lo = std::max(lo, 1);
    hi = std::min(hi, len);

    double sw = 0.0, swd = 0.0, swd2 = 0.0, swy = 0.0, swdy = 0.0;
    for (int i = lo; i <= hi; ++i) {
        if (skip_fold >= 0 && i % folds == skip_fold) continue;
        const double d = static_cast<double>(i) / n - t;
        const double w = kernel(d / h);
        if (w == 0.0) continue;
        const double y = values[i - 1];
        sw += w;
        swd += w * d;
        swd2 += w * d * d;
        swy += w * y;
        swdy += w * d * y;
    }
    if (sw <= 0.0) throw SingularDesign("local_linear_fit: empty window");

    // Solve around the weighted mean of d for numerical stability; this is
    // algebraically the closed-form 2x2 normal-equation solution.
    const double dbar = swd / sw;
    const double s2c = swd2 - swd * dbar;  // centered second moment
    if (s2c < kSingularTol) throw SingularDesign("local_linear_fit: singular design");
    const double ybar = swy / sw;
    const double slope = (swdy - dbar * swy) / s2c;
    return {ybar - slope * dbar, slope};
}

double jackknife_at(std::span<const double> values, int n, double t, double h,
                    const KernelSpec& kernel, int skip_fold, int folds) {
    const double fine = weighted_fit(values, n, t, h * kInvSqrt2, kernel, skip_fold, folds).intercept;
    const double coarse = weighted_fit(values, n, t, h, kernel, skip_fold, folds).intercept;
    return 2.0 * fine - coarse;
}

}  // namespace

LinearFit local_linear_fit(std::span<const double> values, int n, double t, double h,
                           const KernelSpec& kernel) {
    return weighted_fit(values, n, t, h, kernel, -1, 0);
}

LinearFit local_linear_fit(const QualitySeries& series, double t, double h,
                           const KernelSpec& kernel) {
    return weighted_fit(series.values, series.n, t, h, kernel, -1, 0);
}

double jackknife_estimate(std::span<const double> values, int n, double t,
                          const SmootherConfig& config) {
    return jackknife_at(values, n, t, config.bandwidth, *config.kernel, -1, 0);
}

double jackknife_estimate(const QualitySeries& series, double t, const SmootherConfig& config) {
    return jackknife_at(series.values, series.n, t, config.bandwidth, *config.kernel, -1, 0);
}

double cv_select_bandwidth(const QualitySeries& series, std::span<const double> candidates,
                           int folds, const KernelSpec& kernel) {
    if (candidates.empty()) throw DomainError("cv_select_bandwidth: no candidates");
    if (folds < 2) throw DomainError("cv_select_bandwidth: folds must be >= 2");
    if (series.length() < folds) throw DomainError("cv_select_bandwidth: series shorter than folds");
    for (double h : candidates)
        if (!(h > 0.0 && h <= series.T))
            throw DomainError("cv_select_bandwidth: candidate bandwidth outside (0, T]");

    const int len = series.length();
    double best_h = 0.0;
    double best_err = std::numeric_limits<double>::infinity();
    bool any_valid = false;

    for (double h : candidates) {
        double err = 0.0;
        bool singular = false;
        for (int i = 1; i <= len && !singular; ++i) {
            const double t = series.time_of(i);
            try {
                const double pred =
                    jackknife_at(series.values, series.n, t, h, kernel, i % folds, folds);
                const double e = series.values[i - 1] - pred;
                err += e * e;
            } catch (const SingularDesign&) {
                singular = true;
            }
        }
        if (singular) continue;
        any_valid = true;
        // strict improvement beyond rounding noise; equal scores keep the
        // smaller bandwidth
        const double margin = 1e-12 * std::max(1.0, best_err);
        if (err < best_err - margin || (std::abs(err - best_err) <= margin && h < best_h)) {
            best_err = err;
            best_h = h;
        }
    }
    if (!any_valid) throw AllCandidatesSingular("cv_select_bandwidth: every candidate failed a fold fit");
    return best_h;
}

std::vector<double> residuals(const QualitySeries& series, const SmootherConfig& config) {
    std::vector<double> out(series.length());
    for (int i = 1; i <= series.length(); ++i)
        out[i - 1] = series.values[i - 1] -
                     jackknife_at(series.values, series.n, series.time_of(i), config.bandwidth,
                                  *config.kernel, -1, 0);
    return out;
}

}  // namespace relevmon
