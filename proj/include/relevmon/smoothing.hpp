#pragma once

#include <memory>
#include <span>
#include <vector>

#include "relevmon/kernels.hpp"
#include "relevmon/series.hpp"

namespace relevmon {

struct SmootherConfig {
    double bandwidth = 0.0;  // rescaled-time units
    std::shared_ptr<const KernelSpec> kernel = default_quartic();
};

struct LinearFit {
    double intercept;  // local level estimate at t
    double slope;
};

// Weighted local linear fit at time t with bandwidth h: closed-form solution
// of the 2x2 kernel-weighted normal equations over the in-window points
// |i/n - t| <= h. values spans observations 1..L at times i/n (L need not be
// a whole number of time units, which is what the streaming path relies on).
// Throws OutOfRange for t outside [0, L/n]; SingularDesign when the weighted
// centered second moment falls below 1e-12 (< 2 distinct in-window points).
LinearFit local_linear_fit(std::span<const double> values, int n, double t, double h,
                           const KernelSpec& kernel);
LinearFit local_linear_fit(const QualitySeries& series, double t, double h,
                           const KernelSpec& kernel);

// Bias-reduced estimate mu~_h(t) = 2 mu^_{h/sqrt(2)}(t) - mu^_h(t).
double jackknife_estimate(std::span<const double> values, int n, double t,
                          const SmootherConfig& config);
double jackknife_estimate(const QualitySeries& series, double t, const SmootherConfig& config);

// 10-fold-style interleaved cross validation (observation i goes to fold
// i mod folds); each candidate bandwidth is scored by the squared error of
// Jackknife predictions at held-out points, ties resolved toward the smaller
// bandwidth. Throws AllCandidatesSingular when no candidate fits everywhere.
double cv_select_bandwidth(const QualitySeries& series, std::span<const double> candidates,
                           int folds, const KernelSpec& kernel);

// X_{i,n} - mu~(i/n) for i = 1..Tn.
std::vector<double> residuals(const QualitySeries& series, const SmootherConfig& config);

}  // namespace relevmon
