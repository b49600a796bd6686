#pragma once

#include <functional>
#include <memory>

#include "relevmon/errors.hpp"

namespace relevmon {

// Support convention for the L2 norms entering the thresholds. The paper's
// display writes the integral over [0, 1]; both integrands are even, so the
// full-support integral over [-1, 1] is exactly twice that. Full support
// standardizes the Gaussian approximation to unit variance and is the
// default; Half is kept as a calibration switch.
enum class NormSupport { Full, Half };

struct KernelNorms {
    double base;             // ||K||_2
    double jackknife;        // ||K*||_2
    double jackknife_deriv;  // ||(K*)'||_2
};

// A monitoring kernel: symmetric, supported on [-1, 1], unit mass, plus the
// cached L2 norms of its Jackknife transform K*(x) = 2*sqrt(2)*K(sqrt(2)x) - K(x).
// Norms are computed once at construction (composite Simpson, refined to 1e-8).
class KernelSpec {
public:
    using Fn = std::function<double(double)>;

    // base kernel + optional analytic derivative; central differences
    // (step 1e-5) are used for (K*)' when no derivative is supplied.
    KernelSpec(Fn kernel, Fn kernel_deriv, NormSupport support = NormSupport::Full);

    static KernelSpec quartic(NormSupport support = NormSupport::Full);

    double operator()(double x) const { return kernel_(x); }
    double evaluate(double x) const { return kernel_(x); }
    double jackknife(double x) const;
    double jackknife_deriv(double x) const;

    double support_radius() const { return 1.0; }
    double norm_base() const { return norms_.base; }
    double norm_jackknife() const { return norms_.jackknife; }
    double norm_jackknife_deriv() const { return norms_.jackknife_deriv; }
    const KernelNorms& norms() const { return norms_; }
    NormSupport support_convention() const { return support_; }

private:
    Fn kernel_;
    Fn deriv_;
    NormSupport support_;
    KernelNorms norms_;
};

// Shared default kernel (the quartic kernel with full-support norms);
// constructed once, reused by detector configs.
const std::shared_ptr<const KernelSpec>& default_quartic();

// K(x) = (15/16)(1-x^2)^2 on [-1, 1], 0 outside.
double quartic_kernel(double x);
double quartic_kernel_deriv(double x);

double jackknife_kernel(const KernelSpec& spec, double x);

// The three L2 norms of (K, K*, (K*)') by adaptive composite Simpson
// quadrature (>= 4097 nodes, refined until successive estimates differ by
// less than 1e-8). Throws NonConvergence if refinement stalls.
KernelNorms kernel_norms(const std::function<double(double)>& kernel,
                         const std::function<double(double)>& kernel_deriv = nullptr,
                         NormSupport support = NormSupport::Full);

// l_n = sqrt(2 log(T ||(K*)'||_2 / (2 pi h ||K*||_2))). Requires the log
// argument > 1 (otherwise the calibration is invalid and DomainError is thrown).
double scaling_sequence(int time_units, double bandwidth, const KernelSpec& spec);

}  // namespace relevmon
