#include "relevmon/kernels.hpp"

#include <cmath>
#include <utility>

namespace relevmon {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Composite Simpson over [a, b], refined by node doubling until two
// successive estimates agree to 1e-8 absolute.
double simpson_refined(const std::function<double(double)>& f, double a, double b) {
    constexpr double tol = 1e-8;
    int intervals = 4096;  // 4097 nodes
    auto simpson = [&](int m) {
        const double h = (b - a) / m;
        double odd = 0.0, even = 0.0;
        for (int i = 1; i < m; i += 2) odd += f(a + i * h);
        for (int i = 2; i < m; i += 2) even += f(a + i * h);
        return (f(a) + f(b) + 4.0 * odd + 2.0 * even) * h / 3.0;
    };
    double prev = simpson(intervals);
    for (int round = 0; round < 8; ++round) {
        intervals *= 2;
        const double cur = simpson(intervals);
        if (std::abs(cur - prev) < tol) return cur;
        prev = cur;
    }
    throw NonConvergence("kernel_norms: quadrature did not reach 1e-8");
}

double jackknife_of(const std::function<double(double)>& k, double x) {
    return 2.0 * kSqrt2 * k(kSqrt2 * x) - k(x);
}

}  // namespace

double quartic_kernel(double x) {
    if (std::abs(x) > 1.0) return 0.0;
    const double u = 1.0 - x * x;
    return 0.9375 * u * u;  // 15/16
}

double quartic_kernel_deriv(double x) {
    if (std::abs(x) > 1.0) return 0.0;
    return -3.75 * x * (1.0 - x * x);  // 15/4
}

KernelNorms kernel_norms(const std::function<double(double)>& kernel,
                         const std::function<double(double)>& kernel_deriv,
                         NormSupport support) {
    const double lo = (support == NormSupport::Full) ? -1.0 : 0.0;

    auto kstar = [&](double x) { return jackknife_of(kernel, x); };
    auto kstar_deriv = [&](double x) {
        if (kernel_deriv) return 4.0 * kernel_deriv(kSqrt2 * x) - kernel_deriv(x);
        const double step = 1e-5;
        return (kstar(x + step) - kstar(x - step)) / (2.0 * step);
    };

    KernelNorms n;
    n.base = std::sqrt(simpson_refined([&](double x) { const double v = kernel(x); return v * v; }, lo, 1.0));
    n.jackknife = std::sqrt(simpson_refined([&](double x) { const double v = kstar(x); return v * v; }, lo, 1.0));
    n.jackknife_deriv =
        std::sqrt(simpson_refined([&](double x) { const double v = kstar_deriv(x); return v * v; }, lo, 1.0));
    if (!(n.base > 0.0 && n.jackknife > 0.0 && n.jackknife_deriv > 0.0))
        throw DomainError("kernel_norms: norms must be strictly positive");
    return n;
}

KernelSpec::KernelSpec(Fn kernel, Fn kernel_deriv, NormSupport support)
    : kernel_(std::move(kernel)), deriv_(std::move(kernel_deriv)), support_(support) {
    norms_ = kernel_norms(kernel_, deriv_, support_);
}

KernelSpec KernelSpec::quartic(NormSupport support) {
    return KernelSpec(&quartic_kernel, &quartic_kernel_deriv, support);
}

double KernelSpec::jackknife(double x) const { return jackknife_of(kernel_, x); }

double KernelSpec::jackknife_deriv(double x) const {
    if (deriv_) return 4.0 * deriv_(kSqrt2 * x) - deriv_(x);
    const double step = 1e-5;
    return (jackknife(x + step) - jackknife(x - step)) / (2.0 * step);
}

const std::shared_ptr<const KernelSpec>& default_quartic() {
    static const std::shared_ptr<const KernelSpec> spec =
        std::make_shared<const KernelSpec>(KernelSpec::quartic());
    return spec;
}

double jackknife_kernel(const KernelSpec& spec, double x) { return spec.jackknife(x); }

double scaling_sequence(int time_units, double bandwidth, const KernelSpec& spec) {
    if (time_units < 1) throw DomainError("scaling_sequence: T must be >= 1");
    if (!(bandwidth > 0.0)) throw DomainError("scaling_sequence: bandwidth must be positive");
    const double arg = time_units * spec.norm_jackknife_deriv() /
                       (2.0 * M_PI * bandwidth * spec.norm_jackknife());
    if (!(arg > 1.0))
        throw DomainError("scaling_sequence: log argument <= 1 (bandwidth too large for T)");
    return std::sqrt(2.0 * std::log(arg));
}

}  // namespace relevmon
