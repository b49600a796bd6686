#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "relevmon/errors.hpp"

namespace relevmon {

// An observed quality trajectory X_{1,n}, ..., X_{Tn,n}: n observations per
// time unit over T units; observation i (1-based) sits at time i/n.
struct QualitySeries {
    std::vector<double> values;
    int n = 0;
    int T = 0;

    QualitySeries() = default;
    QualitySeries(std::vector<double> v, int n_per_unit, int time_units)
        : values(std::move(v)), n(n_per_unit), T(time_units) {
        validate();
    }

    int length() const { return static_cast<int>(values.size()); }
    double time_of(int i) const { return static_cast<double>(i) / n; }  // i is 1-based

    void validate() const {
        if (n < 1 || T < 1) throw DomainError("QualitySeries: n and T must be >= 1");
        if (length() != n * T) throw DomainError("QualitySeries: length must equal n*T");
        for (double v : values)
            if (!std::isfinite(v)) throw DomainError("QualitySeries: values must be finite");
    }
};

}  // namespace relevmon
