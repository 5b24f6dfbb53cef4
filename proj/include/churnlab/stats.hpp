#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace churnlab {

// Regularized lower incomplete gamma P(s, x), series expansion for
// x < s + 1 and a continued fraction otherwise.
double regularized_gamma_p(double s, double x);

// Chi-squared CDF with `dof` degrees of freedom.
double chi_squared_cdf(double x, double dof);

// Inverse chi-squared CDF, solved by bisection on chi_squared_cdf.
double chi_squared_quantile(double p, double dof);

// Quantile with linear interpolation between order statistics
// (position q * (n - 1)). `sorted` must be ascending and non-empty.
double quantile_sorted(const std::vector<double>& sorted, double q);

double mean(const std::vector<double>& v);

// population standard deviation (divide by n)
double population_stddev(const std::vector<double>& v);

double median(std::vector<double> v);

inline double sigmoid(double x) {
    if (x >= 0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double logit(double p);

}  // namespace churnlab
