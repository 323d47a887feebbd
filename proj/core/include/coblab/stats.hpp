#pragma once

#include <vector>

namespace coblab {

// Regularized upper incomplete gamma Q(a, x); series for x < a+1,
// continued fraction otherwise.
double gamma_q(double a, double x);

// Chi-square goodness-of-fit p-value for observed counts against a
// uniform expectation.
struct ChiSquare {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};
ChiSquare chi_square_uniform(const std::vector<long>& observed);

struct WilsonInterval {
    double center = 0.0;
    double low = 0.0;
    double high = 0.0;
};
// 95% Wilson score interval for a binomial proportion.
WilsonInterval wilson95(long successes, long trials);

}  // namespace coblab
