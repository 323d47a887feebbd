#include "coblab/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace coblab {

namespace {

double gamma_p_series(double a, double x) {
    double sum = 1.0 / a, term = sum, ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

ChiSquare chi_square_uniform(const std::vector<long>& observed) {
    ChiSquare result;
    const int k = static_cast<int>(observed.size());
    if (k < 2) throw std::invalid_argument("chi_square_uniform: need >= 2 bins");
    long total = 0;
    for (long o : observed) total += o;
    const double expected = static_cast<double>(total) / k;
    for (long o : observed) {
        const double diff = static_cast<double>(o) - expected;
        result.statistic += diff * diff / expected;
    }
    result.dof = k - 1;
    result.p_value = gamma_q(result.dof / 2.0, result.statistic / 2.0);
    return result;
}

WilsonInterval wilson95(long successes, long trials) {
    WilsonInterval interval;
    if (trials <= 0) return interval;
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    interval.center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    interval.low = interval.center - half;
    interval.high = interval.center + half;
    return interval;
}

}  // namespace coblab
