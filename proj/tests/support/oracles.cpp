#include "oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

long double series(double nu, double x, int sign) {
    const long double h = 0.5L * x;
    long double term = std::pow(h, static_cast<long double>(nu)) / std::tgamma(static_cast<long double>(nu) + 1.0L);
    long double sum = term;
    for (int m = 1; m < 400; ++m) {
        term *= sign * h * h / (m * (m + static_cast<long double>(nu)));
        sum += term;
        if (std::abs(term) < 1e-22L * std::abs(sum) && m > 5) break;
    }
    return sum;
}

}  // namespace

double series_j(double nu, double x) { return static_cast<double>(series(nu, x, -1)); }

double series_i(double nu, double x) { return static_cast<double>(series(nu, x, 1)); }

double bisect(const std::function<double(double)>& f, double a, double b) {
    double fa = f(a);
    if ((fa > 0) == (f(b) > 0)) throw std::invalid_argument("bisect: no sign change");
    for (int n = 0; n < 200; ++n) {
        const double c = 0.5 * (a + b);
        if (c <= a || c >= b) break;
        const double fc = f(c);
        if (fc == 0.0) return c;
        if ((fc > 0) == (fa > 0)) {
            a = c;
            fa = fc;
        } else {
            b = c;
        }
    }
    return 0.5 * (a + b);
}

double series_j_zero(double nu, int m) {
    auto f = [nu](double x) { return series_j(nu, x); };
    int found = 0;
    double prev = 1e-3, fprev = f(prev);
    for (double x = prev + 0.01; x < 25.0; x += 0.01) {
        const double fx = f(x);
        if ((fx > 0) != (fprev > 0) && ++found == m) return bisect(f, prev, x);
        prev = x;
        fprev = fx;
    }
    throw std::out_of_range("series_j_zero: zero beyond scan range");
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, tol);
}

double richardson_derivative(const std::function<double(double)>& f, double x, double h) {
    const double d1 = (f(x + h) - f(x - h)) / (2 * h);
    const double d2 = (f(x + h / 2) - f(x - h / 2)) / h;
    return (4 * d2 - d1) / 3;
}

double sphere_area(int dim) { return 2 * std::pow(M_PI, dim / 2.0) / std::tgamma(dim / 2.0); }

}  // namespace oracle
