#include "cylbif/numerics.hpp"

#include "cylbif/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace cylbif::numerics {

RootResult find_root_bracketed(const ScalarFunction& f, double a, double b, double fa, double fb,
                               const RootOptions& options) {
    if (a > b) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    if (fa == 0.0) return {a, a, a, 0};
    if (fb == 0.0) return {b, b, b, 0};
    if ((fa > 0.0) == (fb > 0.0) || std::isnan(fa) || std::isnan(fb)) {
        throw NumericalFailure("find_root_bracketed: no sign change on bracket");
    }

    double x0 = a, f0 = fa;
    double x1 = b, f1 = fb;
    double reference_width = b - a;
    int steps_without_halving = 0;
    int it = 0;
    for (; it < options.max_iterations; ++it) {
        const double tol = std::max(options.absolute_tolerance,
                                    options.relative_tolerance * std::max(std::abs(a), std::abs(b)));
        if (b - a <= tol) break;

        bool bisect = steps_without_halving >= 2 || f1 == f0;
        double s = 0.0;
        if (!bisect) {
            s = x1 - f1 * (x1 - x0) / (f1 - f0);
            if (!(s > a && s < b)) {
                bisect = true;
            } else {
                // Keep secant iterates off the bracket ends so both sides close.
                const double guard = 0.5 * tol;
                s = std::clamp(s, a + guard, b - guard);
            }
        }
        if (bisect) s = a + 0.5 * (b - a);

        const double fs = f(s);
        if (std::isnan(fs)) throw NumericalFailure("find_root_bracketed: function returned NaN");
        x0 = x1;
        f0 = f1;
        x1 = s;
        f1 = fs;
        if (fs == 0.0) return {s, s, s, it + 1};
        if ((fs > 0.0) == (fa > 0.0)) {
            a = s;
            fa = fs;
        } else {
            b = s;
            fb = fs;
        }
        if (b - a <= 0.5 * reference_width) {
            reference_width = b - a;
            steps_without_halving = 0;
        } else {
            ++steps_without_halving;
        }
    }
    const double root = std::abs(fa) <= std::abs(fb) ? a : b;
    return {root, a, b, it};
}

DerivativeEstimate ridders_derivative(const ScalarFunction& f, double x, double h0) {
    if (!(h0 > 0.0)) throw DomainError("ridders_derivative: initial step must be positive");
    constexpr int ntab = 10;
    constexpr double con = 1.4;
    constexpr double con2 = con * con;
    constexpr double safe = 2.0;

    double table[ntab][ntab];
    double h = h0;
    table[0][0] = (f(x + h) - f(x - h)) / (2.0 * h);
    double err = std::numeric_limits<double>::max();
    double best = table[0][0];
    double best_step = h;
    for (int i = 1; i < ntab; ++i) {
        h /= con;
        table[0][i] = (f(x + h) - f(x - h)) / (2.0 * h);
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            table[j][i] = (table[j - 1][i] * fac - table[j - 1][i - 1]) / (fac - 1.0);
            fac *= con2;
            const double errt = std::max(std::abs(table[j][i] - table[j - 1][i]),
                                         std::abs(table[j][i] - table[j - 1][i - 1]));
            if (errt <= err) {
                err = errt;
                best = table[j][i];
                best_step = h;
            }
        }
        if (std::abs(table[i][i] - table[i - 1][i - 1]) >= safe * err) break;
    }
    return {best, err, best_step};
}

double polyfit_derivative(const ScalarFunction& f, double x, double h, int points, int degree) {
    if (points <= degree || degree < 1 || !(h > 0.0)) {
        throw DomainError("polyfit_derivative: need points > degree >= 1 and h > 0");
    }
    const int n = degree + 1;
    // Normal equations in the scaled variable u = (t - x)/h on [-1, 1].
    std::vector<double> ata(n * n, 0.0);
    std::vector<double> atb(n, 0.0);
    for (int p = 0; p < points; ++p) {
        const double u = -1.0 + 2.0 * p / (points - 1);
        const double y = f(x + u * h);
        std::vector<double> powers(n, 1.0);
        for (int c = 1; c < n; ++c) powers[c] = powers[c - 1] * u;
        for (int r = 0; r < n; ++r) {
            atb[r] += powers[r] * y;
            for (int c = 0; c < n; ++c) ata[r * n + c] += powers[r] * powers[c];
        }
    }
    // Gaussian elimination with partial pivoting.
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(ata[r * n + col]) > std::abs(ata[pivot * n + col])) pivot = r;
        }
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(ata[col * n + c], ata[pivot * n + c]);
            std::swap(atb[col], atb[pivot]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double m = ata[r * n + col] / ata[col * n + col];
            for (int c = col; c < n; ++c) ata[r * n + c] -= m * ata[col * n + c];
            atb[r] -= m * atb[col];
        }
    }
    std::vector<double> coef(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = atb[r];
        for (int c = r + 1; c < n; ++c) s -= ata[r * n + c] * coef[c];
        coef[r] = s / ata[r * n + r];
    }
    return coef[1] / h;
}

}  // namespace cylbif::numerics
