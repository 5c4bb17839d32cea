#pragma once

#include "shapeinv/poly.hpp"

#include <span>

namespace shapeinv {

struct SeriesConfig {
    double rel_tol = 1e-14;
    int max_terms = 400;
};

/// 2F1 is evaluated only for |z| <= 1 - kHyp2f1Margin (non-terminating case).
inline constexpr double kHyp2f1Margin = 0.05;

/// Coefficients of L_n^{(alpha)}(t) in t, built by the three-term recurrence.
Poly laguerre(int n, const Rational& alpha);

/// Coefficients of L_n^{(alpha)}(-z) in z.
Poly laguerre_neg_arg(int n, const Rational& alpha);

/// Coefficients of P_n^{(a,b)}(y) in y.
/// Throws DegenerateParameters when the leading coefficient vanishes.
Poly jacobi(int n, const Rational& a, const Rational& b);

double hyp1f1(double a, double b, double z, const SeriesConfig& cfg = {});
double hyp2f1(double a, double b, double c, double z, const SeriesConfig& cfg = {});

/// d/dz 1F1(a;b;z) = (a/b) 1F1(a+1;b+1;z)
double hyp1f1_derivative(double a, double b, double z, const SeriesConfig& cfg = {});
/// d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z)
double hyp2f1_derivative(double a, double b, double c, double z, const SeriesConfig& cfg = {});

enum class HypKind { OneF1, TwoF1 };

/// params = {a, b} for 1F1 and {a, b, c} for 2F1.
double hyp_derivative(HypKind kind, std::span<const double> params, double z,
                      const SeriesConfig& cfg = {});

/// Prod Gamma(num) / Prod Gamma(den), via log-Gamma differences.
double gamma_ratio(std::span<const double> num_args, std::span<const double> den_args);

}  // namespace shapeinv
