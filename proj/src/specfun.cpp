#include "shapeinv/specfun.hpp"

#include "shapeinv/errors.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace shapeinv {

namespace {

std::optional<int> as_nonpositive_int(double a) {
    if (a > 0.5) return std::nullopt;
    double r = std::round(a);
    if (std::abs(a - r) < 1e-12 * (1.0 + std::abs(a))) {
        int n = static_cast<int>(-r);
        if (n >= 0) return n;
    }
    return std::nullopt;
}

// Direct Kummer series; terminates when a is a nonpositive integer.
double hyp1f1_raw(double a, double b, double z, const SeriesConfig& cfg) {
    if (as_nonpositive_int(b)) throw DomainError("1F1: b is a nonpositive integer");
    if (auto n = as_nonpositive_int(a)) {
        double term = 1.0, sum = 1.0;
        for (int k = 0; k < *n; ++k) {
            term *= (a + k) / (b + k) * z / (k + 1);
            sum += term;
        }
        return sum;
    }
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        term *= (a + k) / (b + k) * z / (k + 1);
        sum += term;
        if (std::abs(term) <= cfg.rel_tol * std::abs(sum) && k >= 1) return sum;
    }
    throw NonConvergence("1F1 series did not converge", std::abs(term) / std::abs(sum));
}

int gamma_sign(double x) {
    if (x > 0) return 1;
    int k = static_cast<int>(std::ceil(-x));
    return (k % 2 == 0) ? 1 : -1;
}

}  // namespace

Poly laguerre(int n, const Rational& alpha) {
    if (n < 0) throw InvalidParams("laguerre: n must be nonnegative");
    Poly prev = Poly::constant(Rational(1));
    if (n == 0) return prev;
    // L_1 = 1 + alpha - t
    Poly cur = Poly::from_coeffs({Rational(1) + alpha, Rational(-1)});
    const Poly t = Poly::variable();
    for (int k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k+1+alpha - t) L_k - (k+alpha) L_{k-1}
        Poly next = (Poly::constant(Rational(2 * k + 1) + alpha) - t) * cur -
                    (Rational(k) + alpha) * prev;
        next = Rational(1, k + 1) * next;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly laguerre_neg_arg(int n, const Rational& alpha) {
    return laguerre(n, alpha).negate_variable();
}

Poly jacobi(int n, const Rational& a, const Rational& b) {
    if (n < 0) throw InvalidParams("jacobi: n must be nonnegative");
    // P_n^{(a,b)}(y) = sum_k (-n)_k (n+a+b+1)_k (a+k+1)_{n-k} / (k! n!) * ((1-y)/2)^k
    // This form has no parameter-dependent divisions, so it stays exact for the
    // negative half-integer parameters the extended families need.
    auto poch = [](const Rational& x, int m) {
        Rational r(1);
        for (int i = 0; i < m; ++i) r *= x + Rational(i);
        return r;
    };
    Rational nfact(1);
    for (int i = 2; i <= n; ++i) nfact *= i;
    const Poly w = Poly::from_coeffs({Rational(1, 2), Rational(-1, 2)});  // (1-y)/2
    Poly wk = Poly::constant(Rational(1));
    Poly sum;
    Rational kfact(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) kfact *= k;
        Rational c = poch(Rational(-n), k) * poch(Rational(n) + a + b + 1, k) *
                     poch(a + Rational(k + 1), n - k) / (kfact * nfact);
        sum = sum + c * wk;
        wk = wk * w;
    }
    if (sum.degree() < n) {
        std::ostringstream msg;
        msg << "jacobi: degree collapse for n=" << n << " a=" << rational_to_string(a)
            << " b=" << rational_to_string(b);
        throw DegenerateParameters(msg.str());
    }
    return sum;
}

double hyp1f1(double a, double b, double z, const SeriesConfig& cfg) {
    if (cfg.rel_tol <= 0 || cfg.max_terms < 2) throw InvalidParams("1F1: bad SeriesConfig");
    if (z < 0 && !as_nonpositive_int(a)) {
        // Kummer transform avoids the alternating-series cancellation at z << 0.
        return std::exp(z) * hyp1f1_raw(b - a, b, -z, cfg);
    }
    return hyp1f1_raw(a, b, z, cfg);
}

double hyp2f1(double a, double b, double c, double z, const SeriesConfig& cfg) {
    if (cfg.rel_tol <= 0 || cfg.max_terms < 2) throw InvalidParams("2F1: bad SeriesConfig");
    if (as_nonpositive_int(c)) throw DomainError("2F1: c is a nonpositive integer");
    auto na = as_nonpositive_int(a);
    auto nb = as_nonpositive_int(b);
    if (na || nb) {
        int n = na && nb ? std::min(*na, *nb) : (na ? *na : *nb);
        double term = 1.0, sum = 1.0;
        for (int k = 0; k < n; ++k) {
            term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
            sum += term;
        }
        return sum;
    }
    if (std::abs(z) > 1.0 - kHyp2f1Margin)
        throw DomainError("2F1: |z| exceeds 1 - margin");
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
        sum += term;
        if (std::abs(term) <= cfg.rel_tol * std::abs(sum) && k >= 1) return sum;
    }
    throw NonConvergence("2F1 series did not converge", std::abs(term) / std::abs(sum));
}

double hyp1f1_derivative(double a, double b, double z, const SeriesConfig& cfg) {
    return a / b * hyp1f1(a + 1, b + 1, z, cfg);
}

double hyp2f1_derivative(double a, double b, double c, double z, const SeriesConfig& cfg) {
    return a * b / c * hyp2f1(a + 1, b + 1, c + 1, z, cfg);
}

double hyp_derivative(HypKind kind, std::span<const double> params, double z,
                      const SeriesConfig& cfg) {
    if (kind == HypKind::OneF1) {
        if (params.size() != 2) throw InvalidParams("hyp_derivative: 1F1 needs {a, b}");
        return hyp1f1_derivative(params[0], params[1], z, cfg);
    }
    if (params.size() != 3) throw InvalidParams("hyp_derivative: 2F1 needs {a, b, c}");
    return hyp2f1_derivative(params[0], params[1], params[2], z, cfg);
}

double gamma_ratio(std::span<const double> num_args, std::span<const double> den_args) {
    double log_sum = 0.0;
    int sign = 1;
    for (double x : num_args) {
        if (as_nonpositive_int(x)) throw DomainError("gamma_ratio: pole argument");
        log_sum += std::lgamma(x);
        sign *= gamma_sign(x);
    }
    for (double x : den_args) {
        if (as_nonpositive_int(x)) throw DomainError("gamma_ratio: pole argument");
        log_sum -= std::lgamma(x);
        sign *= gamma_sign(x);
    }
    return sign * std::exp(log_sum);
}

}  // namespace shapeinv
