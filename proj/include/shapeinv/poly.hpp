#pragma once

#include "shapeinv/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace shapeinv {

/// Dense univariate polynomial over Rational, kept in canonical form
/// (no trailing zero coefficients; the zero polynomial has no coefficients
/// and degree() == kZeroDegree).
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(Rational c);
    static Poly variable();
    /// coeffs[k] is the coefficient of z^k.
    static Poly from_coeffs(std::initializer_list<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of z^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    std::span<const Rational> coeffs() const { return c_; }

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    double eval_double(double x) const;
    std::vector<double> coeffs_double() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const = default;

    /// p(-z)
    Poly negate_variable() const;

private:
    void trim();
    std::vector<Rational> c_;
};

Poly operator*(const Rational& s, const Poly& p);

std::string poly_to_string(const Poly& p, const std::string& var = "z");

/// Horner evaluation of a double-coefficient polynomial (index = degree).
double eval_coeffs(std::span<const double> coeffs, double x);

/// Formal derivative of a double-coefficient polynomial.
std::vector<double> derive_coeffs(std::span<const double> coeffs);

}  // namespace shapeinv
