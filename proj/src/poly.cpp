#include "shapeinv/poly.hpp"

#include <algorithm>
#include <sstream>

namespace shapeinv {

namespace {
const Rational kZero{};
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rational c) {
    Poly p;
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
}

Poly Poly::variable() { return from_coeffs({Rational(0), Rational(1)}); }

Poly Poly::from_coeffs(std::initializer_list<Rational> coeffs) {
    return Poly(std::vector<Rational>(coeffs));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly{};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(k) * c_[k];
    return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

std::vector<double> Poly::coeffs_double() const {
    std::vector<double> d(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] = to_double(c_[k]);
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly{};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Rational> r(c_);
    for (auto& c : r) c = -c;
    return Poly(std::move(r));
}

Poly Poly::negate_variable() const {
    std::vector<Rational> r(c_);
    for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
    return Poly(std::move(r));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> r(p.coeffs().begin(), p.coeffs().end());
    for (auto& c : r) c *= s;
    return Poly(std::move(r));
}

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeff(k);
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        Rational a = abs(c);
        if (k == 0 || a != 1) out << rational_to_string(a);
        if (k > 0) {
            if (a != 1) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

double eval_coeffs(std::span<const double> coeffs, double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<double> derive_coeffs(std::span<const double> coeffs) {
    if (coeffs.size() <= 1) return {};
    std::vector<double> d(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs[k];
    return d;
}

}  // namespace shapeinv
