#pragma once

// Univariate polynomials and rational functions with exact rational
// coefficients. Evaluation is exact at rational points and uses a cached
// double copy of the coefficients at floating-point points.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rfcone/numerics/errors.hpp"

namespace rfcone {

using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion; every finite double is a dyadic rational.
inline Rational to_rational(double x) { return Rational(x); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Decimal literal such as "1.958" converted without binary rounding.
inline Rational rational_from_decimal(const std::string& text) {
    std::string digits;
    int scale = 0;
    bool seen_point = false;
    std::size_t start = 0;
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        start = 1;
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '.' && !seen_point) {
            seen_point = true;
        } else if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            if (seen_point) ++scale;
        } else {
            throw std::invalid_argument("not a decimal literal: " + text);
        }
    }
    if (digits.empty()) throw std::invalid_argument("not a decimal literal: " + text);
    boost::multiprecision::cpp_int num(digits.c_str());
    boost::multiprecision::cpp_int den = boost::multiprecision::pow(boost::multiprecision::cpp_int(10), scale);
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

class Polynomial {
public:
    Polynomial() = default;

    /// Coefficients constant term first.
    explicit Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
        normalize();
    }

    Polynomial(std::initializer_list<Rational> coefficients)
        : coeffs_(coefficients.begin(), coefficients.end()) {
        normalize();
    }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    static Polynomial monomial(const Rational& c, std::size_t power) {
        std::vector<Rational> cs(power + 1, Rational(0));
        cs[power] = c;
        return Polynomial(std::move(cs));
    }

    /// The identity polynomial x.
    static Polynomial x() { return monomial(Rational(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    Rational coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double operator()(double x) const noexcept {
        double acc = 0.0;
        for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
        return Polynomial(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        normalize();
        return *this;
    }

    Polynomial& operator*=(const Rational& c) {
        for (auto& q : coeffs_) q *= c;
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
            if (p.coeffs_[k] == 0) continue;
            if (!first) os << " + ";
            os << "(" << p.coeffs_[k] << ")";
            if (k >= 1) os << "*x";
            if (k >= 2) os << "^" << k;
            first = false;
        }
        return os;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        approx_.resize(coeffs_.size());
        std::transform(coeffs_.begin(), coeffs_.end(), approx_.begin(), to_double);
    }

    std::vector<Rational> coeffs_;
    std::vector<double> approx_;
};

/// Quotient of two polynomials; no gcd reduction is performed.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}

    RationalFunction(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator polynomial");
    }

    /* implicit */ RationalFunction(Polynomial p) : RationalFunction(std::move(p), Polynomial::constant(1)) {}

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    Rational operator()(const Rational& x) const {
        Rational d = den_(x);
        if (d == 0) throw DomainError("RationalFunction evaluated at a pole");
        return num_(x) / d;
    }

    /// Returns +-inf or nan at poles.
    double operator()(double x) const noexcept { return num_(x) / den_(x); }

    RationalFunction derivative() const {
        return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

private:
    Polynomial num_;
    Polynomial den_;
};

inline double poly_eval(const Polynomial& p, double x) { return p(x); }
inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

}  // namespace rfcone
