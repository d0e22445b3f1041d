#include "netload/order.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace netload {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

Rational rational_from_double(double x, long long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite exponent");
    const bool neg = x < 0;
    double v = neg ? -x : x;
    // continued-fraction convergents p/q, q <= max_den
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        const double a_f = std::floor(frac);
        if (a_f > 9.0e18) break;
        const long long a = static_cast<long long>(a_f);
        const long long p2 = a * p1 + p0;
        const long long q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (std::fabs(v - static_cast<double>(p1) / static_cast<double>(q1)) < 1e-12) break;
        const double rem = frac - a_f;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    return Rational(neg ? -p1 : p1, q1);
}

AsymptoticOrder operator*(const AsymptoticOrder& a, const AsymptoticOrder& b) {
    const BoundKind bound =
        (a.bound == BoundKind::Omega || b.bound == BoundKind::Omega) ? BoundKind::Omega
                                                                     : BoundKind::Theta;
    return AsymptoticOrder{a.n_exp + b.n_exp, a.log_exp + b.log_exp, bound};
}

double order_eval(const AsymptoticOrder& o, int n) {
    if (n < 3) throw std::invalid_argument("log regime undefined");
    const double nn = static_cast<double>(n);
    return std::pow(nn, o.n_exp.to_double()) * std::pow(std::log(nn), o.log_exp.to_double());
}

namespace {

std::string exp_suffix(const Rational& e) {
    if (e == Rational(1)) return "";
    if (e.den == 1 && e.num > 1) return "^" + e.str();
    return "^{" + e.str() + "}";
}

} // namespace

std::string to_string(const AsymptoticOrder& o) {
    std::string body;
    if (o.n_exp != Rational(0)) body = "n" + exp_suffix(o.n_exp);
    if (o.log_exp != Rational(0)) {
        if (!body.empty()) body += " * ";
        body += "log(n)" + exp_suffix(o.log_exp);
    }
    if (body.empty()) body = "1";
    return std::string(o.bound == BoundKind::Theta ? "Theta(" : "Omega(") + body + ")";
}

} // namespace netload
